#pragma once

#include <vector>

#include "psv/rational.hpp"

namespace psv {

/// Incremental reduced row echelon form over exact rationals. Rows are kept
/// fully reduced with pivot entries 1 and pivot columns strictly increasing,
/// so the stored matrix is the canonical RREF of the span.
class RrefMatrix {
 public:
  RrefMatrix() = default;
  explicit RrefMatrix(int ncols) : ncols_(ncols) {}

  int cols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

  // Reduces v against the span; inserts the remainder when nonzero.
  // Returns true when the rank grew.
  bool insert(std::vector<Rat> v);

  bool reduces_to_zero(std::vector<Rat> v) const;

 private:
  void reduce(std::vector<Rat>& v) const;

  int ncols_ = 0;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivots_;
};

}  // namespace psv
