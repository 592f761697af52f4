#include "psv/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace psv {

void RrefMatrix::reduce(std::vector<Rat>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[pivots_[r]];
    if (f == 0) continue;
    Rat factor = f;  // pivot entry of row r is 1
    const auto& row = rows_[r];
    for (int c = pivots_[r]; c < ncols_; ++c)
      if (row[c] != 0) v[c] -= factor * row[c];
  }
}

bool RrefMatrix::insert(std::vector<Rat> v) {
  assert(static_cast<int>(v.size()) == ncols_);
  reduce(v);
  int piv = -1;
  for (int c = 0; c < ncols_; ++c)
    if (v[c] != 0) { piv = c; break; }
  if (piv < 0) return false;
  Rat inv = 1 / v[piv];
  for (int c = piv; c < ncols_; ++c)
    if (v[c] != 0) v[c] *= inv;
  // back-eliminate the new pivot column from existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat f = rows_[r][piv];
    if (f == 0) continue;
    for (int c = piv; c < ncols_; ++c)
      if (v[c] != 0) rows_[r][c] -= f * v[c];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  size_t idx = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RrefMatrix::reduces_to_zero(std::vector<Rat> v) const {
  assert(static_cast<int>(v.size()) == ncols_);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace psv
