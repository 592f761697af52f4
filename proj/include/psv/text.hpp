#pragma once

#include <stdexcept>
#include <string>

#include "psv/upbw.hpp"

namespace psv {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// Canonical text forms: `x[c1,...,cn](m)` for a generator (root coordinates,
/// then mode), `*` or juxtaposition for products, `^` for powers, `+`/`-` and
/// rational coefficients `p/q` for sums. Every printed element parses back
/// equal.
std::string to_text(const RootSystemData& rs, const Monomial& m);
std::string to_text(const RootSystemData& rs, const AlgElem& a);

AlgElem parse_elem(const Algebra& alg, const std::string& text);

std::string to_text(const GradedIndex& g);

}  // namespace psv
