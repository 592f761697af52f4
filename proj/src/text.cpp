#include "psv/text.hpp"

#include <cctype>
#include <sstream>

namespace psv {

std::string to_text(const RootSystemData& rs, const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  size_t i = 0;
  while (i < m.factors.size()) {
    size_t j = i;
    while (j < m.factors.size() && m.factors[j] == m.factors[i]) ++j;
    if (i) os << "*";
    const auto& coords = rs.positive_roots[m.factors[i].root];
    os << "x[";
    for (size_t t = 0; t < coords.size(); ++t) {
      if (t) os << ",";
      os << coords[t];
    }
    os << "](" << m.factors[i].mode << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string to_text(const RootSystemData& rs, const AlgElem& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms) {
    Rat coef = c;
    if (first) {
      if (coef < 0) {
        os << "-";
        coef = -coef;
      }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    if (m.is_one()) {
      os << rat_to_string(coef);
    } else {
      if (coef != 1) os << rat_to_string(coef) << "*";
      os << to_text(rs, m);
    }
  }
  return os.str();
}

std::string to_text(const GradedIndex& g) {
  std::ostringstream os;
  os << "w" << g.weight << "_r";
  for (size_t i = 0; i < g.charges.size(); ++i) {
    if (i) os << "-";
    os << g.charges[i];
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const Algebra& alg, const std::string& s) : alg_(alg), s_(s) {}

  AlgElem parse() {
    AlgElem e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const Algebra& alg_;
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  long parse_int() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Rat parse_rational() {
    long num = parse_int();
    if (eat('/')) {
      size_t at = pos_;
      long den = parse_int();
      if (den <= 0) throw ParseError(at, "denominator must be positive");
      return Rat(num, den);
    }
    return Rat(num);
  }

  AlgElem parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    AlgElem acc = parse_term();
    if (neg) acc *= Rat(-1);
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        AlgElem t = parse_term();
        if (c == '-') t *= Rat(-1);
        acc += t;
      } else {
        break;
      }
    }
    return acc;
  }

  AlgElem parse_term() {
    AlgElem acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(alg_, acc, parse_factor());
      } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = multiply(alg_, acc, parse_factor());  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  AlgElem parse_factor() {
    AlgElem base = parse_primary();
    if (eat('^')) {
      size_t at = pos_;
      long e = parse_int();
      if (e < 0) throw ParseError(at, "exponent must be nonnegative");
      AlgElem acc = AlgElem::unit();
      for (long i = 0; i < e; ++i) acc = multiply(alg_, acc, base);
      return acc;
    }
    return base;
  }

  AlgElem parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      AlgElem e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == 'x') return parse_generator();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      Rat r = parse_rational();
      AlgElem e = AlgElem::unit();
      e *= r;
      return e;
    }
    fail("expected a generator, number, or '('");
  }

  AlgElem parse_generator() {
    skip_ws();
    ++pos_;  // 'x'
    if (!eat('[')) fail("expected '[' after 'x'");
    std::vector<int> coords;
    coords.push_back(static_cast<int>(parse_int()));
    while (eat(',')) coords.push_back(static_cast<int>(parse_int()));
    size_t at = pos_;
    if (!eat(']')) fail("expected ']'");
    if (static_cast<int>(coords.size()) != alg_.rank())
      throw ParseError(at, "root coordinate count does not match the rank");
    int root = alg_.rs.root_index(coords);
    if (root < 0) throw ParseError(at, "coordinates do not name a positive root");
    if (!eat('(')) fail("expected '(' before the mode");
    long mode = parse_int();
    if (!eat(')')) fail("expected ')' after the mode");
    return AlgElem::gen(root, static_cast<int>(mode));
  }
};

}  // namespace

AlgElem parse_elem(const Algebra& alg, const std::string& text) {
  return Parser(alg, text).parse();
}

}  // namespace psv
