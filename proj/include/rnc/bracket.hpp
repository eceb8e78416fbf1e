#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rnc/rational.hpp"

namespace rnc {

using Index = int;

// Canonical bracket: strictly increasing index sequence of fixed width.
struct Bracket {
  std::vector<Index> indices;

  int width() const { return static_cast<int>(indices.size()); }
  auto operator<=>(const Bracket&) const = default;
  std::string str() const;
};

// Result of normalizing an arbitrary index sequence: either a signed
// canonical bracket or zero (repeated index).
struct SignedBracket {
  int sign = 0;  // 0 encodes the zero bracket
  Bracket bracket;

  bool is_zero() const { return sign == 0; }
};

// Sorts the indices, tracking the permutation sign; repeated index gives zero.
SignedBracket normalize_bracket(const std::vector<Index>& indices);

// Product of brackets of common width, kept sorted (ascending by the term
// order below). The empty monomial is the constant 1.
struct BracketMonomial {
  std::vector<Bracket> brackets;

  static BracketMonomial from_unsorted(std::vector<Bracket> bs);
  int degree() const { return static_cast<int>(brackets.size()); }
  bool operator==(const BracketMonomial&) const = default;
  std::string str() const;
};

// Total term order: lexicographic on the sorted bracket sequences, brackets
// compared lexicographically on indices; a proper prefix is smaller.
std::strong_ordering compare_monomials(const BracketMonomial& a,
                                       const BracketMonomial& b);

struct MonomialLess {
  bool operator()(const BracketMonomial& a, const BracketMonomial& b) const {
    return compare_monomials(a, b) == std::strong_ordering::less;
  }
};

// Tableau condition: with brackets sorted, every index row is nondecreasing
// across consecutive brackets.
bool is_standard(const BracketMonomial& m);

// Exact-rational linear combination of bracket monomials of common width w,
// stored in canonical form (no zero coefficients).
class BracketPolynomial {
 public:
  explicit BracketPolynomial(int width);

  static BracketPolynomial zero(int width) { return BracketPolynomial(width); }
  static BracketPolynomial constant(int width, Rat c);
  static BracketPolynomial term(int width, BracketMonomial m, Rat c);
  // Single bracket, with sign folded in; zero bracket gives the zero poly.
  static BracketPolynomial from_bracket(const SignedBracket& sb, int width);

  int width() const { return width_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BracketMonomial, Rat, MonomialLess>& terms() const {
    return terms_;
  }
  Rat coefficient(const BracketMonomial& m) const;
  std::set<Index> support() const;

  void add_term(const BracketMonomial& m, const Rat& c);

  BracketPolynomial operator-() const;
  BracketPolynomial& operator+=(const BracketPolynomial& q);
  BracketPolynomial& operator-=(const BracketPolynomial& q);
  BracketPolynomial& operator*=(const Rat& c);
  bool operator==(const BracketPolynomial& q) const;

  std::string str() const;

 private:
  int width_;
  std::map<BracketMonomial, Rat, MonomialLess> terms_;
};

BracketPolynomial poly_add(const BracketPolynomial& p,
                           const BracketPolynomial& q);
BracketPolynomial poly_mul(const BracketPolynomial& p,
                           const BracketPolynomial& q);

inline BracketPolynomial operator+(BracketPolynomial p,
                                   const BracketPolynomial& q) {
  p += q;
  return p;
}
inline BracketPolynomial operator-(BracketPolynomial p,
                                   const BracketPolynomial& q) {
  p -= q;
  return p;
}
inline BracketPolynomial operator*(const BracketPolynomial& p,
                                   const BracketPolynomial& q) {
  return poly_mul(p, q);
}
inline BracketPolynomial operator*(BracketPolynomial p, const Rat& c) {
  p *= c;
  return p;
}

// Parses the textual grammar used by the CLI: signed sums of juxtaposed
// brackets with optional rational coefficients, e.g.
// "[123][145][246][356]-[124][135][236][456]" or "-2/3[1,10,12]".
BracketPolynomial parse_bracket_polynomial(const std::string& text);

}  // namespace rnc
