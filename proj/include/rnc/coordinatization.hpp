#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rnc/bracket.hpp"
#include "rnc/rational.hpp"

namespace rnc {

// w x |J| matrix of exact rationals with labeled columns; the numeric
// instance of the generic coordinatization variables x_{ij}.
class CoordinateMatrix {
 public:
  CoordinateMatrix(int width, std::vector<Index> labels);

  int width() const { return width_; }
  const std::vector<Index>& labels() const { return labels_; }
  Rat& at(int row, Index label);              // row is 1-based
  const Rat& at(int row, Index label) const;  // row is 1-based

 private:
  int width_;
  std::vector<Index> labels_;
  std::map<Index, int> column_;
  std::vector<Rat> entries_;  // row-major
};

// Deterministic pseudo-random matrix; entries are rationals of bounded height.
CoordinateMatrix random_matrix(int width, const std::vector<Index>& labels,
                               std::uint64_t seed, long height = 100);

// Exact determinant of the w x w submatrix selected by the bracket's indices.
Rat evaluate_bracket(const Bracket& b, const CoordinateMatrix& M);

Rat evaluate_poly(const BracketPolynomial& p, const CoordinateMatrix& M);

// Multivariate polynomial in the variables x_{ij}, canonical form.
// A variable is the pair (row, column label); a monomial is the sorted list of
// (variable, exponent) pairs.
class SymbolicPolynomial {
 public:
  using Var = std::pair<int, Index>;
  using Monomial = std::vector<std::pair<Var, int>>;

  static SymbolicPolynomial zero() { return SymbolicPolynomial(); }
  static SymbolicPolynomial constant(Rat c);
  static SymbolicPolynomial variable(int row, Index col);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);
  SymbolicPolynomial& operator+=(const SymbolicPolynomial& q);
  bool operator==(const SymbolicPolynomial& q) const = default;

  Rat evaluate(const CoordinateMatrix& M) const;
  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

SymbolicPolynomial sym_mul(const SymbolicPolynomial& p,
                           const SymbolicPolynomial& q, size_t max_terms);

struct ExpansionLimitExceeded : std::runtime_error {
  ExpansionLimitExceeded()
      : std::runtime_error("symbolic expansion exceeded the size bound") {}
};

// Exact image of p under the generic coordinatization. Throws
// ExpansionLimitExceeded past max_terms monomials; callers then fall back to
// evaluation-based testing.
SymbolicPolynomial expand_symbolic(const BracketPolynomial& p,
                                   size_t max_terms = 10'000'000);

// Polynomial identity test by evaluation at random bounded-height rational
// matrices. "false" is certain; "true" holds with overwhelming probability.
bool is_syzygy_probabilistic(const BracketPolynomial& p, int trials,
                             std::uint64_t seed, long height = 100);

}  // namespace rnc
