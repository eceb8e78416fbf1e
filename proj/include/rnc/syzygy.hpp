#pragma once

#include <string>
#include <vector>

#include "rnc/bracket.hpp"

namespace rnc {

// Sign of the permutation sending the increasing subset tau of {1..n} to the
// first |tau| slots and its complement to the rest, orders preserved.
int shuffle_sign(const std::vector<int>& tau, int n);

// The quadratic van der Waerden syzygy [[alpha beta* gamma]] of width w:
// sum over s-subsets tau of the positions of beta of
//   shuffle_sign(tau) [alpha beta_{tau^c}] [beta_tau gamma],
// with s = |alpha| + 1. Requires |beta| = w + 1 and |gamma| = w - s.
BracketPolynomial van_der_waerden(const std::vector<Index>& alpha,
                                  const std::vector<Index>& beta,
                                  const std::vector<Index>& gamma, int w);

// The lift homomorphism: appends the fresh index j to every bracket,
// raising the width by one. Requires j absent from p's support.
BracketPolynomial lift(const BracketPolynomial& p, Index j);

struct RewriteStep {
  std::string monomial;  // the non-standard monomial rewritten
  std::string syzygy;    // the van der Waerden syzygy used
};
using StraightenTrace = std::vector<RewriteStep>;

// Rewrites p into the unique representative of its bracket-ring class whose
// monomials are all standard. Always targets the term-order-largest
// non-standard monomial; each replacement is strictly smaller, so the
// rewrite terminates. The iteration cap signals an internal defect.
BracketPolynomial straighten(const BracketPolynomial& p,
                             StraightenTrace* trace = nullptr);

// Deterministic equality in the bracket ring: straighten(p - q) == 0.
bool bracket_equal(const BracketPolynomial& p, const BracketPolynomial& q);

}  // namespace rnc
