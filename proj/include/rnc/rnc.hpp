#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rnc/bracket.hpp"
#include "rnc/config.hpp"
#include "rnc/gc.hpp"

namespace rnc {

// A 6-subset I of {1..d+4} together with its increasing complement.
struct SubsetI {
  std::array<Index, 6> i;     // increasing
  std::vector<Index> ic;      // increasing, size d - 2

  static SubsetI make(const std::vector<Index>& subset, int d);
  std::string str() const;
};

std::vector<SubsetI> all_subsets(int d);

// The width-3 binomial phi_I on the index set I:
// [i1 i2 i3][i1 i4 i5][i2 i4 i6][i3 i5 i6] - [i1 i2 i4][i1 i3 i5][i2 i3 i6][i4 i5 i6].
BracketPolynomial phi(const SubsetI& I);

// psi_I via the complement substitution: each triple bracket [a b c] is
// replaced by (-1)^((a-1)+(b-2)+(c-3)) times the bracket on the complement of
// {a,b,c} in {1..d+4}. Width d+1; requires d >= 3.
BracketPolynomial psi_substitution(const SubsetI& I, int d);

// psi_I via successive lifts of phi_I by j_1, ..., j_{d-2}; width d+1.
BracketPolynomial psi_lifted(const SubsetI& I, int d);

// The step-0 Grassmann-Cayley condition
// (P_{i1}P_{i2} ^ P_{i4}P_{i5}P_{j..}) v (P_{i2}P_{i3} ^ P_{i5}P_{i6}P_{j..})
//   v (P_{i3}P_{i4} ^ P_{i6}P_{i1}P_{j..}) v P_{j1}...P_{j_{d-2}}
// in ambient d+1. d = 2 gives the Pascal expression (empty complement).
GCExpr gc_condition(const SubsetI& I, int d);

// The rewritten condition with the complement partitioned into I1, I2, I3
// joined into the three line factors and I4 joined at the end.
GCExpr gc_condition_partitioned(const SubsetI& I,
                                const std::array<std::vector<Index>, 4>& parts,
                                int d);

// True iff the coordinate matrix has rank <= d.
bool on_hyperplane(const PointConfiguration& config);

// True iff every (d+1)-subset of the points is linearly independent.
bool general_position(const PointConfiguration& config);

enum class CheckMethod { Algebraic, Geometric, Both };
enum class Verdict { InV, NotInV, HyperplaneCase };

std::string to_string(Verdict v);
std::string to_string(CheckMethod m);
std::optional<CheckMethod> method_from_string(const std::string& s);

struct SubsetResult {
  SubsetI I;
  std::optional<Rat> residue;                // algebraic
  std::optional<Rat> geometric_determinant;  // geometric, when non-degenerate
  bool degenerate = false;                   // some meet vanished
};

struct MembershipReport {
  int dimension = 0;
  int n = 0;
  bool on_hyperplane = false;
  bool general_position = false;
  std::vector<SubsetResult> subsets;
  Verdict verdict = Verdict::NotInV;
  // Set for d = 3, 4 hyperplane cases, where the hyperplane locus is known to
  // be contained in the curve locus and the verdict is advisory only.
  std::string advisory;
};

struct GeometricCheck {
  std::array<Extensor, 3> points;
  Rat determinant;
  bool degenerate = false;
};

// The synthetic incidence test: meets the three lines with the three
// hyperplanes and reports the determinant of the d+1 points
// Q1, Q2, Q3, P_{j1}, ..., P_{j_{d-2}}.
GeometricCheck geometric_check(const PointConfiguration& config,
                               const SubsetI& I);

// Full membership test for n = d+4 points; d = 2 uses the single Pascal
// equation, d >= 3 sweeps all C(d+4,6) subsets.
MembershipReport check_membership(const PointConfiguration& config,
                                  CheckMethod method = CheckMethod::Both);

// Columns (1, t, ..., t^d) per parameter (nullopt = the point at infinity),
// optionally followed by an invertible projective transform.
PointConfiguration sample_moment_curve(
    int d, const std::vector<std::optional<Rat>>& parameters,
    const std::optional<std::vector<std::vector<Rat>>>& transform = std::nullopt);

// Deterministic invertible (d+1)x(d+1) rational matrix.
std::vector<std::vector<Rat>> random_projective_transform(int d,
                                                          std::uint64_t seed,
                                                          long height = 5);

// Exact determinant / rank helpers over the rationals.
Rat rational_determinant(std::vector<std::vector<Rat>> a);
int rational_rank(std::vector<std::vector<Rat>> a);

}  // namespace rnc
