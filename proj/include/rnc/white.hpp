#pragma once

#include <array>
#include <vector>

#include "rnc/config.hpp"
#include "rnc/rnc.hpp"

namespace rnc {

using Triple = std::array<int, 3>;

// Seven 3-subsets of {1..7} covering every pair exactly once (Steiner
// system S(2,3,7), the Fano plane), triples sorted lexicographically.
struct TripleSystem {
  std::array<Triple, 7> triples;
  bool operator==(const TripleSystem&) const = default;
};

bool is_steiner_system(const TripleSystem& s);

// All 30 Steiner triple systems on {1..7}.
std::vector<TripleSystem> fano_systems();

// Seven planes of P^3 as covectors (points of the dual space).
using DualConfiguration = PointConfiguration;

// For each triple {a,b,c} of the system, the plane through P_a, P_b, P_c as
// the covector of signed 3x3 minors. Planes are labeled in triple order.
DualConfiguration planes_from_triples(const PointConfiguration& config,
                                      const TripleSystem& system);

// Runs the d = 3 membership check on the dual configuration; points on a
// twisted cubic give verdict in_V.
MembershipReport verify_white(const PointConfiguration& config,
                              const TripleSystem& system);

struct DualIncidence {
  bool is_point = false;
  bool on_hj = false;
  bool degenerate = false;
};

// The dual incidence statement for a 6-subset I of {1..7} with leftover j:
// the three planes spanned by (H_{i1} cap H_{i2}) + (H_{i4} cap H_{i5} cap H_j)
// etc. intersect in a point, and that point lies on H_j.
DualIncidence verify_dual_incidence(const PointConfiguration& config,
                                    const TripleSystem& system,
                                    const std::array<int, 6>& I, int j);

}  // namespace rnc
