#include "rnc/white.hpp"

#include <algorithm>

#include "rnc/gc.hpp"

namespace rnc {

namespace {

std::vector<Triple> all_triples() {
  std::vector<Triple> out;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      for (int c = b + 1; c <= 7; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

int pair_id(int a, int b) { return a * 8 + b; }  // a < b

}  // namespace

bool is_steiner_system(const TripleSystem& s) {
  std::array<int, 64> covered{};
  for (const Triple& t : s.triples) {
    if (!(1 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] <= 7)) return false;
    ++covered[pair_id(t[0], t[1])];
    ++covered[pair_id(t[0], t[2])];
    ++covered[pair_id(t[1], t[2])];
  }
  for (int a = 1; a <= 7; ++a) {
    for (int b = a + 1; b <= 7; ++b) {
      if (covered[pair_id(a, b)] != 1) return false;
    }
  }
  return true;
}

std::vector<TripleSystem> fano_systems() {
  const std::vector<Triple> triples = all_triples();
  std::vector<TripleSystem> out;
  std::array<bool, 64> covered{};
  std::vector<Triple> chosen;

  auto rec = [&](auto&& self) -> void {
    if (chosen.size() == 7) {
      TripleSystem s;
      std::copy(chosen.begin(), chosen.end(), s.triples.begin());
      std::sort(s.triples.begin(), s.triples.end());
      out.push_back(s);
      return;
    }
    // Smallest uncovered pair; every system must cover it.
    int pa = 0, pb = 0;
    for (int a = 1; a <= 7 && !pa; ++a) {
      for (int b = a + 1; b <= 7; ++b) {
        if (!covered[pair_id(a, b)]) {
          pa = a;
          pb = b;
          break;
        }
      }
    }
    for (const Triple& t : triples) {
      bool contains = (t[0] == pa && t[1] == pb) || (t[0] == pa && t[2] == pb) ||
                      (t[1] == pa && t[2] == pb);
      if (!contains) continue;
      std::array<int, 3> ids = {pair_id(t[0], t[1]), pair_id(t[0], t[2]),
                                pair_id(t[1], t[2])};
      if (covered[ids[0]] || covered[ids[1]] || covered[ids[2]]) continue;
      for (int id : ids) covered[id] = true;
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
      for (int id : ids) covered[id] = false;
    }
  };
  rec(rec);
  return out;
}

DualConfiguration planes_from_triples(const PointConfiguration& config,
                                      const TripleSystem& system) {
  if (config.dimension() != 3 || config.size() != 7) {
    throw std::invalid_argument("expects 7 points of P^3");
  }
  std::vector<std::vector<Rat>> covectors;
  for (const Triple& t : system.triples) {
    // Covector h with h . v = det[v P_a P_b P_c] (Laplace along v).
    std::array<const std::vector<Rat>*, 3> pts = {
        &config.point(t[0]), &config.point(t[1]), &config.point(t[2])};
    std::vector<Rat> h(4, Rat(0));
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<std::vector<Rat>> minor;
      for (int r = 0; r < 4; ++r) {
        if (r == skip) continue;
        minor.push_back({(*pts[0])[r], (*pts[1])[r], (*pts[2])[r]});
      }
      Rat m = rational_determinant(std::move(minor));
      h[skip] = (skip % 2 == 0) ? m : -m;
    }
    bool nonzero = std::any_of(h.begin(), h.end(),
                               [](const Rat& v) { return v != 0; });
    if (!nonzero) {
      throw std::invalid_argument("degenerate triple: points do not span a plane");
    }
    covectors.push_back(std::move(h));
  }
  return DualConfiguration(3, std::move(covectors));
}

MembershipReport verify_white(const PointConfiguration& config,
                              const TripleSystem& system) {
  return check_membership(planes_from_triples(config, system),
                          CheckMethod::Algebraic);
}

DualIncidence verify_dual_incidence(const PointConfiguration& config,
                                    const TripleSystem& system,
                                    const std::array<int, 6>& I, int j) {
  DualConfiguration dual = planes_from_triples(config, system);
  auto q = [&](int label) { return Extensor::vector(dual.point(label)); };

  DualIncidence out;
  std::array<std::pair<std::pair<int, int>, std::pair<int, int>>, 3> spec = {
      {{{I[0], I[1]}, {I[3], I[4]}},
       {{I[1], I[2]}, {I[4], I[5]}},
       {{I[2], I[3]}, {I[5], I[0]}}}};
  std::array<Extensor, 3> pts = {Extensor::zero(4, 1), Extensor::zero(4, 1),
                                 Extensor::zero(4, 1)};
  for (int k = 0; k < 3; ++k) {
    Extensor line = join(q(spec[k].first.first), q(spec[k].first.second));
    Extensor plane =
        join(join(q(spec[k].second.first), q(spec[k].second.second)), q(j));
    if (line.is_zero() || plane.is_zero()) {
      out.degenerate = true;
      return out;
    }
    pts[k] = meet(line, plane);
    if (pts[k].is_zero()) {
      out.degenerate = true;
      return out;
    }
  }
  // In the dual space: the three meet-points span a plane iff the primal
  // intersection is a single point; joining H_j^* tests incidence.
  Extensor span = join(join(pts[0], pts[1]), pts[2]);
  out.is_point = !span.is_zero();
  if (out.is_point) out.on_hj = join(span, q(j)).is_zero();
  return out;
}

}  // namespace rnc
