#include "rnc/rnc.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rnc/coordinatization.hpp"
#include "rnc/syzygy.hpp"

namespace rnc {

SubsetI SubsetI::make(const std::vector<Index>& subset, int d) {
  const int n = d + 4;
  if (subset.size() != 6) throw std::invalid_argument("I must have 6 elements");
  SubsetI out;
  for (size_t k = 0; k < 6; ++k) {
    Index v = subset[k];
    if (v < 1 || v > n || (k > 0 && v <= subset[k - 1])) {
      throw std::invalid_argument("I must be an increasing subset of 1..d+4");
    }
    out.i[k] = v;
  }
  size_t pos = 0;
  for (Index v = 1; v <= n; ++v) {
    if (pos < 6 && out.i[pos] == v) {
      ++pos;
    } else {
      out.ic.push_back(v);
    }
  }
  return out;
}

std::string SubsetI::str() const {
  std::ostringstream out;
  out << '{';
  for (size_t k = 0; k < 6; ++k) {
    if (k) out << ',';
    out << i[k];
  }
  out << '}';
  return out.str();
}

std::vector<SubsetI> all_subsets(int d) {
  const int n = d + 4;
  std::vector<SubsetI> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index next) -> void {
    if (cur.size() == 6) {
      out.push_back(SubsetI::make(cur, d));
      return;
    }
    for (Index v = next; v <= n - (6 - static_cast<Index>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

BracketPolynomial phi(const SubsetI& I) {
  const auto& i = I.i;
  auto mono = [&](std::array<int, 3> a, std::array<int, 3> b,
                  std::array<int, 3> c, std::array<int, 3> e) {
    std::vector<Bracket> bs;
    for (const auto& t : {a, b, c, e}) {
      bs.push_back(Bracket{{i[t[0] - 1], i[t[1] - 1], i[t[2] - 1]}});
    }
    return BracketMonomial::from_unsorted(std::move(bs));
  };
  BracketPolynomial p(3);
  p.add_term(mono({1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}), Rat(1));
  p.add_term(mono({1, 2, 4}, {1, 3, 5}, {2, 3, 6}, {4, 5, 6}), Rat(-1));
  return p;
}

BracketPolynomial psi_substitution(const SubsetI& I, int d) {
  if (d < 3) throw std::invalid_argument("psi requires d >= 3");
  const int n = d + 4;
  BracketPolynomial out(d + 1);
  const BracketPolynomial base = phi(I);
  for (const auto& [m, c] : base.terms()) {
    std::vector<Bracket> bs;
    long sign_exp = 0;
    for (const Bracket& b : m.brackets) {
      const auto& idx = b.indices;  // increasing triple a < b < c
      sign_exp += (idx[0] - 1) + (idx[1] - 2) + (idx[2] - 3);
      std::vector<Index> comp;
      for (Index v = 1; v <= n; ++v) {
        if (v != idx[0] && v != idx[1] && v != idx[2]) comp.push_back(v);
      }
      bs.push_back(Bracket{std::move(comp)});
    }
    Rat coeff = c * (sign_exp % 2 == 0 ? 1 : -1);
    out.add_term(BracketMonomial::from_unsorted(std::move(bs)), coeff);
  }
  return out;
}

BracketPolynomial psi_lifted(const SubsetI& I, int d) {
  if (d < 3) throw std::invalid_argument("psi requires d >= 3");
  BracketPolynomial p = phi(I);
  for (Index j : I.ic) p = lift(p, j);
  return p;
}

GCExpr gc_condition(const SubsetI& I, int d) {
  // Trivial partition: the whole complement is joined at the end.
  std::array<std::vector<Index>, 4> parts;
  parts[3] = I.ic;
  return gc_condition_partitioned(I, parts, d);
}

GCExpr gc_condition_partitioned(const SubsetI& I,
                                const std::array<std::vector<Index>, 4>& parts,
                                int d) {
  if (d < 2) throw std::invalid_argument("gc_condition requires d >= 2");
  // Validate the partition against the complement.
  {
    std::vector<Index> all;
    for (const auto& part : parts) {
      for (size_t k = 0; k + 1 < part.size(); ++k) {
        if (part[k] >= part[k + 1]) {
          throw std::invalid_argument("partition parts must be ascending");
        }
      }
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    if (all != I.ic) {
      throw std::invalid_argument("partition must cover the complement of I");
    }
  }
  const auto& i = I.i;
  auto pt = [](Index v) { return GCExpression::point(v); };
  auto line = [&](Index a, Index b, const std::vector<Index>& extra) {
    std::vector<GCExpr> c{pt(a), pt(b)};
    for (Index v : extra) c.push_back(pt(v));
    return GCExpression::join_of(std::move(c));
  };
  auto hyperplane = [&](Index a, Index b) {
    std::vector<GCExpr> c{pt(a), pt(b)};
    for (Index v : I.ic) c.push_back(pt(v));
    return GCExpression::join_of(std::move(c));
  };
  std::vector<GCExpr> joins;
  joins.push_back(GCExpression::meet_of(
      {line(i[0], i[1], parts[0]), hyperplane(i[3], i[4])}));
  joins.push_back(GCExpression::meet_of(
      {line(i[1], i[2], parts[1]), hyperplane(i[4], i[5])}));
  joins.push_back(GCExpression::meet_of(
      {line(i[2], i[3], parts[2]), hyperplane(i[5], i[0])}));
  for (Index v : parts[3]) joins.push_back(pt(v));
  return GCExpression::join_of(std::move(joins));
}

Rat rational_determinant(std::vector<std::vector<Rat>> a) {
  const size_t n = a.size();
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat inv = 1 / a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

int rational_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    Rat inv = 1 / a[row][col];
    for (size_t r = row + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] * inv;
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<Rat>> coordinate_rows(const PointConfiguration& config) {
  const int m = config.ambient();
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(config.size()));
  for (int p = 1; p <= config.size(); ++p) {
    for (int r = 0; r < m; ++r) rows[r][p - 1] = config.point(p)[r];
  }
  return rows;
}

}  // namespace

bool on_hyperplane(const PointConfiguration& config) {
  if (config.size() < config.ambient()) {
    throw std::invalid_argument("need at least d+1 points");
  }
  return rational_rank(coordinate_rows(config)) <= config.dimension();
}

bool general_position(const PointConfiguration& config) {
  const int m = config.ambient();
  if (config.size() < m) throw std::invalid_argument("need at least d+1 points");
  std::vector<int> pick(m);
  bool ok = true;
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (!ok) return;
    if (depth == m) {
      std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
      for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) a[r][c] = config.point(pick[c])[r];
      }
      if (rational_determinant(std::move(a)) == 0) ok = false;
      return;
    }
    for (int v = start; v <= config.size() - (m - depth) + 1; ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
  return ok;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::InV: return "in_V";
    case Verdict::NotInV: return "not_in_V";
    case Verdict::HyperplaneCase: return "hyperplane_case";
  }
  return "?";
}

std::string to_string(CheckMethod m) {
  switch (m) {
    case CheckMethod::Algebraic: return "algebraic";
    case CheckMethod::Geometric: return "geometric";
    case CheckMethod::Both: return "both";
  }
  return "?";
}

std::optional<CheckMethod> method_from_string(const std::string& s) {
  if (s == "algebraic") return CheckMethod::Algebraic;
  if (s == "geometric") return CheckMethod::Geometric;
  if (s == "both") return CheckMethod::Both;
  return std::nullopt;
}

GeometricCheck geometric_check(const PointConfiguration& config,
                               const SubsetI& I) {
  const int m = config.ambient();
  if (config.size() != config.dimension() + 4) {
    throw std::invalid_argument("membership checks need n = d+4 points");
  }
  auto point = [&](Index v) { return Extensor::vector(config.point(v)); };
  auto line = [&](Index a, Index b) { return join(point(a), point(b)); };
  auto hyperplane = [&](Index a, Index b) {
    Extensor h = line(a, b);
    for (Index v : I.ic) h = join(h, point(v));
    return h;
  };
  const auto& i = I.i;
  GeometricCheck out{{Extensor::zero(m, 1), Extensor::zero(m, 1),
                      Extensor::zero(m, 1)},
                     Rat(0),
                     false};
  std::array<std::pair<std::pair<Index, Index>, std::pair<Index, Index>>, 3>
      spec = {{{{i[0], i[1]}, {i[3], i[4]}},
               {{i[1], i[2]}, {i[4], i[5]}},
               {{i[2], i[3]}, {i[5], i[0]}}}};
  for (int q = 0; q < 3; ++q) {
    Extensor l = line(spec[q].first.first, spec[q].first.second);
    Extensor h = hyperplane(spec[q].second.first, spec[q].second.second);
    if (l.is_zero() || h.is_zero()) {
      out.degenerate = true;
      return out;
    }
    out.points[q] = meet(l, h);  // step 2 + (m-1) - m = 1
    if (out.points[q].is_zero()) {
      out.degenerate = true;
      return out;
    }
  }
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < m; ++r) a[r][c] = out.points[c].coord(1u << r);
  }
  for (size_t k = 0; k < I.ic.size(); ++k) {
    const auto& col = config.point(I.ic[k]);
    for (int r = 0; r < m; ++r) a[r][3 + k] = col[r];
  }
  out.determinant = rational_determinant(std::move(a));
  return out;
}

MembershipReport check_membership(const PointConfiguration& config,
                                  CheckMethod method) {
  const int d = config.dimension();
  const int n = config.size();
  if (n != d + 4) throw std::invalid_argument("membership checks need n = d+4 points");
  if (d < 2) throw std::invalid_argument("membership checks need d >= 2");

  MembershipReport report;
  report.dimension = d;
  report.n = n;
  report.on_hyperplane = on_hyperplane(config);
  report.general_position = general_position(config);

  const bool algebraic =
      method == CheckMethod::Algebraic || method == CheckMethod::Both;
  const bool geometric =
      method == CheckMethod::Geometric || method == CheckMethod::Both;

  std::vector<SubsetI> subsets =
      d == 2 ? std::vector<SubsetI>{SubsetI::make({1, 2, 3, 4, 5, 6}, 2)}
             : all_subsets(d);

  const int m = d + 1;
  CoordinateMatrix M(m, [&] {
    std::vector<Index> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = k + 1;
    return labels;
  }());
  for (int p = 1; p <= n; ++p) {
    for (int r = 0; r < m; ++r) M.at(r + 1, p) = config.point(p)[r];
  }

  bool all_residues_zero = true;
  bool all_determinants_zero = true;
  for (const SubsetI& I : subsets) {
    SubsetResult res;
    res.I = I;
    if (algebraic) {
      BracketPolynomial eq = d == 2 ? phi(I) : psi_substitution(I, d);
      res.residue = evaluate_poly(eq, M);
      if (*res.residue != 0) all_residues_zero = false;
    }
    if (geometric) {
      GeometricCheck gc = geometric_check(config, I);
      res.degenerate = gc.degenerate;
      if (!gc.degenerate) {
        res.geometric_determinant = gc.determinant;
        if (gc.determinant != 0) all_determinants_zero = false;
      }
    }
    report.subsets.push_back(std::move(res));
  }

  if (report.on_hyperplane) {
    report.verdict = Verdict::HyperplaneCase;
    if (d == 3 || d == 4) {
      report.advisory =
          "for d = 3 and d = 4 the hyperplane locus is contained in the curve "
          "locus, so these configurations lie in V as well";
    }
  } else if (algebraic) {
    report.verdict = all_residues_zero ? Verdict::InV : Verdict::NotInV;
  } else {
    report.verdict = all_determinants_zero ? Verdict::InV : Verdict::NotInV;
  }
  return report;
}

PointConfiguration sample_moment_curve(
    int d, const std::vector<std::optional<Rat>>& parameters,
    const std::optional<std::vector<std::vector<Rat>>>& transform) {
  for (size_t a = 0; a < parameters.size(); ++a) {
    for (size_t b = a + 1; b < parameters.size(); ++b) {
      bool equal = (!parameters[a] && !parameters[b]) ||
                   (parameters[a] && parameters[b] &&
                    *parameters[a] == *parameters[b]);
      if (equal) throw std::invalid_argument("repeated curve parameter");
    }
  }
  const int m = d + 1;
  if (transform) {
    if (static_cast<int>(transform->size()) != m) {
      throw std::invalid_argument("transform must be (d+1)x(d+1)");
    }
    if (rational_determinant(*transform) == 0) {
      throw std::invalid_argument("transform must be invertible");
    }
  }
  std::vector<std::vector<Rat>> cols;
  for (const auto& t : parameters) {
    std::vector<Rat> col(m, Rat(0));
    if (!t) {
      col[m - 1] = 1;
    } else {
      Rat power(1);
      for (int r = 0; r < m; ++r) {
        col[r] = power;
        power *= *t;
      }
    }
    if (transform) {
      std::vector<Rat> mapped(m, Rat(0));
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) mapped[r] += (*transform)[r][c] * col[c];
      }
      col = std::move(mapped);
    }
    cols.push_back(std::move(col));
  }
  return PointConfiguration(d, std::move(cols));
}

std::vector<std::vector<Rat>> random_projective_transform(int d,
                                                          std::uint64_t seed,
                                                          long height) {
  const int m = d + 1;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
    for (auto& row : a) {
      for (auto& v : row) v = random_rational(rng, height);
    }
    if (rational_determinant(a) != 0) return a;
  }
  throw std::logic_error("failed to sample an invertible transform");
}

}  // namespace rnc
