#include "rnc/coordinatization.hpp"

#include <algorithm>
#include <sstream>

namespace rnc {

CoordinateMatrix::CoordinateMatrix(int width, std::vector<Index> labels)
    : width_(width), labels_(std::move(labels)) {
  if (width_ < 1) throw std::invalid_argument("matrix width must be >= 1");
  for (size_t k = 0; k < labels_.size(); ++k) {
    if (!column_.emplace(labels_[k], static_cast<int>(k)).second) {
      throw std::invalid_argument("duplicate column label");
    }
  }
  entries_.assign(static_cast<size_t>(width_) * labels_.size(), Rat(0));
}

Rat& CoordinateMatrix::at(int row, Index label) {
  auto it = column_.find(label);
  if (it == column_.end() || row < 1 || row > width_) {
    throw std::out_of_range("missing column label or bad row");
  }
  return entries_[static_cast<size_t>(row - 1) * labels_.size() + it->second];
}

const Rat& CoordinateMatrix::at(int row, Index label) const {
  return const_cast<CoordinateMatrix*>(this)->at(row, label);
}

CoordinateMatrix random_matrix(int width, const std::vector<Index>& labels,
                               std::uint64_t seed, long height) {
  if (height < 1) throw std::invalid_argument("height must be >= 1");
  CoordinateMatrix M(width, labels);
  std::mt19937_64 rng(seed);
  for (int row = 1; row <= width; ++row) {
    for (Index j : labels) M.at(row, j) = random_rational(rng, height);
  }
  return M;
}

namespace {

// Exact determinant by Gaussian elimination with column pivoting.
Rat determinant(std::vector<std::vector<Rat>> a) {
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

}  // namespace

Rat evaluate_bracket(const Bracket& b, const CoordinateMatrix& M) {
  const int w = b.width();
  if (w != M.width()) throw std::invalid_argument("bracket/matrix width mismatch");
  std::vector<std::vector<Rat>> a(w, std::vector<Rat>(w));
  for (int r = 0; r < w; ++r) {
    for (int c = 0; c < w; ++c) a[r][c] = M.at(r + 1, b.indices[c]);
  }
  return determinant(std::move(a));
}

Rat evaluate_poly(const BracketPolynomial& p, const CoordinateMatrix& M) {
  if (p.width() != M.width()) {
    throw std::invalid_argument("polynomial/matrix width mismatch");
  }
  Rat total(0);
  std::map<Bracket, Rat> cache;
  for (const auto& [m, c] : p.terms()) {
    Rat prod = c;
    for (const Bracket& b : m.brackets) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, evaluate_bracket(b, M)).first;
      prod *= it->second;
    }
    total += prod;
  }
  return total;
}

SymbolicPolynomial SymbolicPolynomial::constant(Rat c) {
  SymbolicPolynomial p;
  p.add_term({}, c);
  return p;
}

SymbolicPolynomial SymbolicPolynomial::variable(int row, Index col) {
  SymbolicPolynomial p;
  p.add_term({{{row, col}, 1}}, Rat(1));
  return p;
}

void SymbolicPolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Rat SymbolicPolynomial::evaluate(const CoordinateMatrix& M) const {
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat prod = c;
    for (const auto& [var, exp] : m) {
      const Rat& v = M.at(var.first, var.second);
      for (int e = 0; e < exp; ++e) prod *= v;
    }
    total += prod;
  }
  return total;
}

std::string SymbolicPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (sgn(c) < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (a != 1 || m.empty()) out << a.get_str();
    for (const auto& [var, exp] : m) {
      out << 'x' << var.first << '_' << var.second;
      if (exp > 1) out << '^' << exp;
    }
    first = false;
  }
  return out.str();
}

SymbolicPolynomial sym_mul(const SymbolicPolynomial& p,
                           const SymbolicPolynomial& q, size_t max_terms) {
  SymbolicPolynomial r;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      SymbolicPolynomial::Monomial m;
      size_t i = 0, j = 0;
      while (i < mp.size() || j < mq.size()) {
        if (j == mq.size() || (i < mp.size() && mp[i].first < mq[j].first)) {
          m.push_back(mp[i++]);
        } else if (i == mp.size() || mq[j].first < mp[i].first) {
          m.push_back(mq[j++]);
        } else {
          m.emplace_back(mp[i].first, mp[i].second + mq[j].second);
          ++i;
          ++j;
        }
      }
      r.add_term(m, cp * cq);
      if (r.term_count() > max_terms) throw ExpansionLimitExceeded();
    }
  }
  return r;
}

namespace {

// det(x_{i, lambda_j}) by permutation expansion; width stays desk scale.
SymbolicPolynomial symbolic_determinant(const Bracket& b) {
  const int w = b.width();
  std::vector<int> perm(w);
  for (int i = 0; i < w; ++i) perm[i] = i;
  SymbolicPolynomial det;
  do {
    long inversions = 0;
    for (int i = 0; i < w; ++i) {
      for (int j = i + 1; j < w; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    SymbolicPolynomial::Monomial m;
    for (int i = 0; i < w; ++i) {
      m.push_back({{i + 1, b.indices[perm[i]]}, 1});
    }
    std::sort(m.begin(), m.end());
    det.add_term(m, Rat(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

SymbolicPolynomial expand_symbolic(const BracketPolynomial& p,
                                   size_t max_terms) {
  SymbolicPolynomial total;
  std::map<Bracket, SymbolicPolynomial> cache;
  for (const auto& [m, c] : p.terms()) {
    SymbolicPolynomial prod = SymbolicPolynomial::constant(c);
    for (const Bracket& b : m.brackets) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, symbolic_determinant(b)).first;
      prod = sym_mul(prod, it->second, max_terms);
    }
    total += prod;
    if (total.term_count() > max_terms) throw ExpansionLimitExceeded();
  }
  return total;
}

bool is_syzygy_probabilistic(const BracketPolynomial& p, int trials,
                             std::uint64_t seed, long height) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (p.is_zero()) return true;
  std::set<Index> sup = p.support();
  std::vector<Index> labels(sup.begin(), sup.end());
  if (labels.empty()) return false;  // nonzero constant polynomial
  for (int t = 0; t < trials; ++t) {
    CoordinateMatrix M =
        random_matrix(p.width(), labels, seed + static_cast<std::uint64_t>(t), height);
    if (evaluate_poly(p, M) != 0) return false;
  }
  return true;
}

}  // namespace rnc
