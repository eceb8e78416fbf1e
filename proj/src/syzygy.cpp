#include "rnc/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

namespace rnc {

namespace {

void require_increasing(const std::vector<Index>& v, const char* what) {
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] >= v[i + 1]) {
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly increasing");
    }
  }
}

// All increasing s-subsets of {1..n}.
std::vector<std::vector<int>> subsets(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (s - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

int shuffle_sign(const std::vector<int>& tau, int n) {
  long excess = 0;
  int prev = 0;
  for (size_t k = 0; k < tau.size(); ++k) {
    if (tau[k] <= prev || tau[k] > n) {
      throw std::invalid_argument("tau must be an increasing subset of 1..n");
    }
    prev = tau[k];
    excess += tau[k] - static_cast<int>(k) - 1;
  }
  return excess % 2 == 0 ? 1 : -1;
}

BracketPolynomial van_der_waerden(const std::vector<Index>& alpha,
                                  const std::vector<Index>& beta,
                                  const std::vector<Index>& gamma, int w) {
  require_increasing(alpha, "alpha");
  require_increasing(beta, "beta");
  require_increasing(gamma, "gamma");
  const int s = static_cast<int>(alpha.size()) + 1;
  if (s < 1 || s > w || static_cast<int>(beta.size()) != w + 1 ||
      static_cast<int>(gamma.size()) != w - s) {
    throw std::invalid_argument(
        "inconsistent lengths: need |alpha| = s-1, |beta| = w+1, |gamma| = w-s");
  }
  BracketPolynomial out(w);
  for (const auto& tau : subsets(w + 1, s)) {
    std::vector<Index> first(alpha), second;
    second.reserve(beta.size());
    size_t ti = 0;
    for (int pos = 1; pos <= w + 1; ++pos) {
      if (ti < tau.size() && tau[ti] == pos) {
        second.push_back(beta[pos - 1]);
        ++ti;
      } else {
        first.push_back(beta[pos - 1]);
      }
    }
    second.insert(second.end(), gamma.begin(), gamma.end());
    SignedBracket b1 = normalize_bracket(first);
    if (b1.is_zero()) continue;
    SignedBracket b2 = normalize_bracket(second);
    if (b2.is_zero()) continue;
    out.add_term(BracketMonomial::from_unsorted({b1.bracket, b2.bracket}),
                 Rat(shuffle_sign(tau, w + 1) * b1.sign * b2.sign));
  }
  return out;
}

BracketPolynomial lift(const BracketPolynomial& p, Index j) {
  if (p.support().count(j)) {
    throw std::invalid_argument("lift index already present in polynomial");
  }
  BracketPolynomial out(p.width() + 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Bracket> bs;
    bs.reserve(m.brackets.size());
    int sign = 1;
    for (const Bracket& b : m.brackets) {
      std::vector<Index> idx = b.indices;
      idx.push_back(j);
      SignedBracket sb = normalize_bracket(idx);
      sign *= sb.sign;
      bs.push_back(sb.bracket);
    }
    out.add_term(BracketMonomial::from_unsorted(std::move(bs)), c * sign);
  }
  return out;
}

namespace {

constexpr long kRewriteCap = 1'000'000;

// Locates the first violating adjacent pair and row of a non-standard
// monomial, returning (pair index, row), both 0-based.
std::pair<size_t, size_t> first_violation(const BracketMonomial& m) {
  for (size_t k = 0; k + 1 < m.brackets.size(); ++k) {
    const auto& mu = m.brackets[k].indices;
    const auto& la = m.brackets[k + 1].indices;
    for (size_t row = 0; row < mu.size(); ++row) {
      if (mu[row] > la[row]) return {k, row};
    }
  }
  throw std::logic_error("first_violation called on a standard monomial");
}

}  // namespace

BracketPolynomial straighten(const BracketPolynomial& p,
                             StraightenTrace* trace) {
  const int w = p.width();
  BracketPolynomial work = p;
  for (long step = 0; step < kRewriteCap; ++step) {
    // Largest non-standard monomial, if any.
    const BracketMonomial* target = nullptr;
    Rat coeff;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      if (!is_standard(it->first)) {
        target = &it->first;
        coeff = it->second;
        break;
      }
    }
    if (!target) return work;

    BracketMonomial mono = *target;
    auto [k, row] = first_violation(mono);
    const std::vector<Index>& mu = mono.brackets[k].indices;
    const std::vector<Index>& la = mono.brackets[k + 1].indices;
    const size_t t = row + 1;  // violation row, 1-based

    std::vector<Index> alpha(mu.begin(), mu.begin() + (t - 1));
    std::vector<Index> beta(mu.begin() + (t - 1), mu.end());
    beta.insert(beta.end(), la.begin(), la.begin() + t);
    std::sort(beta.begin(), beta.end());
    std::vector<Index> gamma(la.begin() + t, la.end());

    BracketPolynomial syz = van_der_waerden(alpha, beta, gamma, w);
    BracketMonomial pair =
        BracketMonomial::from_unsorted({mono.brackets[k], mono.brackets[k + 1]});
    Rat c0 = syz.coefficient(pair);
    if (c0 == 0) {
      throw std::logic_error("straightening syzygy misses the target pair");
    }
    if (trace) trace->push_back({mono.str(), syz.str()});

    // [mu][la] = -(syz - c0 * pair) / c0 modulo the syzygy ideal.
    std::vector<Bracket> rest;
    for (size_t i = 0; i < mono.brackets.size(); ++i) {
      if (i != k && i != k + 1) rest.push_back(mono.brackets[i]);
    }
    work.add_term(mono, -coeff);
    for (const auto& [sm, sc] : syz.terms()) {
      if (sm == pair) continue;
      std::vector<Bracket> bs = rest;
      bs.insert(bs.end(), sm.brackets.begin(), sm.brackets.end());
      work.add_term(BracketMonomial::from_unsorted(std::move(bs)),
                    -coeff * sc / c0);
    }
  }
  throw std::logic_error("straightening exceeded the rewrite cap");
}

bool bracket_equal(const BracketPolynomial& p, const BracketPolynomial& q) {
  if (p.width() != q.width()) {
    throw std::invalid_argument("width mismatch in bracket_equal");
  }
  return straighten(p - q).is_zero();
}

}  // namespace rnc
