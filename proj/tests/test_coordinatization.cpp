#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rnc/coordinatization.hpp"
#include "rnc/syzygy.hpp"

using namespace rnc;

namespace {

CoordinateMatrix moment_matrix(int w, const std::vector<Rat>& params) {
  std::vector<Index> labels;
  for (size_t k = 0; k < params.size(); ++k) labels.push_back(static_cast<Index>(k + 1));
  CoordinateMatrix M(w, labels);
  for (size_t k = 0; k < params.size(); ++k) {
    Rat power(1);
    for (int r = 1; r <= w; ++r) {
      M.at(r, static_cast<Index>(k + 1)) = power;
      power *= params[k];
    }
  }
  return M;
}

}  // namespace

TEST_CASE("evaluate_bracket computes exact determinants") {
  CoordinateMatrix id2(2, {1, 2});
  id2.at(1, 1) = 1;
  id2.at(2, 2) = 1;
  CHECK(evaluate_bracket(Bracket{{1, 2}}, id2) == 1);

  CoordinateMatrix sing(2, {1, 2});
  sing.at(1, 1) = 1;
  sing.at(1, 2) = 2;
  CHECK(evaluate_bracket(Bracket{{1, 2}}, sing) == 0);

  // Moment-curve columns give Vandermonde determinants.
  auto M = moment_matrix(3, {Rat(0), Rat(1), Rat(2)});
  CHECK(evaluate_bracket(Bracket{{1, 2, 3}}, M) == 2);

  CHECK_THROWS_AS(evaluate_bracket(Bracket{{1, 9}}, id2), std::out_of_range);
}

TEST_CASE("evaluate_poly on the Pascal equation") {
  auto pascal = parse_bracket_polynomial(
      "[123][145][246][356]-[124][135][236][456]");

  CHECK(evaluate_poly(BracketPolynomial::zero(3), moment_matrix(3, {Rat(0)})) == 0);

  // Six points on the conic (1, t, t^2).
  auto on_conic =
      moment_matrix(3, {Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)});
  CHECK(evaluate_poly(pascal, on_conic) == 0);

  // Point 6 moved off the conic.
  auto off_conic = on_conic;
  off_conic.at(3, 6) = 26;
  CHECK(evaluate_poly(pascal, off_conic) != 0);
}

TEST_CASE("expand_symbolic small cases") {
  auto p = BracketPolynomial::from_bracket(normalize_bracket({1, 2}), 2);
  auto s = expand_symbolic(p);
  SymbolicPolynomial expected;
  expected.add_term({{{1, 1}, 1}, {{2, 2}, 1}}, Rat(1));
  expected.add_term({{{1, 2}, 1}, {{2, 1}, 1}}, Rat(-1));
  CHECK(s == expected);
  CHECK(s.str() == "x1_1x2_2-x1_2x2_1");

  auto syz = parse_bracket_polynomial("[146][135]-[136][145]-[134][156]");
  CHECK(expand_symbolic(syz).is_zero());

  auto doubled = p + p;
  auto sd = expand_symbolic(doubled);
  SymbolicPolynomial two = expected;
  two += expected;
  CHECK(sd == two);
}

TEST_CASE("expansion size bound") {
  auto p = parse_bracket_polynomial("[123][145][246][356]");
  CHECK_THROWS_AS(expand_symbolic(p, 10), ExpansionLimitExceeded);
}

TEST_CASE("is_syzygy_probabilistic") {
  auto lifted = parse_bracket_polynomial("[1467][1357]-[1367][1457]-[1347][1567]");
  CHECK(is_syzygy_probabilistic(lifted, 20, 42));

  auto mono = parse_bracket_polynomial("[123][456]");
  CHECK_FALSE(is_syzygy_probabilistic(mono, 20, 42));

  CHECK(is_syzygy_probabilistic(BracketPolynomial::zero(3), 1, 0));
}

TEST_CASE("random_matrix determinism and height bound") {
  auto a = random_matrix(3, {1, 2, 3, 4}, 99);
  auto b = random_matrix(3, {1, 2, 3, 4}, 99);
  for (int r = 1; r <= 3; ++r) {
    for (Index j = 1; j <= 4; ++j) CHECK(a.at(r, j) == b.at(r, j));
  }

  int distinct = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_matrix(3, {1, 2, 3, 4}, seed);
    bool differs = false;
    for (int r = 1; r <= 3; ++r) {
      for (Index j = 1; j <= 4; ++j) {
        if (c.at(r, j) != a.at(r, j)) differs = true;
      }
    }
    if (differs) ++distinct;
  }
  CHECK(distinct == 20);

  auto h1 = random_matrix(2, {1, 2, 3, 4, 5, 6, 7, 8}, 5, 1);
  for (int r = 1; r <= 2; ++r) {
    for (Index j = 1; j <= 8; ++j) {
      CHECK(abs(h1.at(r, j)) <= 1);
    }
  }
}

TEST_CASE("homomorphism and evaluation factor through expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_poly = [&](int terms) {
    BracketPolynomial p(3);
    for (int t = 0; t < terms; ++t) {
      std::set<Index> s;
      std::uniform_int_distribution<int> pick(1, 6);
      while (s.size() < 3) s.insert(pick(rng));
      p.add_term(BracketMonomial{{Bracket{{s.begin(), s.end()}}}}, Rat(coeff(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_poly(2);
    auto q = random_poly(2);
    auto pq = poly_mul(p, q);
    auto sum = p + q;
    CHECK(expand_symbolic(pq) == sym_mul(expand_symbolic(p), expand_symbolic(q),
                                         size_t(1) << 30));
    SymbolicPolynomial ssum = expand_symbolic(p);
    ssum += expand_symbolic(q);
    CHECK(expand_symbolic(sum) == ssum);

    auto M = random_matrix(3, {1, 2, 3, 4, 5, 6}, 1000 + trial, 10);
    CHECK(evaluate_poly(pq, M) == expand_symbolic(pq).evaluate(M));
  }
}

TEST_CASE("evaluation respects bracket antisymmetry") {
  auto M = random_matrix(3, {1, 2, 3, 4, 5}, 7);
  std::vector<Index> perm = {4, 1, 3};
  auto sb = normalize_bracket(perm);
  // Permuted evaluation: build the submatrix in the permuted column order.
  CoordinateMatrix P(3, {1, 2, 3});
  for (int r = 1; r <= 3; ++r) {
    for (int c = 0; c < 3; ++c) P.at(r, c + 1) = M.at(r, perm[c]);
  }
  CHECK(evaluate_bracket(Bracket{{1, 2, 3}}, P) ==
        Rat(sb.sign) * evaluate_bracket(sb.bracket, M));
}
