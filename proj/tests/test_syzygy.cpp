#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rnc/coordinatization.hpp"
#include "rnc/syzygy.hpp"

using namespace rnc;

namespace {

// Admissible random (alpha, beta, gamma) for width w over 1..max_index.
struct VdwInput {
  std::vector<Index> alpha, beta, gamma;
};

VdwInput random_vdw(std::mt19937_64& rng, int w, int max_index) {
  std::uniform_int_distribution<int> s_dist(1, w);
  int s = s_dist(rng);
  auto pick = [&](int count) {
    std::set<Index> out;
    std::uniform_int_distribution<int> v(1, max_index);
    while (static_cast<int>(out.size()) < count) out.insert(v(rng));
    return std::vector<Index>(out.begin(), out.end());
  };
  return {pick(s - 1), pick(w + 1), pick(w - s)};
}

}  // namespace

TEST_CASE("shuffle_sign") {
  CHECK(shuffle_sign({1, 2}, 4) == 1);
  CHECK(shuffle_sign({1, 3}, 4) == -1);
  CHECK(shuffle_sign({1, 4}, 4) == 1);
  CHECK_THROWS_AS(shuffle_sign({1, 5}, 4), std::invalid_argument);
}

TEST_CASE("van der Waerden syzygy, worked examples") {
  auto s = van_der_waerden({1}, {1, 3, 4, 6}, {5}, 3);
  CHECK(s == parse_bracket_polynomial("[146][135]-[136][145]-[134][156]"));

  // Repeated-index brackets drop out; the result is still a syzygy.
  auto t = van_der_waerden({}, {1, 2, 3}, {3}, 2);
  CHECK(expand_symbolic(t).is_zero());

  auto u = van_der_waerden({1}, {1, 3, 4, 6, 7}, {5, 7}, 4);
  CHECK(u == parse_bracket_polynomial("[1467][1357]-[1367][1457]-[1347][1567]"));

  CHECK_THROWS_AS(van_der_waerden({1}, {1, 2, 3}, {4, 5, 6}, 3),
                  std::invalid_argument);
}

TEST_CASE("random van der Waerden syzygies vanish under coordinatization") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> w_dist(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int w = w_dist(rng);
    auto in = random_vdw(rng, w, 7);
    auto syz = van_der_waerden(in.alpha, in.beta, in.gamma, w);
    CHECK(expand_symbolic(syz).is_zero());
  }
  for (int trial = 0; trial < 40; ++trial) {
    int w = 4 + trial % 3;
    auto in = random_vdw(rng, w, 10);
    auto syz = van_der_waerden(in.alpha, in.beta, in.gamma, w);
    CHECK(is_syzygy_probabilistic(syz, 5, 500 + trial));
  }
}

TEST_CASE("lift homomorphism") {
  auto base = parse_bracket_polynomial("[146][135]-[136][145]-[134][156]");
  CHECK(lift(base, 7) ==
        parse_bracket_polynomial("[1467][1357]-[1367][1457]-[1347][1567]"));

  CHECK(lift(BracketPolynomial::zero(3), 7).is_zero());

  auto pascal = parse_bracket_polynomial(
      "[123][145][246][356]-[124][135][236][456]");
  CHECK(lift(pascal, 7) ==
        parse_bracket_polynomial(
            "[1237][1457][2467][3567]-[1247][1357][2367][4567]"));

  CHECK_THROWS_AS(lift(base, 4), std::invalid_argument);

  // Lifting by an index below existing ones exercises the sign bookkeeping.
  auto p = parse_bracket_polynomial("[23]");
  CHECK(lift(p, 1) == parse_bracket_polynomial("[123]"));
  auto q = parse_bracket_polynomial("[24]");
  CHECK(lift(q, 3) == parse_bracket_polynomial("-[234]"));
}

TEST_CASE("lift commutes with van der Waerden construction") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> w_dist(2, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int w = w_dist(rng);
    auto in = random_vdw(rng, w, 9);
    Index j = 10;
    auto lifted_syzygy = lift(van_der_waerden(in.alpha, in.beta, in.gamma, w), j);
    auto beta = in.beta;
    beta.push_back(j);
    auto gamma = in.gamma;
    gamma.push_back(j);
    auto syzygy_of_lift = van_der_waerden(in.alpha, beta, gamma, w + 1);
    CHECK(lifted_syzygy == syzygy_of_lift);
  }
}

TEST_CASE("straightening the Pascal expansion") {
  auto raw = parse_bracket_polynomial(
      "[145][256][361][234]-[245][356][461][123]+[245][356][361][124]"
      "-[245][256][361][134]");
  auto standard = straighten(raw);
  // The expansion carries an overall sign of -1 relative to the usual way
  // the Pascal binomial is written; as equations the two are the same.
  CHECK(standard == parse_bracket_polynomial(
                        "-[123][145][246][356]+[124][135][236][456]"));
  for (const auto& [m, c] : standard.terms()) CHECK(is_standard(m));

  // Already-standard input is a fixed point.
  CHECK(straighten(standard) == standard);

  // The lifted expansion straightens to the lifted standard form.
  auto lifted = lift(raw, 7);
  CHECK(straighten(lifted) ==
        parse_bracket_polynomial(
            "-[1237][1457][2467][3567]+[1247][1357][2367][4567]"));
}

TEST_CASE("straightening is sound, canonical, and linear") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> coeff(-4, 4);
  auto random_poly = [&](int terms, int degree) {
    BracketPolynomial p(3);
    std::uniform_int_distribution<int> pick(1, 7);
    for (int t = 0; t < terms; ++t) {
      std::vector<Bracket> bs;
      for (int d = 0; d < degree; ++d) {
        std::set<Index> s;
        while (s.size() < 3) s.insert(pick(rng));
        bs.push_back(Bracket{{s.begin(), s.end()}});
      }
      p.add_term(BracketMonomial::from_unsorted(std::move(bs)), Rat(coeff(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_poly(3, 2);
    auto sp = straighten(p);
    for (const auto& [m, c] : sp.terms()) CHECK(is_standard(m));
    // Soundness: the rewrite only moved p within its bracket-ring class.
    CHECK(expand_symbolic(sp - p).is_zero());
    // Canonicity.
    CHECK(straighten(sp) == sp);
    auto q = random_poly(2, 2);
    CHECK(straighten(p + q) == straighten(p) + straighten(q));
  }
}

TEST_CASE("straightening trace records the rewrites") {
  auto raw = parse_bracket_polynomial("[136][145]");
  StraightenTrace trace;
  auto standard = straighten(raw, &trace);
  CHECK(!trace.empty());
  CHECK(trace.front().monomial == "[136][145]");
  CHECK(standard ==
        parse_bracket_polynomial("[135][146]-[134][156]"));
}

TEST_CASE("bracket_equal") {
  auto p = parse_bracket_polynomial("[123][456]");
  CHECK(bracket_equal(p, p));

  // A syzygy from the Pascal worked example: [136][145]+[134][156] = [135][146].
  CHECK(bracket_equal(parse_bracket_polynomial("[136][145]+[134][156]"),
                      parse_bracket_polynomial("[135][146]")));

  // Distinct standard monomials are distinct in the bracket ring.
  CHECK_FALSE(bracket_equal(parse_bracket_polynomial("[123][456]"),
                            parse_bracket_polynomial("[124][356]")));

  CHECK_THROWS_AS(bracket_equal(p, parse_bracket_polynomial("[1234]")),
                  std::invalid_argument);
}

TEST_CASE("bracket_equal is preserved by lifts") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    auto in = random_vdw(rng, 3, 6);
    auto syz = van_der_waerden(in.alpha, in.beta, in.gamma, 3);
    // p and q equal in the bracket ring: q = p + syzygy.
    auto p = parse_bracket_polynomial("[123][456]");
    auto q = p + syz;
    REQUIRE(bracket_equal(p, q));
    CHECK(bracket_equal(lift(p, 8), lift(q, 8)));
  }
}
