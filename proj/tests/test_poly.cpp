#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "monolab/checks.hpp"
#include "monolab/index_sets.hpp"
#include "monolab/sup_norm.hpp"

using namespace monolab;

namespace {

const WeightSequence kPrimes = WeightSequence::primes();

SparsePolynomial random_poly(int m, int n, std::uint64_t seed,
                             bool complex_coeffs = true) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  SparsePolynomial p;
  for (const auto& j : enumerate_jmn(m, n))
    p.set(j, Complex(gauss(rng), complex_coeffs ? gauss(rng) : 0.0));
  return p;
}

std::vector<Complex> random_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> u;
  for (int i = 0; i < n; ++i) u.emplace_back(unit(rng), unit(rng));
  return u;
}

}  // namespace

TEST_CASE("evaluate") {
  SparsePolynomial p;
  p.set(MultiIndex({1, 2}), 1.0);
  const std::vector<Complex> u = {0.5, 0.25};
  CHECK(std::abs(evaluate(p, u) - Complex(0.125)) < 1e-15);

  SparsePolynomial q;  // z_1^2 + z_2^2 at (1, i)
  q.set(MultiIndex({1, 1}), 1.0);
  q.set(MultiIndex({2, 2}), 1.0);
  const std::vector<Complex> v = {Complex(1, 0), Complex(0, 1)};
  CHECK(std::abs(evaluate(q, v)) < 1e-15);

  const auto r = random_poly(3, 4, 7);
  const std::vector<Complex> zero(4, 0.0);
  CHECK(std::abs(evaluate(r, zero)) == 0.0);
  CHECK_THROWS(evaluate(r, std::vector<Complex>{1.0}));
}

TEST_CASE("monomial sup norm") {
  CHECK(monomial_sup_norm(BallSpec::lr(1, 2), std::vector<int>{1, 1}) ==
        doctest::Approx(0.25));
  CHECK(monomial_sup_norm(BallSpec::lr(kInfinity, 2), std::vector<int>{3, 4}) ==
        1.0);
  CHECK(monomial_sup_norm(BallSpec::lr(2, 2), std::vector<int>{2, 0}) == 1.0);
}

TEST_CASE("sup norm sandwich is sharp on monomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + int(rng() % 6);
    const int n = 1 + int(rng() % 6);
    const auto J = enumerate_jmn(m, n);
    const MultiIndex j = J[rng() % J.size()];
    for (double r : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
      SparsePolynomial p;
      p.set(j, 1.0);
      const BallSpec spec = BallSpec::lr(r, n);
      const SupNormEstimate est = sup_norm(p, spec);
      const double exact = monomial_sup_norm(spec, to_exponent(j));
      CHECK(est.lower <= est.upper);
      CHECK(est.lower == doctest::Approx(exact).epsilon(1e-9));
      CHECK(est.upper == doctest::Approx(exact).epsilon(1e-9));
    }
  }
}

TEST_CASE("sup norm on aligned sums") {
  SparsePolynomial p;  // z_1 + z_2 on the polydisc
  p.set(MultiIndex({1}), 1.0);
  p.set(MultiIndex({2}), 1.0);
  const SupNormEstimate est = sup_norm(p, BallSpec::lr(kInfinity, 2));
  CHECK(est.lower >= 2.0 - 1e-9);
  CHECK(est.upper == doctest::Approx(2.0));
  REQUIRE(est.witness.size() == 2);
  CHECK(std::abs(evaluate(p, est.witness)) == doctest::Approx(est.lower));
}

TEST_CASE("sandwich holds on random polynomials") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = random_poly(2, 4, seed);
    for (double r : {1.0, 2.0, kInfinity}) {
      const BallSpec spec = BallSpec::lr(r, 4);
      const SupNormEstimate est = sup_norm(p, spec);
      CHECK(est.lower <= est.upper * (1 + 1e-12));
      // the witness certifies the lower bound
      CHECK(std::abs(evaluate(p, est.witness)) ==
            doctest::Approx(est.lower).epsilon(1e-12));
    }
  }
}

TEST_CASE("transfer and restriction") {
  SparsePolynomial f;
  f.set(MultiIndex({1, 2}), 1.0);
  const std::vector<Complex> w = {2.0, 3.0};
  CHECK(transfer_coefficients(f, w).coefficient(MultiIndex({1, 2})) ==
        Complex(6.0));
  const std::vector<Complex> identity = {1.0, 1.0};
  CHECK(transfer_coefficients(f, identity).terms() == f.terms());

  // evaluate/transfer identity on random data
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = random_poly(3, 5, seed);
    const auto u = random_point(5, seed + 100);
    const auto wv = random_point(5, seed + 200);
    std::vector<Complex> uw;
    for (int i = 0; i < 5; ++i) uw.push_back(u[size_t(i)] * wv[size_t(i)]);
    const Complex lhs = evaluate(transfer_coefficients(p, wv), u);
    const Complex rhs = evaluate(p, uw);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }

  SparsePolynomial g;
  g.set(MultiIndex({1, 3}), 1.0);
  g.set(MultiIndex({2, 3}), 1.0);
  const SparsePolynomial gi = restrict_prefix(g, MultiIndex({1}), 2);
  CHECK(gi.term_count() == 1);
  CHECK(gi.coefficient(MultiIndex({1, 3})) == Complex(1.0));
  CHECK(restrict_prefix(g, MultiIndex{}, 3).term_count() == 0);
}

TEST_CASE("restriction does not increase the norm") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = random_poly(2, 5, seed);
    const BallSpec spec = BallSpec::lr(kInfinity, 5);
    const double upper_p = sup_norm_upper(p, spec);
    for (const MultiIndex& i :
         {MultiIndex{}, MultiIndex({1}), MultiIndex({2})}) {
      const SparsePolynomial pi = restrict_prefix(p, i, 2);
      if (pi.term_count() == 0) continue;
      CHECK(sup_norm(pi, spec).lower <= upper_p * (1 + 1e-9));
    }
  }
}

TEST_CASE("norm transfer across balls") {
  // scaling into the ball cannot increase the polydisc norm beyond ||P||_r
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto p = random_poly(2, 4, seed);
    for (double r : {1.0, 1.5, 2.0}) {
      std::vector<Complex> w(4);
      double norm_r = 0.0;
      for (auto& c : w) {
        c = unit(rng);
        norm_r += std::pow(std::abs(c), r);
      }
      const double scale = std::pow(norm_r, 1.0 / r);
      for (auto& c : w) c /= scale;  // now ||w||_r = 1
      const SparsePolynomial q = transfer_coefficients(p, w);
      CHECK(sup_norm(q, BallSpec::lr(kInfinity, 4)).lower <=
            sup_norm_upper(p, BallSpec::lr(r, 4)) * (1 + 1e-9));
    }
  }
}

TEST_CASE("weighted sums") {
  SparsePolynomial p;
  p.set(MultiIndex({1, 2}), 1.0);
  const std::vector<Complex> u = {0.5, 0.25};
  CHECK(weighted_sum(p, u, {MultiIndex({1, 2})}) == doctest::Approx(0.125));
  CHECK(weighted_sum(p, u, {}) == 0.0);

  SparsePolynomial ones;
  for (const auto& j : enumerate_jmn(2, 2)) ones.set(j, 1.0);
  const std::vector<Complex> e = {1.0, 1.0};
  CHECK(weighted_sum(ones, e, enumerate_jmn(2, 2)) == doctest::Approx(3.0));
}

TEST_CASE("sequence points") {
  const SequencePoint a = SequencePoint::parse("n:-0.75:b=1.2");
  CHECK(a.modulus(3) ==
        doctest::Approx(std::pow(3.0, -0.75) * std::pow(std::log(5.0), -1.2)));
  const SequencePoint b = SequencePoint::parse("p:-1");
  CHECK(b.modulus(2, &kPrimes) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS(SequencePoint::parse("bogus"));
}

TEST_CASE("json round trip") {
  const auto p = random_poly(2, 3, 42);
  const SparsePolynomial q = polynomial_from_json(to_json(p));
  CHECK(q.terms() == p.terms());
}

TEST_CASE("inequality checks on random suites") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int m = 2 + int(seed % 2);
    const auto p = random_poly(m, 5, seed);
    for (double r : {1.0, 1.5, 2.0, kInfinity}) {
      const BallSpec spec = BallSpec::lr(r, 5);
      const CheckReport cauchy = cauchy_bound_check(p, spec);
      CHECK(cauchy.applicable);
      CHECK(cauchy.passed);
      const CheckReport mixed = mixed_norm_check(p, spec);
      CHECK(mixed.applicable);
      CHECK(mixed.passed);
    }
    const CheckReport na = mixed_norm_check(p, BallSpec::lr(3.0, 5));
    CHECK(!na.applicable);
  }
}

TEST_CASE("cauchy bound is an equality on monomials") {
  SparsePolynomial p;
  p.set(MultiIndex({1, 2}), 1.0);
  const CheckReport report = cauchy_bound_check(p, BallSpec::lr(1, 2));
  CHECK(report.passed);
  const double margin = report.details["terms"][0]["margin"].get<double>();
  CHECK(std::abs(margin) < 1e-9);
}

TEST_CASE("monomial sum bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = random_poly(2, 5, seed);
    const auto J = enumerate_jmn(2, 5);
    std::mt19937_64 rng(seed);
    std::vector<MultiIndex> subset;
    for (const auto& j : J)
      if (rng() & 1) subset.push_back(j);
    if (subset.empty()) subset.push_back(J.front());
    const auto u = random_point(5, seed + 50);
    for (double r : {1.0, 1.5, 2.0, 4.0, kInfinity}) {
      const CheckReport report =
          thm_monomial_check(p, BallSpec::lr(r, 5), subset, u);
      CHECK(report.applicable);
      CHECK(report.passed);
    }
  }
}

TEST_CASE("kq sums agree") {
  SparsePolynomial single;
  single.set(MultiIndex({1, 2}), 1.0);
  const SequencePoint half = SequencePoint::parse("n:-1");
  const KqSumResult s = kq_sum(single, half, kPrimes, 100.0, 4.0);
  CHECK(s.direct == doctest::Approx(0.5));
  CHECK(s.decomposed == doctest::Approx(s.direct).epsilon(1e-12));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SparsePolynomial random_field;
  WeightedFamilySpec spec{kPrimes, Family::Jx, 100.0, std::nullopt,
                          std::nullopt};
  for_each_index(spec, [&](const MultiIndex& j) {
    random_field.set(j, Complex(unit(rng), unit(rng)));
  });
  for (double y : {3.0, 5.0, 9.0}) {
    const KqSumResult rs = kq_sum(random_field, half, kPrimes, 100.0, y);
    CHECK(std::abs(rs.direct - rs.decomposed) <= 1e-10 * std::abs(rs.direct));
  }
}

TEST_CASE("block sums telescope") {
  SparsePolynomial ones;
  WeightedFamilySpec spec{kPrimes, Family::Jx, 64.0, std::nullopt,
                          std::nullopt};
  for_each_index(spec, [&](const MultiIndex& j) { ones.set(j, 1.0); });
  const SequencePoint u = SequencePoint::parse("n:-0.6");
  const BlockSums blocks = block_partial_sums(ones, u, kPrimes, 2.0, 5);
  REQUIRE(blocks.block_sums.size() == 6);

  std::vector<MultiIndex> all;
  for_each_index(spec, [&](const MultiIndex& j) { all.push_back(j); });
  std::vector<Complex> point;
  for (int k = 1; k <= 64; ++k) point.emplace_back(u.modulus(k), 0.0);
  const double total = weighted_sum(ones, point, all);
  CHECK(blocks.cumulative.back() == doctest::Approx(total).epsilon(1e-12));

  // linear prime blocks: S_N = sum of 1/p over 2^N < p <= 2^(N+1), decreasing
  SparsePolynomial linear;
  WeightedFamilySpec lin{kPrimes, Family::Jxm, 64.0, std::nullopt, 1};
  for_each_index(lin, [&](const MultiIndex& j) { linear.set(j, 1.0); });
  const BlockSums prime_blocks =
      block_partial_sums(linear, SequencePoint::parse("p:-1"), kPrimes, 2.0, 5);
  CHECK(prime_blocks.block_sums[0] == doctest::Approx(0.5));          // p = 2
  CHECK(prime_blocks.block_sums[1] == doctest::Approx(1.0 / 3));      // p = 3
  CHECK(prime_blocks.block_sums[2] == doctest::Approx(1.0 / 5 + 1.0 / 7));
  // per-block oracle: direct reciprocal sums over each dyadic range
  for (std::size_t i = 0; i < prime_blocks.block_sums.size(); ++i) {
    double oracle = 0.0;
    const double lo = std::pow(2.0, double(i)), hi = 2.0 * lo;
    for (int k = 1;; ++k) {
      const double p = double(kPrimes.prime(k));
      if (p > hi) break;
      if (p > lo || (i == 0 && p <= 2.0)) oracle += 1.0 / p;
    }
    CHECK(prime_blocks.block_sums[i] == doctest::Approx(oracle));
  }
}

TEST_CASE("random sign polynomials") {
  const auto J = enumerate_jmn(2, 4);
  const SparsePolynomial p = random_sign_polynomial(J, 17);
  CHECK(p.term_count() == J.size());
  for (const auto& [j, c] : p.terms()) CHECK(std::abs(std::abs(c) - 1.0) == 0);
  const SparsePolynomial q = random_sign_polynomial(J, 17);
  CHECK(p.terms() == q.terms());
  const SparsePolynomial weighted = random_sign_polynomial(J, 17, true);
  CHECK(std::abs(weighted.coefficient(MultiIndex({1, 2}))) == 2.0);
}

TEST_CASE("sidon lower bounds") {
  SparsePolynomial mono;
  const std::vector<MultiIndex> singleton = {MultiIndex({2, 2})};
  CHECK(sidon_lower_bound(singleton, BallSpec::lr(kInfinity, 2), 4) == 1.0);

  const std::vector<MultiIndex> pair = {MultiIndex({1, 1}), MultiIndex({2, 2})};
  CHECK(sidon_lower_bound(pair, BallSpec::lr(kInfinity, 2), 4) >= 1.0);
}
