#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "monolab/weights.hpp"

using namespace monolab;

namespace {

bool is_prime_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("prime sequence against trial division") {
  const auto seq = WeightSequence::primes();
  CHECK(seq.prime(1) == 2);
  CHECK(seq.prime(2) == 3);
  CHECK(seq.prime(25) == 97);
  CHECK(seq.prime(10000) == 104729);

  std::int64_t k = 0;
  for (std::int64_t n = 2; k < 10000; ++n)
    if (is_prime_trial(n)) CHECK(seq.prime(++k) == n);
}

TEST_CASE("klog validation and values") {
  CHECK_THROWS_AS(WeightSequence::klog(0.0), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence::klog(1.5), std::invalid_argument);
  const auto seq = WeightSequence::klog(0.5);
  CHECK(seq.term(1) == doctest::Approx(std::sqrt(std::log(3.0))));
  CHECK(seq.term(4) == doctest::Approx(4.0 * std::sqrt(std::log(6.0))));
  CHECK_THROWS_AS(seq.prime(1), std::domain_error);
}

TEST_CASE("strict monotonicity") {
  for (const auto& seq :
       {WeightSequence::primes(), WeightSequence::klog(0.4),
        WeightSequence::klog(1.0)}) {
    double prev = seq.term(1);
    CHECK(prev > 1.0);
    for (std::int64_t k = 2; k <= 1000000; k = k < 1000 ? k + 1 : k * 2) {
      const double cur = seq.term(k);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("superadditive gaps") {
  // q_{l+k} - q_l >= q_k - q_0 style growth for both families
  for (const auto& seq :
       {WeightSequence::primes(), WeightSequence::klog(0.75)}) {
    for (std::int64_t l = 1; l <= 1000; l *= 10)
      for (std::int64_t k = 1; k <= 1000; k *= 10)
        CHECK(seq.term(l + k) - seq.term(l) >= seq.term(k) - seq.term(1));
  }
}

TEST_CASE("index weights") {
  const auto primes = WeightSequence::primes();
  CHECK(primes.index_weight(MultiIndex{}) == 1.0);
  CHECK(primes.index_weight(MultiIndex({1, 2})) == 6.0);
  CHECK(primes.exact_index_weight(MultiIndex({1, 1, 3})) == 20);

  const auto klog = WeightSequence::klog(1.0);
  CHECK(klog.index_weight(MultiIndex({2, 2})) ==
        doctest::Approx(std::pow(2.0 * std::log(4.0), 2)));
}

TEST_CASE("cutoff rank") {
  const auto primes = WeightSequence::primes();
  CHECK(primes.cutoff_rank(1.9) == 0);
  CHECK(primes.cutoff_rank(2.0) == 1);
  CHECK(primes.cutoff_rank(10.0) == 4);
  CHECK(primes.cutoff_rank(11.0) == 5);

  for (const auto& seq : {WeightSequence::primes(), WeightSequence::klog(0.6),
                          WeightSequence::klog(1.0)}) {
    for (double y : {2.5, 10.0, 1234.5, 99999.0}) {
      const std::int64_t l = seq.cutoff_rank(y);
      if (l > 0) CHECK(seq.term(l) <= y);
      CHECK(seq.term(l + 1) > y);
    }
  }
}

TEST_CASE("reciprocal sums against the analytic bound") {
  for (double theta : {0.6, 0.75, 1.0}) {
    const auto seq = WeightSequence::klog(theta);
    for (double x : {10.0, 1e3, 1e6}) {
      const auto rs = seq.reciprocal_sum_bound(x);
      CHECK(rs.sum <= rs.bound);
      CHECK(rs.sum > 0.0);
    }
  }
  CHECK_THROWS_AS(WeightSequence::primes().reciprocal_sum_bound(100.0),
                  std::domain_error);
}

TEST_CASE("g_theta") {
  const auto seq1 = WeightSequence::klog(1.0);
  CHECK(seq1.g_theta(std::exp(std::exp(2.0))) == doctest::Approx(2.0));
  const auto seq2 = WeightSequence::klog(0.5);
  CHECK(seq2.g_theta(std::exp(4.0)) == doctest::Approx(4.0));  // 2 sqrt(4)
}
