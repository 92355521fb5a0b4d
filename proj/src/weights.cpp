#include "monolab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace monolab {

WeightSequence WeightSequence::primes() {
  WeightSequence w;
  w.primes_ = true;
  w.table_ = std::make_shared<PrimeTable>();
  return w;
}

WeightSequence WeightSequence::klog(double theta) {
  if (!(theta > 0.0) || theta > 1.0)
    throw std::invalid_argument("WeightSequence::klog: theta must be in (0,1]");
  WeightSequence w;
  w.theta_ = theta;
  return w;
}

namespace {

// Simple sieve of Eratosthenes up to `limit` inclusive.
std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t q = p * p; q <= limit; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

}  // namespace

void WeightSequence::ensure_primes_to(std::int64_t limit) const {
  {
    std::shared_lock lock(table_->mutex);
    if (table_->sieved_to >= limit) return;
  }
  std::unique_lock lock(table_->mutex);
  if (table_->sieved_to >= limit) return;
  std::int64_t target = std::max<std::int64_t>(limit, 2 * table_->sieved_to);
  target = std::max<std::int64_t>(target, 1 << 16);
  table_->primes = sieve_primes(target);
  table_->sieved_to = target;
}

void WeightSequence::ensure_prime_count(std::int64_t k) const {
  {
    std::shared_lock lock(table_->mutex);
    if (static_cast<std::int64_t>(table_->primes.size()) >= k) return;
  }
  // p_k < k (log k + loglog k) for k >= 6; pad for small k.
  double kd = static_cast<double>(std::max<std::int64_t>(k, 6));
  auto limit =
      static_cast<std::int64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 16;
  ensure_primes_to(limit);
  std::shared_lock lock(table_->mutex);
  while (static_cast<std::int64_t>(table_->primes.size()) < k) {
    lock.unlock();
    ensure_primes_to(2 * limit);
    limit *= 2;
    lock.lock();
  }
}

std::int64_t WeightSequence::prime(std::int64_t k) const {
  if (!primes_)
    throw std::domain_error("WeightSequence::prime: not a prime sequence");
  if (k < 1) throw std::invalid_argument("WeightSequence::prime: k >= 1");
  ensure_prime_count(k);
  std::shared_lock lock(table_->mutex);
  return table_->primes[static_cast<std::size_t>(k - 1)];
}

double WeightSequence::term(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("WeightSequence::term: k >= 1");
  if (primes_) return static_cast<double>(prime(k));
  return static_cast<double>(k) *
         std::pow(std::log(static_cast<double>(k) + 2.0), theta_);
}

double WeightSequence::index_weight(const MultiIndex& j) const {
  double w = 1.0;
  for (int e : j.entries()) w *= term(e);
  return w;
}

BigInt WeightSequence::exact_index_weight(const MultiIndex& j) const {
  if (!primes_)
    throw std::domain_error(
        "WeightSequence::exact_index_weight: primes-only operation");
  BigInt w = 1;
  for (int e : j.entries()) w *= prime(e);
  return w;
}

std::int64_t WeightSequence::cutoff_rank(double y) const {
  if (primes_) {
    if (y < 2.0) return 0;
    auto limit = static_cast<std::int64_t>(y);
    ensure_primes_to(limit);
    std::shared_lock lock(table_->mutex);
    auto it = std::upper_bound(table_->primes.begin(), table_->primes.end(), limit);
    return static_cast<std::int64_t>(it - table_->primes.begin());
  }
  if (term(1) > y) return 0;
  // q_k >= k, so l <= y; galloping + binary search on the closed form.
  std::int64_t hi = 1;
  while (term(hi + 1) <= y) hi = std::max<std::int64_t>(hi + 1, 2 * hi);
  std::int64_t lo = 1;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (term(mid) <= y)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

double WeightSequence::g_theta(double x) const {
  if (primes_)
    throw std::domain_error("WeightSequence::g_theta: klog-only operation");
  if (theta_ == 1.0) return std::log(std::log(x));
  return std::pow(std::log(x), 1.0 - theta_) / (1.0 - theta_);
}

WeightSequence::ReciprocalSumBound WeightSequence::reciprocal_sum_bound(
    double x) const {
  if (primes_)
    throw std::domain_error(
        "WeightSequence::reciprocal_sum_bound: klog-only operation");
  if (!(x > 3.0))
    throw std::invalid_argument("reciprocal_sum_bound: requires x > 3");
  double sum = 0.0, comp = 0.0;  // Kahan
  auto n = static_cast<std::int64_t>(x);
  for (std::int64_t k = 1; k <= n; ++k) {
    double t = 1.0 / term(k) - comp;
    double s = sum + t;
    comp = (s - sum) - t;
    sum = s;
  }
  double c = 1.0 / term(1) + 1.0 / term(2) + 1.0 / term(3);
  return {sum, g_theta(x) + c};
}

}  // namespace monolab
