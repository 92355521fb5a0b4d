#ifndef MONOLAB_WEIGHTS_HPP
#define MONOLAB_WEIGHTS_HPP

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "monolab/multi_index.hpp"

namespace monolab {

/// A strictly increasing weight sequence q with q_1 > 1, assigning
/// q_j = prod_i q_{j_i} to a multi-index (q of the empty index is 1).
/// Two families: the primes (p_1 = 2), and q_k = k (log(k+2))^theta.
///
/// The prime table is memoized and grown lazily behind a shared mutex;
/// instances are cheap to copy and safe for concurrent readers.
class WeightSequence {
 public:
  static WeightSequence primes();
  static WeightSequence klog(double theta);  // theta in (0,1]

  bool is_primes() const { return primes_; }
  double theta() const { return theta_; }

  /// q_k, k >= 1.
  double term(std::int64_t k) const;

  /// The k-th prime as an exact integer; primes-only.
  std::int64_t prime(std::int64_t k) const;

  /// prod_i q_{j_i}; 1 for the empty index.
  double index_weight(const MultiIndex& j) const;

  /// Exact integer weight; primes-only.
  BigInt exact_index_weight(const MultiIndex& j) const;

  /// The l with q_l <= y < q_{l+1}; 0 when y < q_1.
  std::int64_t cutoff_rank(double y) const;

  struct ReciprocalSumBound {
    double sum;    // exact partial sum of 1/q_k over k <= x
    double bound;  // g_theta(x) + c, c = 1/q_1 + 1/q_2 + 1/q_3
  };

  /// Partial sum of reciprocals against its analytic bound; klog-only,
  /// requires x > 3.
  ReciprocalSumBound reciprocal_sum_bound(double x) const;

  /// g_theta(x): (log x)^(1-theta)/(1-theta) for theta < 1, loglog x at
  /// theta = 1. klog-only.
  double g_theta(double x) const;

 private:
  struct PrimeTable {
    mutable std::shared_mutex mutex;
    std::vector<std::int64_t> primes;
    std::int64_t sieved_to = 0;
  };

  WeightSequence() = default;

  void ensure_prime_count(std::int64_t k) const;
  void ensure_primes_to(std::int64_t limit) const;

  bool primes_ = false;
  double theta_ = 0.0;
  std::shared_ptr<PrimeTable> table_;
};

}  // namespace monolab

#endif  // MONOLAB_WEIGHTS_HPP
