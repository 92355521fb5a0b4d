#ifndef MONOLAB_INDEX_SETS_HPP
#define MONOLAB_INDEX_SETS_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "monolab/multi_index.hpp"
#include "monolab/weights.hpp"

namespace monolab {

/// The weighted index families of the Konyagin-Queffelec decomposition:
///   Jx      = { j : q_j <= x } including the empty index
///   Jxm     = { j of length m : q_j <= x }
///   Jminus  = { j : q_j <= x, all entries <= l } including the empty index
///   Jplus   = { j of length m : q_j <= x, all entries > l }
/// where l is the cutoff rank of y (q_l <= y < q_{l+1}). Ties q_j = x are
/// members.
enum class Family { Jx, Jxm, Jminus, Jplus };

struct WeightedFamilySpec {
  WeightSequence seq;
  Family family = Family::Jx;
  double x = 0.0;
  std::optional<double> y;  // required for Jminus/Jplus
  std::optional<int> m;     // required for Jxm/Jplus

  std::int64_t cutoff() const;  // l
  void validate() const;
};

struct FamilyCensus {
  BigInt cardinality = 0;
  std::map<int, BigInt> by_degree;
  std::optional<double> analytic_bound;
  std::optional<bool> bound_satisfied;
};

/// Visits every member exactly once, depth-first with running-product
/// pruning; lexicographic within a fixed length, prefix-first otherwise.
void for_each_index(const WeightedFamilySpec& spec,
                    const std::function<void(const MultiIndex&)>& visit,
                    std::uint64_t cap = kDefaultEnumCap);

std::vector<MultiIndex> enumerate_family(const WeightedFamilySpec& spec,
                                         std::uint64_t cap = kDefaultEnumCap);

/// Exact counts plus the applicable analytic size bound:
///   Jminus        (1 + log x / log q_1)^l
///   Jplus, klog   x y^-m exp(y (g_theta(x) + c)), c = 1/q_1 + 1/q_2 + 1/q_3
///   Jplus, primes same shape with loglog x and the supplied c
///   Jxm, primes   C_m x/log x (loglog x)^(m-1), reported with C_m = 1
///   Jx, primes    floor(x)  (bijection with the integers 1..x)
/// bound_satisfied is set only where the constant is concrete.
FamilyCensus census(const WeightedFamilySpec& spec,
                    std::optional<double> primes_c = std::nullopt,
                    std::uint64_t cap = kDefaultEnumCap);

/// The unique split k = (i, j) with i the entries <= l and j the entries
/// > l; i lies in Jminus(x;y), j in Jplus(x, |j|; y).
struct KqSplit {
  MultiIndex prefix;
  int suffix_degree = 0;
  MultiIndex suffix;
};

KqSplit kq_decompose(const WeightSequence& seq, double x, double y,
                     const MultiIndex& k);

/// Checks J(x,m)* subset of J(x^((m-1)/m), m-1); with y present, the
/// analogous inclusion for the Jplus families. Exact arithmetic for primes
/// with integral x.
bool verify_reduced_inclusion(const WeightSequence& seq, double x, int m,
                              std::optional<double> y = std::nullopt,
                              std::uint64_t cap = kDefaultEnumCap);

}  // namespace monolab

#endif  // MONOLAB_INDEX_SETS_HPP
