// Numerical verification of the coefficient inequalities and the summation
// probes, all against certified upper norms so a failure is a real bug.
#ifndef MONOLAB_CHECKS_HPP
#define MONOLAB_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "monolab/index_sets.hpp"
#include "monolab/poly.hpp"

namespace monolab {

struct CheckReport {
  std::string name;
  bool applicable = true;
  bool passed = false;
  nlohmann::json details;  // per-term margins and inputs

  nlohmann::json to_json() const;
};

/// |c_alpha| <= (m^m/alpha^alpha)^(1/r) * upper(||P||) for every term of a
/// homogeneous P; reports per-term margins and the sharper ratio against
/// the lower estimate when requested by the caller.
CheckReport cauchy_bound_check(const SparsePolynomial& p, const BallSpec& spec);

/// Mixed-norm coefficient inequality, homogeneous degree m >= 2.
/// r <= 2: per prefix j, (sum_k |c_(j,k)|^r')^(1/r') <=
///         m e^(1+(m-1)/r) |j|^(1/r) upper;
/// r = infinity: sum_k (sum_j |c_(j,k)|^2)^(1/2) <= e m 2^((m-1)/2) upper.
/// 2 < r < infinity has no statement: applicable = false.
CheckReport mixed_norm_check(const SparsePolynomial& p, const BallSpec& spec);

/// sum_{j in J} |c_j||u_j| <= C(m,r) |J*|^sigma ||u||_r^m upper(||P||).
CheckReport thm_monomial_check(const SparsePolynomial& p, const BallSpec& spec,
                               const std::vector<MultiIndex>& J,
                               std::span<const Complex> u);

struct KqSumResult {
  double direct = 0.0;      // one pass over J(x)
  double decomposed = 0.0;  // grouped by the small-entry prefix
};

/// sum_{q_k <= x} |c_k u_k| computed directly and through the
/// prefix/suffix decomposition of each index at the cutoff of y; the two
/// routes differ only in summation order.
KqSumResult kq_sum(const SparsePolynomial& coeffs, const SequencePoint& u,
                   const WeightSequence& seq, double x, double y,
                   std::uint64_t cap = kDefaultEnumCap);

struct BlockSums {
  std::vector<double> block_sums;  // S_N over base^N < q_j <= base^(N+1)
  std::vector<double> cumulative;  // running totals
};

/// Per-block sums S_N for N = 0..n_max, with S_0 absorbing q_j <= base
/// (including the empty index); their total telescopes to the weighted sum
/// over J(base^(n_max+1)).
BlockSums block_partial_sums(const SparsePolynomial& coeffs,
                             const SequencePoint& u, const WeightSequence& seq,
                             double base, int n_max,
                             std::uint64_t cap = kDefaultEnumCap);

/// Coefficients +-1 i.i.d. from the seed, in the given index order;
/// optionally scaled by the multiplicity of each index.
SparsePolynomial random_sign_polynomial(const std::vector<MultiIndex>& J,
                                        std::uint64_t seed,
                                        bool weight_by_multiplicity = false);

/// max over seeds of |J| / upper(||P_eps||) — a certified lower bound for
/// the unconditional basis constant of the family.
double sidon_lower_bound(const std::vector<MultiIndex>& J,
                         const BallSpec& spec, int seeds);

}  // namespace monolab

#endif  // MONOLAB_CHECKS_HPP
