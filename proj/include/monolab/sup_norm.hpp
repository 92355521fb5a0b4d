#ifndef MONOLAB_SUP_NORM_HPP
#define MONOLAB_SUP_NORM_HPP

#include <cstdint>

#include "monolab/poly.hpp"

namespace monolab {

struct SupNormBudget {
  int restarts = 64;
  int iterations = 200;
  std::uint64_t seed = 0;
};

/// Certified sandwich of ||P||_infty on the ball: `lower` is attained at
/// `witness`, `upper` dominates the true norm.
struct SupNormEstimate {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<Complex> witness;
};

/// Certified upper bound: sum_j |c_j| * monomial_sup_norm, improved for
/// single-variable polynomials by circle sampling with a Bernstein
/// correction (max over N points divided by 1 - pi d / N).
double sup_norm_upper(const SparsePolynomial& p, const BallSpec& spec);

/// Lower bound by multi-start projected gradient ascent; the exact
/// maximizer of each monomial is seeded first, so single monomials are
/// resolved sharply. Deterministic for a fixed budget.
SupNormEstimate sup_norm(const SparsePolynomial& p, const BallSpec& spec,
                         const SupNormBudget& budget = {});

/// SplitMix64; used to derive independent per-restart streams.
std::uint64_t split_mix64(std::uint64_t& state);

}  // namespace monolab

#endif  // MONOLAB_SUP_NORM_HPP
