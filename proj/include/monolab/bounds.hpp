// Closed-form bound evaluation with every intermediate exposed for audit.
#ifndef MONOLAB_BOUNDS_HPP
#define MONOLAB_BOUNDS_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "monolab/weights.hpp"

namespace monolab {

/// One evaluated bound: pure function of `inputs`, replay-stable.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  std::map<std::string, double> intermediates;
  double value = 0.0;
  std::vector<std::string> flags;

  nlohmann::json to_json() const;
};

/// sigma = 1 - 1/min(r, 2); r may be kInfinity.
double sigma_of(double r);

/// e m e^((m-1)/r) for r <= 2, e m 2^((m-1)/2) for r >= 2. At r = 2 the
/// first branch is returned (the two do not coincide).
double constant_cmr(int m, double r);

/// constant_cmr(m, r) * J_star_size^sigma.
double chi_upper(int m, double r, double j_star_size);

/// Fully explicit pre-asymptotic master bound for the weighted coefficient
/// sum over J(x): prefactor (1 + log x/log q_1)^(l+1) times the maximum
/// over degrees m of C(m,r) * (size bound of the large-entry family at
/// x^((m-1)/m), degree m-1)^sigma. For the prime sequence `c` must be
/// supplied; for klog the concrete c = 1/q_1 + 1/q_2 + 1/q_3 is used and
/// theta must exceed 1/2. Intermediates include the cutoff rank, the
/// prefactor, the maximizing degree, and an envelope-over-x^sigma probe
/// value used by trend fits.
BoundReport kq_master_bound(const WeightSequence& seq, double x, double y,
                            double r,
                            std::optional<double> primes_c = std::nullopt);

/// y = (log x)^(theta - 1/2) / loglog x, clamped into (2, x); requires
/// x > e^e and theta in (1/2, 1]. A "clamped" flag marks adjusted values.
BoundReport recommended_y(double x, double theta);

/// Which denominator the stationary point of h uses; both printed forms
/// are supported and maximality is verified numerically in tests.
enum class HVariant { AsPrinted, LogC };

/// h(m) = m log C - (log x)/m - m log y; returns the stationary point M
/// and h(M). AsPrinted: M = sqrt(log x / (log y - C)); LogC substitutes
/// log C for C. Throws std::domain_error when the denominator is <= 0.
std::pair<double, double> h_maximizer(double x, double y, double C,
                                      HVariant variant = HVariant::LogC);

/// Displayed x-dependence of the degree-m coefficient-sum bound, with the
/// multiplicative constant reported as 1 (flag "unnormalized-constant").
/// r <= 2: x^(((m-1)/m)(1-1/r)) (loglog x)^((m-1)(1-1/r)) / (log x)^(1-1/r);
/// r >= 2: x^((m-1)/2m) / (log x)^((m-1)/2). The r <= 2 branch wins at r=2.
BoundReport polynomial_bound(int m, double r, double x);

/// (1/(3 e^2)) / sup_m |J(m,n)*|^(sigma/m), sizes given as logs (entry
/// m-1 holds log|J(m,n)*| = log|J(m-1,n)|); intermediates carry the per-m
/// radii chi_upper(m, r, |J*|)^(-1/m).
BoundReport bohr_lower_bound(int n, double r,
                             std::span<const double> log_reduced_sizes);

/// sigma_m = ((m-1)/m)(1 - 1/r).
double sigma_m(int m, double r);

/// log|J(m-1, n)| for m = 1..m_max via lgamma, for feeding bohr_lower_bound
/// with the full family.
std::vector<double> full_family_log_reduced_sizes(int n, int m_max);

}  // namespace monolab

#endif  // MONOLAB_BOUNDS_HPP
