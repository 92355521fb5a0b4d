#ifndef MONOLAB_POLY_HPP
#define MONOLAB_POLY_HPP

#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "monolab/multi_index.hpp"
#include "monolab/weights.hpp"

namespace monolab {

using Complex = std::complex<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Kahan-compensated accumulator; first-order error independent of the
/// number of terms.
class CompensatedSum {
 public:
  void add(double value) {
    double t = value - compensation_;
    double s = sum_ + t;
    compensation_ = (s - sum_) - t;
    sum_ = s;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// The closed unit ball of l_r^n, 1 <= r <= infinity.
struct BallSpec {
  double r = 2.0;
  int n = 1;

  static BallSpec lr(double r, int n);

  bool is_inf() const { return r == kInfinity; }
  /// 1 - 1/min(r,2), in [0, 1/2].
  double sigma() const { return 1.0 - 1.0 / std::min(r, 2.0); }
  /// Conjugate exponent; infinity for r = 1, 1 for r = infinity.
  double conjugate() const;
};

/// Finitely supported P = sum c_j z_j with canonical nondecreasing indices;
/// zero coefficients are never stored. Immutable in spirit: mutate only
/// while building.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  void set(const MultiIndex& j, Complex c);
  Complex coefficient(const MultiIndex& j) const;
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Present iff all indices share one length.
  std::optional<int> homogeneous_degree() const;
  /// Smallest n with all entries <= n; 0 for the zero polynomial.
  int max_variable() const;
  /// The single variable used, if the support touches at most one.
  std::optional<int> single_variable() const;

 private:
  std::map<MultiIndex, Complex> terms_;
};

/// sum_j c_j prod_i u_{j_i}, compensated; requires dim(u) >= max variable.
Complex evaluate(const SparsePolynomial& p, std::span<const Complex> u);

/// Exact sup of |z^alpha| over the ball: (alpha^alpha / m^m)^(1/r) with the
/// 0^0 = 1 convention; 1 for r = infinity.
double monomial_sup_norm(const BallSpec& spec, std::span<const int> alpha);

/// Coefficient-wise multiply by w^alpha, realizing u -> p(u .* w).
SparsePolynomial transfer_coefficients(const SparsePolynomial& p,
                                       std::span<const Complex> w);

/// Sub-polynomial keeping exactly the indices that split as (i, j) with all
/// entries of j greater than l; requires all entries of i <= l.
SparsePolynomial restrict_prefix(const SparsePolynomial& p, const MultiIndex& i,
                                 int l);

/// sum over J of |c_j| |u_j|, compensated; absent coefficients count as 0.
double weighted_sum(const SparsePolynomial& p, std::span<const Complex> u,
                    const std::vector<MultiIndex>& J);

/// A point of the sequence space: explicit vector, or the parametric
/// families u_n = n^e (log(n+2))^(-b) and u_n = p_n^e (log(n+2))^(-b).
struct SequencePoint {
  enum class Kind { Explicit, PowerLog, PrimePowerLog };

  Kind kind = Kind::Explicit;
  std::vector<Complex> values;  // Explicit
  double exponent = 0.0;        // e, applied to n or p_n
  double log_exponent = 0.0;    // b

  static SequencePoint explicit_vector(std::vector<Complex> v);
  static SequencePoint power_log(double exponent, double log_exponent = 0.0);
  static SequencePoint prime_power_log(double exponent,
                                       double log_exponent = 0.0);
  /// Grammar: "n:<e>[:b=<b>]" or "p:<e>[:b=<b>]".
  static SequencePoint parse(const std::string& text);

  /// u_n, n >= 1; primes resolved through `primes` for PrimePowerLog.
  double modulus(std::int64_t n, const WeightSequence* primes = nullptr) const;
};

nlohmann::json to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& v);

}  // namespace monolab

#endif  // MONOLAB_POLY_HPP
