#include "monolab/sup_norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace monolab {

std::uint64_t split_mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double coefficient_route_upper(const SparsePolynomial& p, const BallSpec& spec) {
  CompensatedSum sum;
  for (const auto& [j, c] : p.terms()) {
    std::vector<int> alpha = to_exponent(j);
    sum.add(std::abs(c) * monomial_sup_norm(spec, alpha));
  }
  return sum.value();
}

// For a polynomial in one variable the ball constraint reduces to |u| <= 1
// and the maximum modulus principle puts the sup on the circle. Max over N
// equispaced points, corrected by the Bernstein bound |P'| <= d ||P||:
// ||P|| <= M / (1 - pi d / N).
double single_variable_upper(const SparsePolynomial& p) {
  int degree = 0;
  for (const auto& [j, c] : p.terms()) degree = std::max(degree, j.length());
  if (degree == 0) {
    double s = 0.0;
    for (const auto& [j, c] : p.terms()) s += std::abs(c);
    return s;
  }
  // Dense coefficients by degree.
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree + 1));
  for (const auto& [j, c] : p.terms())
    coeffs[static_cast<std::size_t>(j.length())] += c;

  int samples = std::max(128, 64 * degree);
  double max_modulus = 0.0;
  for (int k = 0; k < samples; ++k) {
    double angle = 2.0 * std::numbers::pi * k / samples;
    Complex z{std::cos(angle), std::sin(angle)};
    Complex v{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    max_modulus = std::max(max_modulus, std::abs(v));
  }
  return max_modulus / (1.0 - std::numbers::pi * degree / samples);
}

}  // namespace

double sup_norm_upper(const SparsePolynomial& p, const BallSpec& spec) {
  double upper = coefficient_route_upper(p, spec);
  if (p.single_variable()) upper = std::min(upper, single_variable_upper(p));
  return upper;
}

namespace {

class Ascent {
 public:
  Ascent(const SparsePolynomial& p, const BallSpec& spec)
      : spec_(spec),
        n_(std::max(spec.n, p.max_variable())),
        homogeneous_(p.homogeneous_degree().has_value()) {
    for (const auto& [j, c] : p.terms()) {
      Term t;
      t.coefficient = c;
      t.alpha.assign(static_cast<std::size_t>(n_), 0);
      for (int e : j.entries()) t.alpha[static_cast<std::size_t>(e - 1)] += 1;
      terms_.push_back(std::move(t));
    }
  }

  int dimension() const { return n_; }

  Complex value(const std::vector<Complex>& u) const {
    CompensatedSum re, im;
    for (const auto& t : terms_) {
      Complex m{1.0, 0.0};
      for (int k = 0; k < n_; ++k)
        for (int a = 0; a < t.alpha[static_cast<std::size_t>(k)]; ++a)
          m *= u[static_cast<std::size_t>(k)];
      Complex v = t.coefficient * m;
      re.add(v.real());
      im.add(v.imag());
    }
    return {re.value(), im.value()};
  }

  // Gradient of |P|^2 in the real identification: G_k = 2 P conj(dP/du_k).
  std::vector<Complex> gradient(const std::vector<Complex>& u,
                                Complex value_at_u) const {
    std::vector<Complex> grad(static_cast<std::size_t>(n_), Complex{0.0, 0.0});
    for (const auto& t : terms_) {
      for (int k = 0; k < n_; ++k) {
        int a = t.alpha[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        Complex d = t.coefficient * static_cast<double>(a);
        for (int v = 0; v < n_; ++v) {
          int e = t.alpha[static_cast<std::size_t>(v)] - (v == k ? 1 : 0);
          for (int q = 0; q < e; ++q) d *= u[static_cast<std::size_t>(v)];
        }
        grad[static_cast<std::size_t>(k)] += d;
      }
    }
    for (auto& g : grad) g = 2.0 * value_at_u * std::conj(g);
    return grad;
  }

  void project(std::vector<Complex>& u) const {
    if (spec_.is_inf()) {
      for (auto& c : u) {
        double m = std::abs(c);
        if (m > 1.0) c /= m;
      }
      // Homogeneous polynomials are monotone under scaling: push to the
      // boundary along the largest coordinate.
      if (homogeneous_) {
        double mx = 0.0;
        for (const auto& c : u) mx = std::max(mx, std::abs(c));
        if (mx > 0.0 && mx < 1.0)
          for (auto& c : u) c /= mx;
      }
      return;
    }
    double norm = 0.0;
    for (const auto& c : u) norm += std::pow(std::abs(c), spec_.r);
    norm = std::pow(norm, 1.0 / spec_.r);
    if (norm > 1.0 || (homogeneous_ && norm > 0.0))
      for (auto& c : u) c /= norm;
  }

 private:
  struct Term {
    Complex coefficient;
    std::vector<int> alpha;
  };

  BallSpec spec_;
  int n_;
  bool homogeneous_;
  std::vector<Term> terms_;
};

}  // namespace

SupNormEstimate sup_norm(const SparsePolynomial& p, const BallSpec& spec,
                         const SupNormBudget& budget) {
  SupNormEstimate est;
  est.upper = sup_norm_upper(p, spec);
  est.witness.assign(static_cast<std::size_t>(std::max(spec.n, 1)),
                     Complex{0.0, 0.0});
  if (p.term_count() == 0) return est;

  Ascent ascent(p, spec);
  int n = ascent.dimension();

  std::vector<std::vector<Complex>> seeds;
  // Closed-form maximizer of each monomial: moduli (alpha_k / m)^(1/r).
  for (const auto& [j, c] : p.terms()) {
    std::vector<Complex> u(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    int m = j.length();
    std::vector<int> alpha = to_exponent(j);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      double modulus =
          spec.is_inf()
              ? 1.0
              : std::pow(static_cast<double>(alpha[k]) / m, 1.0 / spec.r);
      u[k] = Complex{modulus, 0.0};
    }
    if (m == 0 && spec.is_inf())
      for (auto& c2 : u) c2 = Complex{1.0, 0.0};
    seeds.push_back(std::move(u));
  }

  double best = 0.0;
  std::vector<Complex> best_u;
  for (int restart = 0; restart < budget.restarts; ++restart) {
    std::vector<Complex> u;
    if (restart < static_cast<int>(seeds.size())) {
      u = seeds[static_cast<std::size_t>(restart)];
    } else {
      std::uint64_t s = budget.seed ^ (0xabcd1234ULL + static_cast<std::uint64_t>(restart));
      std::mt19937_64 rng(split_mix64(s));
      std::normal_distribution<double> gauss(0.0, 1.0);
      u.resize(static_cast<std::size_t>(n));
      for (auto& c : u) c = Complex{gauss(rng), gauss(rng)};
    }
    ascent.project(u);

    Complex pu = ascent.value(u);
    double current = std::abs(pu);
    double step = 0.25;
    for (int it = 0; it < budget.iterations; ++it) {
      std::vector<Complex> grad = ascent.gradient(u, pu);
      double gnorm = 0.0;
      for (const auto& g : grad) gnorm += std::norm(g);
      gnorm = std::sqrt(gnorm);
      if (gnorm < 1e-300) break;
      bool improved = false;
      for (int attempt = 0; attempt < 25 && !improved; ++attempt) {
        std::vector<Complex> candidate = u;
        for (std::size_t k = 0; k < candidate.size(); ++k)
          candidate[k] += (step / gnorm) * grad[k];
        ascent.project(candidate);
        Complex pc = ascent.value(candidate);
        if (std::abs(pc) > current) {
          u = std::move(candidate);
          pu = pc;
          current = std::abs(pc);
          step *= 1.3;
          improved = true;
        } else {
          step *= 0.5;
        }
      }
      if (!improved) break;
    }
    if (current > best) {
      best = current;
      best_u = u;
    }
  }
  est.lower = std::min(best, est.upper);
  // Rounding in the two routes can put the witness value a hair above the
  // certified upper estimate for sharp monomials; the sandwich order is
  // restored by the min above.
  est.witness = best_u;
  return est;
}

}  // namespace monolab
