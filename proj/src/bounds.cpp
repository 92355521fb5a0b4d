#include "monolab/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "monolab/constants.hpp"
#include "monolab/poly.hpp"

namespace monolab {

namespace {

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (std::isnan(v) ? "nan" : "-inf");
}

nlohmann::json json_map(const std::map<std::string, double>& m) {
  auto out = nlohmann::json::object();
  for (const auto& [k, v] : m) out[k] = json_number(v);
  return out;
}

}  // namespace

nlohmann::json BoundReport::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  out["inputs"] = json_map(inputs);
  out["intermediates"] = json_map(intermediates);
  out["value"] = json_number(value);
  out["flags"] = flags;
  return out;
}

double sigma_of(double r) {
  if (r < 1.0) throw std::domain_error("r must be >= 1");
  return 1.0 - 1.0 / std::min(r, 2.0);
}

double constant_cmr(int m, double r) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (r < 1.0) throw std::domain_error("r must be >= 1");
  const double e = std::exp(1.0);
  if (r <= 2.0) return e * m * std::exp((m - 1) / r);
  return e * m * std::pow(2.0, (m - 1) / 2.0);
}

double chi_upper(int m, double r, double j_star_size) {
  if (j_star_size < 1.0) throw std::domain_error("|J*| must be >= 1");
  return constant_cmr(m, r) * std::pow(j_star_size, sigma_of(r));
}

BoundReport kq_master_bound(const WeightSequence& seq, double x, double y,
                            double r, std::optional<double> primes_c) {
  if (!(x > y && y > 2.0)) throw std::domain_error("need x > y > 2");
  double c;
  if (seq.is_primes()) {
    if (!primes_c) throw std::domain_error("primes sequence needs c");
    c = *primes_c;
  } else {
    if (seq.theta() <= 0.5)
      throw std::domain_error("theta must exceed 1/2 for the master bound");
    c = 1.0 / seq.term(1) + 1.0 / seq.term(2) + 1.0 / seq.term(3);
  }

  const double sigma = sigma_of(r);
  const double log_x = std::log(x);
  const double log_y = std::log(y);
  const std::int64_t l = seq.cutoff_rank(y);
  const double log_q1 = std::log(seq.term(1));
  const double prefactor =
      std::pow(1.0 + log_x / log_q1, static_cast<double>(l + 1));
  const int m_cap = std::max(1, static_cast<int>(log_x / log_q1));

  // Size bound for the large-entry family at X = x^((m-1)/m), degree m-1:
  // X y^-(m-1) exp(y (g(X) + c)); degree 0 is the singleton {empty index}.
  auto g_at = [&](double t) {
    return seq.is_primes() ? std::log(std::log(t)) : seq.g_theta(t);
  };
  double best = 0.0;
  int best_m = 1;
  for (int m = 1; m <= m_cap; ++m) {
    double term;
    if (m == 1) {
      term = constant_cmr(1, r);
    } else {
      const double cap_x = std::pow(x, (m - 1.0) / m);
      const double log_size = std::log(cap_x) - (m - 1) * log_y +
                              y * (g_at(cap_x) + c);
      term = constant_cmr(m, r) * std::exp(sigma * log_size);
    }
    if (term > best) {
      best = term;
      best_m = m;
    }
  }

  // Envelope probe: with the recommended choice of y the per-degree factor
  // collapses to exp(sigma h(m)), h(m) = m log C - (log x)/m - m log y;
  // its maximum over integer degrees drives the decay trend in x.
  const double log_c_env = std::log(constants::kKqEnvelopeC);
  double envelope = 0.0;
  for (int m = 1; m <= std::max(m_cap, 2); ++m) {
    const double h = m * log_c_env - log_x / m - m * log_y;
    envelope = std::max(envelope, std::exp(sigma * h));
  }

  BoundReport report;
  report.name = "kq_master";
  report.inputs = {{"x", x},
                   {"y", y},
                   {"r", r},
                   {"sigma", sigma},
                   {"c", c},
                   {"theta", seq.is_primes() ? 0.0 : seq.theta()}};
  report.intermediates = {{"l", static_cast<double>(l)},
                          {"prefactor", prefactor},
                          {"argmax_m", static_cast<double>(best_m)},
                          {"sup_term", best},
                          {"envelope_over_x_sigma", envelope}};
  report.value = prefactor * best;
  if (seq.is_primes()) report.flags.push_back("calibrated-c");
  return report;
}

BoundReport recommended_y(double x, double theta) {
  const double ee = std::exp(std::exp(1.0));
  if (!(x > ee)) throw std::domain_error("x must exceed e^e");
  if (!(theta > 0.5 && theta <= 1.0))
    throw std::domain_error("theta must lie in (1/2, 1]");
  const double log_x = std::log(x);
  const double raw = std::pow(log_x, theta - 0.5) / std::log(log_x);

  BoundReport report;
  report.name = "recommended_y";
  report.inputs = {{"x", x}, {"theta", theta}};
  report.intermediates = {{"raw", raw}};
  report.value = raw;
  if (raw <= 2.0) {
    report.value = 2.0 * (1.0 + 1e-6);
    report.flags.push_back("clamped");
  } else if (raw >= x) {
    report.value = std::nextafter(x, 0.0);
    report.flags.push_back("clamped");
  }
  return report;
}

std::pair<double, double> h_maximizer(double x, double y, double C,
                                      HVariant variant) {
  if (!(x > 1.0)) throw std::domain_error("x must exceed 1");
  const double log_c = std::log(C);
  const double denom =
      variant == HVariant::AsPrinted ? std::log(y) - C : std::log(y) - log_c;
  if (!(denom > 0.0)) throw std::domain_error("log y must exceed the base");
  const double m = std::sqrt(std::log(x) / denom);
  const double h = m * log_c - std::log(x) / m - m * std::log(y);
  return {m, h};
}

BoundReport polynomial_bound(int m, double r, double x) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (!(x >= 3.0)) throw std::domain_error("x must be >= 3");
  const double log_x = std::log(x);
  const double loglog_x = std::log(log_x);

  BoundReport report;
  report.name = "polynomial_bound";
  report.inputs = {{"m", static_cast<double>(m)}, {"r", r}, {"x", x}};
  report.flags.push_back("unnormalized-constant");
  if (r <= 2.0) {
    const double s = 1.0 - 1.0 / r;
    report.intermediates = {{"x_exponent", (m - 1.0) / m * s},
                            {"loglog_exponent", (m - 1.0) * s},
                            {"log_exponent", -s}};
    report.value = std::pow(x, (m - 1.0) / m * s) *
                   std::pow(loglog_x, (m - 1.0) * s) / std::pow(log_x, s);
  } else {
    report.intermediates = {{"x_exponent", (m - 1.0) / (2.0 * m)},
                            {"log_exponent", -(m - 1.0) / 2.0}};
    report.value = std::pow(x, (m - 1.0) / (2.0 * m)) /
                   std::pow(log_x, (m - 1.0) / 2.0);
  }
  return report;
}

BoundReport bohr_lower_bound(int n, double r,
                             std::span<const double> log_reduced_sizes) {
  if (log_reduced_sizes.empty())
    throw std::domain_error("need at least one reduced-set size");
  const double sigma = sigma_of(r);

  BoundReport report;
  report.name = "bohr_lower";
  report.inputs = {{"n", static_cast<double>(n)},
                   {"r", r},
                   {"sigma", sigma},
                   {"m_max", static_cast<double>(log_reduced_sizes.size())}};

  double sup_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_reduced_sizes.size(); ++i) {
    const int m = static_cast<int>(i) + 1;
    const double log_size = log_reduced_sizes[i];
    if (log_size < 0.0) throw std::domain_error("sizes must be >= 1");
    sup_log = std::max(sup_log, sigma / m * log_size);
    const double radius =
        std::exp(-(std::log(constant_cmr(m, r)) + sigma * log_size) / m);
    report.intermediates["radius_m" + std::to_string(m)] = radius;
  }
  report.intermediates["sup_log_term"] = sup_log;
  report.value = 1.0 / (3.0 * std::exp(2.0)) * std::exp(-sup_log);
  return report;
}

double sigma_m(int m, double r) {
  if (m < 1) throw std::domain_error("m must be >= 1");
  if (r < 1.0) throw std::domain_error("r must be >= 1");
  if (std::isinf(r)) return (m - 1.0) / m;
  return (m - 1.0) / m * (1.0 - 1.0 / r);
}

std::vector<double> full_family_log_reduced_sizes(int n, int m_max) {
  if (n < 1 || m_max < 1) throw std::domain_error("need n, m_max >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    // log|J(m-1, n)| = log binom(n + m - 2, m - 1)
    const double log_binom = std::lgamma(n + m - 1.0) -
                             std::lgamma(static_cast<double>(m)) -
                             std::lgamma(static_cast<double>(n));
    out.push_back(log_binom);
  }
  return out;
}

}  // namespace monolab
