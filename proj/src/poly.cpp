#include "monolab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace monolab {

BallSpec BallSpec::lr(double r, int n) {
  if (!(r >= 1.0)) throw std::invalid_argument("BallSpec: requires r >= 1");
  if (n < 1) throw std::invalid_argument("BallSpec: requires n >= 1");
  return BallSpec{r, n};
}

double BallSpec::conjugate() const {
  if (r == 1.0) return kInfinity;
  if (is_inf()) return 1.0;
  return r / (r - 1.0);
}

void SparsePolynomial::set(const MultiIndex& j, Complex c) {
  if (c == Complex{0.0, 0.0})
    terms_.erase(j);
  else
    terms_[j] = c;
}

Complex SparsePolynomial::coefficient(const MultiIndex& j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [j, c] : terms_) {
    if (!degree)
      degree = j.length();
    else if (*degree != j.length())
      return std::nullopt;
  }
  return degree;
}

int SparsePolynomial::max_variable() const {
  int n = 0;
  for (const auto& [j, c] : terms_) n = std::max(n, j.max_entry());
  return n;
}

std::optional<int> SparsePolynomial::single_variable() const {
  int v = 0;
  for (const auto& [j, c] : terms_) {
    for (int e : j.entries()) {
      if (v == 0)
        v = e;
      else if (v != e)
        return std::nullopt;
    }
  }
  return v == 0 ? std::optional<int>(1) : std::optional<int>(v);
}

Complex evaluate(const SparsePolynomial& p, std::span<const Complex> u) {
  if (p.max_variable() > static_cast<int>(u.size()))
    throw std::invalid_argument("evaluate: point dimension too small");
  CompensatedSum re, im;
  for (const auto& [j, c] : p.terms()) {
    Complex monomial{1.0, 0.0};
    for (int e : j.entries()) monomial *= u[static_cast<std::size_t>(e - 1)];
    Complex term = c * monomial;
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

double monomial_sup_norm(const BallSpec& spec, std::span<const int> alpha) {
  if (spec.is_inf()) return 1.0;
  int m = 0;
  for (int a : alpha) m += a;
  if (m == 0) return 1.0;
  double log_value = 0.0;
  for (int a : alpha)
    if (a > 0) log_value += a * std::log(static_cast<double>(a));
  log_value -= m * std::log(static_cast<double>(m));
  return std::exp(log_value / spec.r);
}

SparsePolynomial transfer_coefficients(const SparsePolynomial& p,
                                       std::span<const Complex> w) {
  if (p.max_variable() > static_cast<int>(w.size()))
    throw std::invalid_argument("transfer_coefficients: weight vector too small");
  SparsePolynomial out;
  for (const auto& [j, c] : p.terms()) {
    Complex factor{1.0, 0.0};
    for (int e : j.entries()) factor *= w[static_cast<std::size_t>(e - 1)];
    out.set(j, c * factor);
  }
  return out;
}

SparsePolynomial restrict_prefix(const SparsePolynomial& p, const MultiIndex& i,
                                 int l) {
  if (i.max_entry() > l)
    throw std::invalid_argument("restrict_prefix: prefix entries must be <= l");
  SparsePolynomial out;
  for (const auto& [k, c] : p.terms()) {
    std::vector<int> lo;
    bool keep = true;
    for (int e : k.entries()) {
      if (e <= l) lo.push_back(e);
    }
    keep = (lo == i.entries());
    if (keep) out.set(k, c);
  }
  return out;
}

double weighted_sum(const SparsePolynomial& p, std::span<const Complex> u,
                    const std::vector<MultiIndex>& J) {
  CompensatedSum sum;
  for (const MultiIndex& j : J) {
    Complex c = p.coefficient(j);
    if (c == Complex{0.0, 0.0}) continue;
    if (j.max_entry() > static_cast<int>(u.size()))
      throw std::invalid_argument("weighted_sum: point dimension too small");
    double uj = 1.0;
    for (int e : j.entries()) uj *= std::abs(u[static_cast<std::size_t>(e - 1)]);
    sum.add(std::abs(c) * uj);
  }
  return sum.value();
}

SequencePoint SequencePoint::explicit_vector(std::vector<Complex> v) {
  SequencePoint s;
  s.kind = Kind::Explicit;
  s.values = std::move(v);
  return s;
}

SequencePoint SequencePoint::power_log(double exponent, double log_exponent) {
  SequencePoint s;
  s.kind = Kind::PowerLog;
  s.exponent = exponent;
  s.log_exponent = log_exponent;
  return s;
}

SequencePoint SequencePoint::prime_power_log(double exponent,
                                             double log_exponent) {
  SequencePoint s = power_log(exponent, log_exponent);
  s.kind = Kind::PrimePowerLog;
  return s;
}

SequencePoint SequencePoint::parse(const std::string& text) {
  auto first = text.find(':');
  if (first == std::string::npos || (text[0] != 'n' && text[0] != 'p'))
    throw std::invalid_argument(
        "SequencePoint: expected \"n:<e>[:b=<b>]\" or \"p:<e>[:b=<b>]\"");
  std::string rest = text.substr(first + 1);
  double b = 0.0;
  auto second = rest.find(':');
  if (second != std::string::npos) {
    std::string tail = rest.substr(second + 1);
    if (tail.rfind("b=", 0) != 0)
      throw std::invalid_argument("SequencePoint: expected b=<value>");
    b = std::stod(tail.substr(2));
    rest = rest.substr(0, second);
  }
  double e = std::stod(rest);
  return text[0] == 'n' ? power_log(e, b) : prime_power_log(e, b);
}

double SequencePoint::modulus(std::int64_t n, const WeightSequence* primes) const {
  switch (kind) {
    case Kind::Explicit:
      if (n > static_cast<std::int64_t>(values.size()))
        throw std::out_of_range("SequencePoint: coordinate beyond truncation");
      return std::abs(values[static_cast<std::size_t>(n - 1)]);
    case Kind::PowerLog:
      return std::pow(static_cast<double>(n), exponent) *
             std::pow(std::log(static_cast<double>(n) + 2.0), -log_exponent);
    case Kind::PrimePowerLog: {
      if (primes == nullptr)
        throw std::invalid_argument("SequencePoint: prime sequence required");
      double p = static_cast<double>(primes->prime(n));
      return std::pow(p, exponent) *
             std::pow(std::log(static_cast<double>(n) + 2.0), -log_exponent);
    }
  }
  return 0.0;
}

nlohmann::json to_json(const SparsePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [j, c] : p.terms()) {
    terms.push_back({{"index", j.entries()}, {"re", c.real()}, {"im", c.imag()}});
  }
  auto degree = p.homogeneous_degree();
  nlohmann::json out;
  out["degree"] = degree ? nlohmann::json(*degree) : nlohmann::json(nullptr);
  out["terms"] = std::move(terms);
  return out;
}

SparsePolynomial polynomial_from_json(const nlohmann::json& v) {
  SparsePolynomial p;
  for (const auto& term : v.at("terms")) {
    MultiIndex j(term.at("index").get<std::vector<int>>());
    p.set(j, Complex{term.at("re").get<double>(), term.at("im").get<double>()});
  }
  return p;
}

}  // namespace monolab
