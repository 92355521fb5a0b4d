#include "monolab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "monolab/bounds.hpp"
#include "monolab/sup_norm.hpp"

namespace monolab {

namespace {

constexpr double kRelSlack = 1e-9;

BallSpec cover(const BallSpec& spec, const SparsePolynomial& p) {
  return BallSpec::lr(spec.r, std::max(spec.n, std::max(1, p.max_variable())));
}

const WeightSequence& prime_seq() {
  static const WeightSequence primes = WeightSequence::primes();
  return primes;
}

double sequence_modulus(const SequencePoint& u, const MultiIndex& j) {
  double prod = 1.0;
  for (int e : j.entries()) prod *= u.modulus(e, &prime_seq());
  return prod;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json out;
  out["name"] = name;
  out["applicable"] = applicable;
  out["passed"] = passed;
  out["details"] = details;
  return out;
}

CheckReport cauchy_bound_check(const SparsePolynomial& p,
                               const BallSpec& spec) {
  CheckReport report;
  report.name = "cauchy_bound";
  const auto degree = p.homogeneous_degree();
  if (!degree || *degree < 1) {
    report.applicable = false;
    report.details["reason"] = "requires a homogeneous polynomial, degree >= 1";
    return report;
  }
  const BallSpec ball = cover(spec, p);
  const double upper = sup_norm_upper(p, ball);
  report.details["upper"] = upper;
  report.passed = true;
  auto terms = nlohmann::json::array();
  for (const auto& [j, c] : p.terms()) {
    const auto alpha = to_exponent(j);
    const double mono = monomial_sup_norm(ball, alpha);
    const double bound = upper / mono;  // (m^m/alpha^alpha)^(1/r) * upper
    const double lhs = std::abs(c);
    const bool ok = lhs <= bound * (1.0 + kRelSlack);
    report.passed = report.passed && ok;
    terms.push_back({{"index", to_json(j)},
                     {"coeff_abs", lhs},
                     {"bound", bound},
                     {"margin", bound - lhs}});
  }
  report.details["terms"] = std::move(terms);
  return report;
}

CheckReport mixed_norm_check(const SparsePolynomial& p, const BallSpec& spec) {
  CheckReport report;
  report.name = "mixed_norm";
  const auto degree = p.homogeneous_degree();
  if (!degree || *degree < 2) {
    report.applicable = false;
    report.details["reason"] = "requires a homogeneous polynomial, degree >= 2";
    return report;
  }
  if (spec.r > 2.0 && !spec.is_inf()) {
    report.applicable = false;
    report.details["reason"] = "no statement for 2 < r < infinity";
    return report;
  }
  const int m = *degree;
  const BallSpec ball = cover(spec, p);
  const double upper = sup_norm_upper(p, ball);
  report.details["upper"] = upper;
  report.passed = true;

  if (ball.is_inf()) {
    // sum over the last entry k of the l2 norm across prefixes.
    std::map<int, CompensatedSum> by_last;
    for (const auto& [j, c] : p.terms())
      by_last[j.entry(m - 1)].add(std::norm(c));
    CompensatedSum lhs;
    for (const auto& [k, sq] : by_last) lhs.add(std::sqrt(sq.value()));
    const double rhs = std::exp(1.0) * m * std::pow(2.0, (m - 1) / 2.0) * upper;
    report.passed = lhs.value() <= rhs * (1.0 + kRelSlack);
    report.details["lhs"] = lhs.value();
    report.details["rhs"] = rhs;
    return report;
  }

  // r <= 2: per-prefix r' norm of the suffix coefficients.
  const double rp = ball.conjugate();
  std::map<MultiIndex, std::vector<double>> by_prefix;
  for (const auto& [j, c] : p.terms())
    by_prefix[j.prefix(m - 1)].push_back(std::abs(c));
  auto prefixes = nlohmann::json::array();
  for (const auto& [j, moduli] : by_prefix) {
    double lhs;
    if (std::isinf(rp)) {
      lhs = *std::max_element(moduli.begin(), moduli.end());
    } else {
      CompensatedSum s;
      for (double v : moduli) s.add(std::pow(v, rp));
      lhs = std::pow(s.value(), 1.0 / rp);
    }
    const double mult = multiplicity(j).convert_to<double>();
    const double rhs = m * std::exp(1.0 + (m - 1) / ball.r) *
                       std::pow(mult, 1.0 / ball.r) * upper;
    const bool ok = lhs <= rhs * (1.0 + kRelSlack);
    report.passed = report.passed && ok;
    prefixes.push_back({{"prefix", to_json(j)},
                        {"lhs", lhs},
                        {"rhs", rhs},
                        {"margin", rhs - lhs}});
  }
  report.details["prefixes"] = std::move(prefixes);
  return report;
}

CheckReport thm_monomial_check(const SparsePolynomial& p, const BallSpec& spec,
                               const std::vector<MultiIndex>& J,
                               std::span<const Complex> u) {
  CheckReport report;
  report.name = "thm_monomial";
  if (J.empty()) {
    report.applicable = false;
    report.details["reason"] = "empty index family";
    return report;
  }
  const int m = J.front().length();
  for (const auto& j : J)
    if (j.length() != m || m < 1)
      throw std::invalid_argument("J must be homogeneous of degree >= 1");

  const BallSpec ball = cover(spec, p);
  const double upper = sup_norm_upper(p, ball);
  const double lhs = weighted_sum(p, u, J);
  const double j_star = static_cast<double>(reduce(J).size());

  double u_norm;
  if (ball.is_inf()) {
    u_norm = 0.0;
    for (const Complex& v : u) u_norm = std::max(u_norm, std::abs(v));
  } else {
    CompensatedSum s;
    for (const Complex& v : u) s.add(std::pow(std::abs(v), ball.r));
    u_norm = std::pow(s.value(), 1.0 / ball.r);
  }
  const double rhs = constant_cmr(m, ball.r) * std::pow(j_star, ball.sigma()) *
                     std::pow(u_norm, m) * upper;
  report.passed = lhs <= rhs * (1.0 + kRelSlack);
  report.details = {{"lhs", lhs},
                    {"rhs", rhs},
                    {"upper", upper},
                    {"j_star_size", j_star},
                    {"u_norm", u_norm},
                    {"margin", rhs - lhs}};
  return report;
}

KqSumResult kq_sum(const SparsePolynomial& coeffs, const SequencePoint& u,
                   const WeightSequence& seq, double x, double y,
                   std::uint64_t cap) {
  WeightedFamilySpec family{seq, Family::Jx, x, std::nullopt, std::nullopt};
  KqSumResult result;

  CompensatedSum direct;
  for_each_index(
      family,
      [&](const MultiIndex& k) {
        const double c = std::abs(coeffs.coefficient(k));
        if (c != 0.0) direct.add(c * sequence_modulus(u, k));
      },
      cap);
  result.direct = direct.value();

  // Same membership, summed prefix-by-prefix through the unique split of
  // each index at the cutoff of y.
  std::map<MultiIndex, CompensatedSum> by_prefix;
  for_each_index(
      family,
      [&](const MultiIndex& k) {
        const double c = std::abs(coeffs.coefficient(k));
        if (c == 0.0) return;
        const KqSplit split = kq_decompose(seq, x, y, k);
        by_prefix[split.prefix].add(c * sequence_modulus(u, k));
      },
      cap);
  CompensatedSum decomposed;
  for (const auto& [i, s] : by_prefix) decomposed.add(s.value());
  result.decomposed = decomposed.value();
  return result;
}

BlockSums block_partial_sums(const SparsePolynomial& coeffs,
                             const SequencePoint& u, const WeightSequence& seq,
                             double base, int n_max, std::uint64_t cap) {
  if (!(base > 1.0)) throw std::domain_error("base must exceed 1");
  if (n_max < 0) throw std::domain_error("n_max must be >= 0");
  const double x_total = std::pow(base, n_max + 1);
  std::vector<CompensatedSum> blocks(static_cast<std::size_t>(n_max) + 1);

  WeightedFamilySpec family{seq, Family::Jx, x_total, std::nullopt,
                            std::nullopt};
  for_each_index(
      family,
      [&](const MultiIndex& j) {
        const double c = std::abs(coeffs.coefficient(j));
        if (c == 0.0) return;
        const double q = seq.index_weight(j);
        double edge = base;
        int block = 0;
        while (block < n_max && q > edge * (1.0 + 1e-12)) {
          edge *= base;
          ++block;
        }
        blocks[static_cast<std::size_t>(block)].add(c *
                                                    sequence_modulus(u, j));
      },
      cap);

  BlockSums out;
  CompensatedSum running;
  for (const auto& s : blocks) {
    out.block_sums.push_back(s.value());
    running.add(s.value());
    out.cumulative.push_back(running.value());
  }
  return out;
}

SparsePolynomial random_sign_polynomial(const std::vector<MultiIndex>& J,
                                        std::uint64_t seed,
                                        bool weight_by_multiplicity) {
  std::mt19937_64 rng(seed);
  SparsePolynomial p;
  for (const auto& j : J) {
    const double sign = (rng() & 1u) ? 1.0 : -1.0;
    const double scale =
        weight_by_multiplicity ? multiplicity(j).convert_to<double>() : 1.0;
    p.set(j, Complex(sign * scale, 0.0));
  }
  return p;
}

double sidon_lower_bound(const std::vector<MultiIndex>& J,
                         const BallSpec& spec, int seeds) {
  if (J.empty()) throw std::invalid_argument("J must be nonempty");
  if (seeds < 1) throw std::invalid_argument("need at least one seed");
  const double size = static_cast<double>(J.size());
  double best = 0.0;
  for (int seed = 0; seed < seeds; ++seed) {
    const SparsePolynomial p =
        random_sign_polynomial(J, static_cast<std::uint64_t>(seed));
    const double upper = sup_norm_upper(p, cover(spec, p));
    best = std::max(best, size / upper);
  }
  return best;
}

}  // namespace monolab
