#include "monolab/index_sets.hpp"

#include <cmath>
#include <stdexcept>

namespace monolab {

std::int64_t WeightedFamilySpec::cutoff() const {
  if (!y) throw std::invalid_argument("WeightedFamilySpec: y required");
  return seq.cutoff_rank(*y);
}

void WeightedFamilySpec::validate() const {
  if (!(x > 2.0))
    throw std::invalid_argument("WeightedFamilySpec: requires x > 2");
  if (family == Family::Jminus || family == Family::Jplus) {
    if (!y || !(*y > 2.0) || !(*y < x))
      throw std::invalid_argument("WeightedFamilySpec: requires 2 < y < x");
  }
  if (family == Family::Jxm || family == Family::Jplus) {
    if (!m || *m < 0)
      throw std::invalid_argument("WeightedFamilySpec: requires m >= 0");
  }
}

namespace {

class FamilyEnumerator {
 public:
  FamilyEnumerator(const WeightedFamilySpec& spec,
                   const std::function<void(const MultiIndex&)>& visit,
                   std::uint64_t cap)
      : spec_(spec),
        visit_(visit),
        cap_(cap),
        primes_(spec.seq.is_primes()),
        x_(spec.x),
        x_int_(static_cast<std::int64_t>(spec.x)),
        fixed_length_(spec.family == Family::Jxm ||
                      spec.family == Family::Jplus),
        target_length_(fixed_length_ ? *spec.m : -1),
        max_entry_rank_((spec.family == Family::Jminus) ? spec.cutoff()
                                                        : INT64_MAX),
        min_first_rank_((spec.family == Family::Jplus) ? spec.cutoff() + 1
                                                       : 1) {}

  void run() {
    bool include_empty = spec_.family == Family::Jx ||
                         spec_.family == Family::Jminus ||
                         (fixed_length_ && target_length_ == 0);
    if (include_empty) emit();
    if (fixed_length_ && target_length_ == 0) return;
    product_int_ = 1;
    product_ = 1.0;
    descend(min_first_rank_);
  }

 private:
  bool fits(std::int64_t k) const {
    if (primes_) return spec_.seq.prime(k) <= x_int_ / product_int_;
    return product_ * spec_.seq.term(k) <= x_;
  }

  void emit() {
    if (++count_ > cap_)
      throw CapExceededError("enumerate_family: element cap exceeded");
    visit_(MultiIndex(stack_));
  }

  void descend(std::int64_t start) {
    int depth = static_cast<int>(stack_.size());
    for (std::int64_t k = start; k <= max_entry_rank_ && fits(k); ++k) {
      stack_.push_back(static_cast<int>(k));
      double saved = product_;
      std::int64_t saved_int = product_int_;
      if (primes_)
        product_int_ *= spec_.seq.prime(k);
      else
        product_ *= spec_.seq.term(k);
      if (fixed_length_) {
        if (depth + 1 == target_length_)
          emit();
        else
          descend(k);
      } else {
        emit();
        descend(k);
      }
      stack_.pop_back();
      product_ = saved;
      product_int_ = saved_int;
    }
  }

  const WeightedFamilySpec& spec_;
  const std::function<void(const MultiIndex&)>& visit_;
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
  bool primes_;
  double x_;
  std::int64_t x_int_;
  bool fixed_length_;
  int target_length_;
  std::int64_t max_entry_rank_;
  std::int64_t min_first_rank_;
  std::vector<int> stack_;
  double product_ = 1.0;
  std::int64_t product_int_ = 1;
};

}  // namespace

void for_each_index(const WeightedFamilySpec& spec,
                    const std::function<void(const MultiIndex&)>& visit,
                    std::uint64_t cap) {
  spec.validate();
  FamilyEnumerator(spec, visit, cap).run();
}

std::vector<MultiIndex> enumerate_family(const WeightedFamilySpec& spec,
                                         std::uint64_t cap) {
  std::vector<MultiIndex> out;
  for_each_index(spec, [&](const MultiIndex& j) { out.push_back(j); }, cap);
  return out;
}

FamilyCensus census(const WeightedFamilySpec& spec,
                    std::optional<double> primes_c, std::uint64_t cap) {
  FamilyCensus result;
  for_each_index(
      spec,
      [&](const MultiIndex& j) {
        result.cardinality += 1;
        result.by_degree[j.length()] += 1;
      },
      cap);

  double x = spec.x;
  double q1 = spec.seq.term(1);
  switch (spec.family) {
    case Family::Jminus: {
      auto l = spec.cutoff();
      result.analytic_bound =
          std::pow(1.0 + std::log(x) / std::log(q1), static_cast<double>(l));
      break;
    }
    case Family::Jplus: {
      int m = *spec.m;
      if (spec.seq.is_primes()) {
        if (primes_c) {
          result.analytic_bound =
              x * std::pow(*spec.y, -m) *
              std::exp(*spec.y * (std::log(std::log(x)) + *primes_c));
        }
      } else {
        double c = 1.0 / spec.seq.term(1) + 1.0 / spec.seq.term(2) +
                   1.0 / spec.seq.term(3);
        result.analytic_bound =
            x * std::pow(*spec.y, -m) * std::exp(*spec.y * (spec.seq.g_theta(x) + c));
      }
      break;
    }
    case Family::Jxm: {
      if (spec.seq.is_primes() && *spec.m >= 1 && x > std::exp(1.0)) {
        // Landau shape with C_m = 1; existence-only constant, never asserted.
        result.analytic_bound = x / std::log(x) *
                                std::pow(std::log(std::log(x)), *spec.m - 1);
      }
      break;
    }
    case Family::Jx: {
      if (spec.seq.is_primes())
        result.analytic_bound = std::floor(x);
      break;
    }
  }
  if (result.analytic_bound && spec.family != Family::Jxm) {
    result.bound_satisfied =
        result.cardinality.convert_to<double>() <= *result.analytic_bound;
  }
  return result;
}

KqSplit kq_decompose(const WeightSequence& seq, double x, double y,
                     const MultiIndex& k) {
  if (!(y > 2.0) || !(y < x))
    throw std::invalid_argument("kq_decompose: requires 2 < y < x");
  bool member;
  if (seq.is_primes())
    member = seq.exact_index_weight(k) <= BigInt(static_cast<std::int64_t>(x));
  else
    member = seq.index_weight(k) <= x;
  if (!member)
    throw std::domain_error("kq_decompose: index weight exceeds x");
  std::int64_t l = seq.cutoff_rank(y);
  std::vector<int> lo, hi;
  for (int e : k.entries()) (e <= l ? lo : hi).push_back(e);
  KqSplit split;
  split.prefix = MultiIndex(std::move(lo));
  split.suffix = MultiIndex(std::move(hi));
  split.suffix_degree = split.suffix.length();
  return split;
}

bool verify_reduced_inclusion(const WeightSequence& seq, double x, int m,
                              std::optional<double> y, std::uint64_t cap) {
  if (m < 2) throw std::invalid_argument("verify_reduced_inclusion: m >= 2");
  WeightedFamilySpec spec{seq, y ? Family::Jplus : Family::Jxm, x, y, m};
  std::vector<MultiIndex> reduced = reduce(enumerate_family(spec, cap));

  bool exact = seq.is_primes() && x == std::floor(x);
  double x_reduced = std::pow(x, (m - 1.0) / m);
  BigInt x_pow;  // x^(m-1) for the exact route q_j^m <= x^(m-1)
  if (exact) x_pow = boost::multiprecision::pow(
      BigInt(static_cast<std::int64_t>(x)), static_cast<unsigned>(m - 1));

  for (const MultiIndex& j : reduced) {
    if (exact) {
      BigInt q = seq.exact_index_weight(j);
      if (boost::multiprecision::pow(q, static_cast<unsigned>(m)) > x_pow)
        return false;
    } else {
      if (seq.index_weight(j) > x_reduced * (1.0 + 1e-9)) return false;
    }
  }
  return true;
}

}  // namespace monolab
