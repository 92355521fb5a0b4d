#ifndef MONOLAB_MULTI_INDEX_HPP
#define MONOLAB_MULTI_INDEX_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace monolab {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an enumeration would exceed its element cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumCap = 100'000'000;

/// A nondecreasing tuple of positive integers, naming the monomial
/// z_{j_1} ... z_{j_m}. The empty tuple is a valid value (the length-zero
/// index, identity for concatenation).
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    validate();
  }

  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
    validate();
  }

  int length() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Largest entry; 0 for the empty index.
  int max_entry() const { return entries_.empty() ? 0 : entries_.back(); }
  int min_entry() const { return entries_.empty() ? 0 : entries_.front(); }

  /// First `len` entries.
  MultiIndex prefix(int len) const {
    return MultiIndex(std::vector<int>(entries_.begin(), entries_.begin() + len));
  }

  /// Copy with `k` appended; requires k >= max_entry().
  MultiIndex appended(int k) const {
    std::vector<int> e = entries_;
    e.push_back(k);
    return MultiIndex(std::move(e));
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] < 1)
        throw std::invalid_argument("MultiIndex: entries must be >= 1");
      if (i > 0 && entries_[i - 1] > entries_[i])
        throw std::invalid_argument("MultiIndex: entries must be nondecreasing");
    }
  }

  std::vector<int> entries_;
};

/// alpha_r = number of occurrences of r in j; trailing zeros trimmed at
/// max_entry().
std::vector<int> to_exponent(const MultiIndex& j);

/// Inverse of to_exponent: alpha -> (1,...,1,2,...,2,...).
MultiIndex from_exponent(std::span<const int> alpha);

/// Number of distinct permutations of j, equal to m!/alpha!.
BigInt multiplicity(const MultiIndex& j);

/// (i_1,...,i_k,j_1,...,j_l); requires max(i) <= min(j) so the result is
/// nondecreasing. Either side may be the empty index.
MultiIndex concat(const MultiIndex& i, const MultiIndex& j);

/// binom(n+m-1, m), the cardinality of J(m,n).
BigInt jmn_cardinality(int m, int n);

/// Streaming lexicographic enumeration of J(m,n), the nondecreasing
/// m-tuples over {1,...,n}. Single consumer; independently instantiable.
class JmnEnumerator {
 public:
  JmnEnumerator(int m, int n);

  /// Writes the next index into `out`; returns false when exhausted.
  bool next(MultiIndex& out);

 private:
  int m_;
  int n_;
  bool done_;
  bool first_;
  std::vector<int> state_;
};

/// Materialized J(m,n); throws CapExceededError if binom(n+m-1,m) > cap.
std::vector<MultiIndex> enumerate_jmn(int m, int n,
                                      std::uint64_t cap = kDefaultEnumCap);

/// Reduced set J* = { j of length m-1 : (j,k) in J for some k }. All
/// elements of J must share one length m >= 1. Result is sorted and unique.
std::vector<MultiIndex> reduce(const std::vector<MultiIndex>& J);

nlohmann::json to_json(const MultiIndex& j);
MultiIndex multi_index_from_json(const nlohmann::json& v);

}  // namespace monolab

#endif  // MONOLAB_MULTI_INDEX_HPP
