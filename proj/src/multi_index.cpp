#include "monolab/multi_index.hpp"

#include <algorithm>

#include "json.hpp"

namespace monolab {

std::vector<int> to_exponent(const MultiIndex& j) {
  std::vector<int> alpha(static_cast<std::size_t>(j.max_entry()), 0);
  for (int e : j.entries()) alpha[static_cast<std::size_t>(e - 1)] += 1;
  return alpha;
}

MultiIndex from_exponent(std::span<const int> alpha) {
  std::vector<int> entries;
  for (std::size_t r = 0; r < alpha.size(); ++r) {
    if (alpha[r] < 0)
      throw std::invalid_argument("from_exponent: negative exponent");
    entries.insert(entries.end(), static_cast<std::size_t>(alpha[r]),
                   static_cast<int>(r + 1));
  }
  return MultiIndex(std::move(entries));
}

BigInt multiplicity(const MultiIndex& j) {
  BigInt factorial = 1;
  for (int i = 1; i <= j.length(); ++i) factorial *= i;
  BigInt alpha_factorial = 1;
  for (int a : to_exponent(j))
    for (int i = 2; i <= a; ++i) alpha_factorial *= i;
  return factorial / alpha_factorial;
}

MultiIndex concat(const MultiIndex& i, const MultiIndex& j) {
  if (i.empty()) return j;
  if (j.empty()) return i;
  if (i.max_entry() > j.min_entry())
    throw std::invalid_argument(
        "concat: max entry of left index exceeds min entry of right index");
  std::vector<int> e = i.entries();
  e.insert(e.end(), j.entries().begin(), j.entries().end());
  return MultiIndex(std::move(e));
}

BigInt jmn_cardinality(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("jmn_cardinality: m>=0, n>=1");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= m; ++i) {
    num *= n + m - i;
    den *= i;
  }
  return num / den;
}

JmnEnumerator::JmnEnumerator(int m, int n)
    : m_(m), n_(n), done_(false), first_(true) {
  if (m < 0 || n < 1) throw std::invalid_argument("JmnEnumerator: m>=0, n>=1");
  state_.assign(static_cast<std::size_t>(m), 1);
}

bool JmnEnumerator::next(MultiIndex& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
    out = MultiIndex(state_);
    return true;
  }
  // Advance the rightmost entry below n; reset the tail to the bumped value.
  int i = m_ - 1;
  while (i >= 0 && state_[static_cast<std::size_t>(i)] == n_) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  int v = ++state_[static_cast<std::size_t>(i)];
  for (int k = i + 1; k < m_; ++k) state_[static_cast<std::size_t>(k)] = v;
  out = MultiIndex(state_);
  return true;
}

std::vector<MultiIndex> enumerate_jmn(int m, int n, std::uint64_t cap) {
  if (jmn_cardinality(m, n) > BigInt(cap))
    throw CapExceededError("enumerate_jmn: cardinality exceeds cap");
  std::vector<MultiIndex> out;
  JmnEnumerator it(m, n);
  MultiIndex j;
  while (it.next(j)) out.push_back(j);
  return out;
}

std::vector<MultiIndex> reduce(const std::vector<MultiIndex>& J) {
  std::vector<MultiIndex> out;
  int m = -1;
  for (const MultiIndex& j : J) {
    if (m == -1) m = j.length();
    if (j.length() != m)
      throw std::invalid_argument("reduce: mixed index lengths");
    if (m < 1) throw std::invalid_argument("reduce: length must be >= 1");
    out.push_back(j.prefix(m - 1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

nlohmann::json to_json(const MultiIndex& j) {
  return nlohmann::json(j.entries());
}

MultiIndex multi_index_from_json(const nlohmann::json& v) {
  return MultiIndex(v.get<std::vector<int>>());
}

}  // namespace monolab
