#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>

namespace rcsp {

using Cost = std::uint64_t;

/// Distinguished infinity. Strictly greater than any finite path cost; sums saturate here.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max();

constexpr Cost saturating_add(Cost a, Cost b) noexcept {
  return a > kInfiniteCost - b ? kInfiniteCost : a + b;
}

[[noreturn]] void throw_dimension_mismatch(std::size_t lhs, std::size_t rhs);

/// Fixed-length vector of non-negative integer costs. Index 0 is the primary
/// cost, indices 1..k-1 are resources. Up to four components live inline.
class CostVector {
 public:
  using Storage = boost::container::small_vector<Cost, 4>;
  using const_iterator = Storage::const_iterator;

  CostVector() = default;
  CostVector(std::initializer_list<Cost> values) : values_(values) {}

  static CostVector zeros(std::size_t k) { return filled(k, 0); }
  static CostVector filled(std::size_t k, Cost value) {
    CostVector v;
    v.values_.assign(k, value);
    return v;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  Cost operator[](std::size_t i) const noexcept { return values_[i]; }
  Cost& operator[](std::size_t i) noexcept { return values_[i]; }
  Cost primary() const noexcept { return values_[0]; }

  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }

  void push_back(Cost value) { values_.push_back(value); }
  void pop_back() { values_.pop_back(); }

  /// Component-wise saturating sum.
  CostVector& operator+=(const CostVector& other) {
    if (other.size() != size()) [[unlikely]]
      throw_dimension_mismatch(size(), other.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      values_[i] = saturating_add(values_[i], other.values_[i]);
    return *this;
  }

  friend CostVector operator+(CostVector lhs, const CostVector& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const CostVector& a, const CostVector& b) {
    return a.values_ == b.values_;
  }

 private:
  Storage values_;
};

/// a ⪯ b: every component of a is at most the matching component of b.
inline bool dominates(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) [[unlikely]]
    throw_dimension_mismatch(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// a ⪯Tr b: like dominates() but the primary cost is ignored.
inline bool truncated_dominates(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size()) [[unlikely]]
    throw_dimension_mismatch(a.size(), b.size());
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Lexicographic order on the resource components only.
inline bool truncated_lex_less(const CostVector& a, const CostVector& b) {
  for (std::size_t i = 1; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

/// Full lexicographic order; used to canonicalize solution sets.
inline bool lex_less(const CostVector& a, const CostVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// "(3,1,1)", with "inf" for the infinity sentinel.
std::string to_string(const CostVector& v);
std::ostream& operator<<(std::ostream& os, const CostVector& v);

}  // namespace rcsp
