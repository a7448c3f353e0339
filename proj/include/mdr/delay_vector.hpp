// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdr {

/// Integer vector indexed by loop dimension, component 0 = outermost loop.
/// Used for edge delays, retiming offsets and schedule vectors alike.
struct DelayVector {
  std::vector<int> c;

  DelayVector() = default;
  explicit DelayVector(std::vector<int> v) : c(std::move(v)) {}
  DelayVector(std::initializer_list<int> v) : c(v) {}

  static DelayVector zero(int n) { return DelayVector(std::vector<int>(n, 0)); }

  int dim() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }

  int operator[](int i) const { return c[static_cast<size_t>(i)]; }
  int& operator[](int i) { return c[static_cast<size_t>(i)]; }

  auto operator<=>(const DelayVector&) const = default;
};

/// Schedule vectors share the representation; invariants (nonzero, gcd 1)
/// are maintained by the search in schedule.hpp.
using ScheduleVector = DelayVector;

namespace detail {
inline void require_same_dim(const DelayVector& a, const DelayVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("vector dimension mismatch: " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}
}  // namespace detail

inline DelayVector operator+(const DelayVector& a, const DelayVector& b) {
  detail::require_same_dim(a, b);
  DelayVector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

inline DelayVector operator-(const DelayVector& a, const DelayVector& b) {
  detail::require_same_dim(a, b);
  DelayVector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

inline DelayVector operator-(const DelayVector& a) {
  DelayVector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] = -r[i];
  return r;
}

inline DelayVector operator*(int k, const DelayVector& a) {
  DelayVector r = a;
  for (int i = 0; i < r.dim(); ++i) r[i] *= k;
  return r;
}

inline long long dot(const DelayVector& a, const DelayVector& b) {
  detail::require_same_dim(a, b);
  long long s = 0;
  for (int i = 0; i < a.dim(); ++i)
    s += static_cast<long long>(a[i]) * b[i];
  return s;
}

inline int component_gcd(const DelayVector& a) {
  int g = 0;
  for (int x : a) g = std::gcd(g, std::abs(x));
  return g;
}

inline std::string to_string(const DelayVector& a) {
  std::string s = "(";
  for (int i = 0; i < a.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

}  // namespace mdr
