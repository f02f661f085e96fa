#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace closure {

namespace detail {

// Appends a ∩ b to out. Gallops through the longer list when the sizes are
// lopsided, otherwise a linear merge.
template <typename T>
void intersect_into(std::span<const T> a, std::span<const T> b, std::vector<T>& out) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return;
  if (a.size() * 16 < b.size()) {
    auto lo = b.begin();
    for (const T& x : a) {
      lo = std::lower_bound(lo, b.end(), x);
      if (lo == b.end()) break;
      if (*lo == x) out.push_back(x);
    }
    return;
  }
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      out.push_back(*i);
      ++i;
      ++j;
    }
  }
}

}  // namespace detail

template <typename T>
std::vector<T> intersect_sorted(std::span<const T> a, std::span<const T> b) {
  std::vector<T> out;
  detail::intersect_into(a, b, out);
  return out;
}

}  // namespace closure
