// Finite powerset Boolean algebras over a ground set {1, ..., n}, n <= 16.
//
// Ground-set elements are named 1..n externally and live at bit positions
// 0..n-1 internally, so every subset fits one machine word.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrcube {

inline constexpr int kMaxGround = 16;

/// A subset of the ground set, as a bit vector.
struct BoolElem {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(BoolElem, BoolElem) = default;
  friend constexpr auto operator<=>(BoolElem, BoolElem) = default;
};

constexpr BoolElem meet(BoolElem a, BoolElem b) { return {a.bits & b.bits}; }
constexpr BoolElem join(BoolElem a, BoolElem b) { return {a.bits | b.bits}; }
constexpr BoolElem minus(BoolElem a, BoolElem b) { return {a.bits & ~b.bits}; }
constexpr bool leq(BoolElem a, BoolElem b) { return (a.bits & ~b.bits) == 0; }
constexpr bool disjoint(BoolElem a, BoolElem b) { return (a.bits & b.bits) == 0; }
constexpr int cardinality(BoolElem a) { return std::popcount(a.bits); }

class Universe {
 public:
  explicit Universe(int n = 0) : n_(n) {
    if (n < 0 || n > kMaxGround)
      throw std::invalid_argument("ground set size must lie in [0, 16], got " +
                                  std::to_string(n));
    full_ = (1u << n) - 1u;
  }

  int size() const { return n_; }
  BoolElem top() const { return {full_}; }
  BoolElem bottom() const { return {0}; }
  bool contains(BoolElem x) const { return (x.bits & ~full_) == 0; }

  /// Number of subsets, 2^n.
  std::uint32_t cardinality() const { return 1u << n_; }

  /// Builds a subset from 1-based element names.
  BoolElem element(std::initializer_list<int> names) const {
    return element(std::vector<int>(names));
  }

  BoolElem element(const std::vector<int>& names) const {
    BoolElem x;
    for (int name : names) {
      if (name < 1 || name > n_)
        throw std::invalid_argument("element " + std::to_string(name) +
                                    " outside ground set {1.." +
                                    std::to_string(n_) + "}");
      x.bits |= 1u << (name - 1);
    }
    return x;
  }

  /// 1-based names of the members of x, ascending.
  std::vector<int> names(BoolElem x) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (x.bits & (1u << i)) out.push_back(i + 1);
    return out;
  }

  /// All subsets in increasing bit-vector order.
  std::vector<BoolElem> elements() const {
    std::vector<BoolElem> out;
    out.reserve(cardinality());
    for (std::uint32_t b = 0; b < cardinality(); ++b) out.push_back({b});
    return out;
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int n_ = 0;
  std::uint32_t full_ = 0;
};

inline BoolElem complement(BoolElem x, const Universe& u) {
  return {u.top().bits & ~x.bits};
}

/// Renders x as "{1,3}".
inline std::string to_string(BoolElem x, const Universe& u) {
  std::string s = "{";
  bool first = true;
  for (int name : u.names(x)) {
    if (!first) s += ",";
    s += std::to_string(name);
    first = false;
  }
  return s + "}";
}

/// The filter of all supersets of a generator.
class PrincipalFilter {
 public:
  PrincipalFilter(BoolElem generator, Universe u) : f_(generator), u_(u) {
    if (!u.contains(generator))
      throw std::invalid_argument("filter generator has bits outside the universe");
  }

  BoolElem generator() const { return f_; }
  const Universe& universe() const { return u_; }
  bool contains(BoolElem b) const { return u_.contains(b) && leq(f_, b); }

  /// Members in increasing bit-vector order.
  std::vector<BoolElem> members() const {
    // Enumerate subsets of the complement of f, then add f back.
    std::vector<BoolElem> out;
    const std::uint32_t free = complement(f_, u_).bits;
    std::uint32_t s = 0;
    do {
      out.push_back({f_.bits | s});
      s = (s - free) & free;
    } while (s != 0);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  BoolElem f_;
  Universe u_;
};

inline PrincipalFilter principal_filter(BoolElem f, const Universe& u) {
  return PrincipalFilter(f, u);
}

}  // namespace mrcube
