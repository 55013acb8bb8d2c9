// Signed subsets <A+, A-> of a finite ground set: the faces of the n-cube.
//
// Order: x <= y iff x.pos contains y.pos and x.neg contains y.neg, so the
// top element is <{},{}> (the whole cube) and the minimal elements are the
// 2^n vertices with pos | neg = X.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrcube/boolean.hpp"

namespace mrcube {

class SignedSet {
 public:
  SignedSet() = default;

  SignedSet(Universe u, BoolElem pos, BoolElem neg) : u_(u), pos_(pos), neg_(neg) {
    if (!u.contains(pos) || !u.contains(neg))
      throw std::invalid_argument("signed set has bits outside the universe");
    if (!disjoint(pos, neg))
      throw std::invalid_argument("signed set parts must be disjoint");
  }

  static SignedSet top(Universe u) { return SignedSet(u, {}, {}); }

  const Universe& universe() const { return u_; }
  BoolElem pos() const { return pos_; }
  BoolElem neg() const { return neg_; }

  /// Ground elements carrying a sign; the free coordinates are the rest.
  BoolElem support() const { return join(pos_, neg_); }

  bool leq(const SignedSet& y) const {
    return mrcube::leq(y.pos_, pos_) && mrcube::leq(y.neg_, neg_);
  }

  friend bool operator==(const SignedSet& a, const SignedSet& b) {
    return a.u_ == b.u_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

 private:
  Universe u_;
  BoolElem pos_;
  BoolElem neg_;
};

namespace detail {
inline void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw std::invalid_argument("operands over different universes");
}
}  // namespace detail

inline SignedSet join(const SignedSet& x, const SignedSet& y) {
  detail::require_same_universe(x.universe(), y.universe());
  return SignedSet(x.universe(), meet(x.pos(), y.pos()), meet(x.neg(), y.neg()));
}

/// Greatest lower bound; absent when some element would carry both signs.
inline std::optional<SignedSet> meet(const SignedSet& x, const SignedSet& y) {
  detail::require_same_universe(x.universe(), y.universe());
  const BoolElem p = join(x.pos(), y.pos());
  const BoolElem n = join(x.neg(), y.neg());
  if (!disjoint(p, n)) return std::nullopt;
  return SignedSet(x.universe(), p, n);
}

/// Reflection of y through the centre of the face x; absent unless y <= x.
inline std::optional<SignedSet> try_delta(const SignedSet& x, const SignedSet& y) {
  detail::require_same_universe(x.universe(), y.universe());
  if (!y.leq(x)) return std::nullopt;
  return SignedSet(x.universe(), join(x.pos(), minus(y.neg(), x.neg())),
                   join(x.neg(), minus(y.pos(), x.pos())));
}

inline SignedSet delta(const SignedSet& x, const SignedSet& y) {
  auto r = try_delta(x, y);
  if (!r) throw std::domain_error("delta(x, y) requires y <= x");
  return *r;
}

/// x ^ y = x meet delta(x join y, y), in closed form. Always defined.
inline SignedSet caret(const SignedSet& x, const SignedSet& y) {
  detail::require_same_universe(x.universe(), y.universe());
  return SignedSet(x.universe(), join(x.pos(), minus(y.neg(), x.neg())),
                   join(x.neg(), minus(y.pos(), x.pos())));
}

/// Oriented-matroid composition: the first argument wins wherever both are signed.
inline SignedSet compose(const SignedSet& a, const SignedSet& b) {
  detail::require_same_universe(a.universe(), b.universe());
  return SignedSet(a.universe(), join(a.pos(), minus(b.pos(), a.neg())),
                   join(a.neg(), minus(b.neg(), a.pos())));
}

/// Sign of ground element `name` (1-based): 0 absent, 1 positive, 2 negative.
inline int sign_digit(const SignedSet& x, int name) {
  const std::uint32_t bit = 1u << (name - 1);
  if (x.pos().bits & bit) return 1;
  if (x.neg().bits & bit) return 2;
  return 0;
}

/// Position of x in enumerate_signed: base-3 digits, element 1 most significant.
inline std::uint32_t signed_index(const SignedSet& x) {
  std::uint32_t idx = 0;
  for (int name = 1; name <= x.universe().size(); ++name)
    idx = idx * 3 + static_cast<std::uint32_t>(sign_digit(x, name));
  return idx;
}

/// All 3^n signed sets, ordered lexicographically by (sign of 1, ..., sign of n)
/// with absent < + < -.  Index 0 is the top.
inline std::vector<SignedSet> enumerate_signed(const Universe& u) {
  std::uint32_t count = 1;
  for (int i = 0; i < u.size(); ++i) count *= 3;
  std::vector<SignedSet> out;
  out.reserve(count);
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    BoolElem p, n;
    std::uint32_t rest = idx;
    for (int name = u.size(); name >= 1; --name) {
      const std::uint32_t digit = rest % 3;
      rest /= 3;
      if (digit == 1) p.bits |= 1u << (name - 1);
      if (digit == 2) n.bits |= 1u << (name - 1);
    }
    out.emplace_back(u, p, n);
  }
  return out;
}

inline std::string to_string(const SignedSet& x) {
  return "<" + to_string(x.pos(), x.universe()) + "," +
         to_string(x.neg(), x.universe()) + ">";
}

}  // namespace mrcube
