// The interval algebra of a finite powerset Boolean algebra, principal filter
// subalgebras, and the closed forms of the collapse operations.
//
// Intervals [lo, hi] are ordered by inclusion; the top is [0, 1] and the
// vertices are the degenerate intervals [b, b].

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mrcube/boolean.hpp"
#include "mrcube/signed_set.hpp"

namespace mrcube {

class Interval {
 public:
  Interval() = default;

  Interval(Universe u, BoolElem lo, BoolElem hi) : u_(u), lo_(lo), hi_(hi) {
    if (!u.contains(lo) || !u.contains(hi))
      throw std::invalid_argument("interval endpoint has bits outside the universe");
    if (!mrcube::leq(lo, hi)) throw std::invalid_argument("interval requires lo <= hi");
  }

  static Interval top(Universe u) { return Interval(u, u.bottom(), u.top()); }
  static Interval vertex(Universe u, BoolElem b) { return Interval(u, b, b); }

  const Universe& universe() const { return u_; }
  BoolElem lo() const { return lo_; }
  BoolElem hi() const { return hi_; }

  /// Inclusion of intervals.
  bool leq(const Interval& y) const {
    return mrcube::leq(y.lo_, lo_) && mrcube::leq(hi_, y.hi_);
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.u_ == b.u_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Universe u_;
  BoolElem lo_;
  BoolElem hi_;
};

/// l(x) = lo | ~hi: the coordinates fixed by x.
struct Length {
  BoolElem value;
  friend bool operator==(Length, Length) = default;
};

inline Interval join(const Interval& x, const Interval& y) {
  detail::require_same_universe(x.universe(), y.universe());
  return Interval(x.universe(), meet(x.lo(), y.lo()), join(x.hi(), y.hi()));
}

inline std::optional<Interval> meet(const Interval& x, const Interval& y) {
  detail::require_same_universe(x.universe(), y.universe());
  const BoolElem lo = join(x.lo(), y.lo());
  const BoolElem hi = meet(x.hi(), y.hi());
  if (!leq(lo, hi)) return std::nullopt;
  return Interval(x.universe(), lo, hi);
}

namespace detail {
// [x0 | (x1 & ~y1), x1 & (x0 | ~y0)]; the reflection formula, which is also
// the closed form of caret when applied to an arbitrary pair.
inline Interval reflect(const Interval& x, const Interval& y) {
  const Universe& u = x.universe();
  return Interval(u, join(x.lo(), meet(x.hi(), complement(y.hi(), u))),
                  meet(x.hi(), join(x.lo(), complement(y.lo(), u))));
}
}  // namespace detail

inline std::optional<Interval> try_delta(const Interval& x, const Interval& y) {
  detail::require_same_universe(x.universe(), y.universe());
  if (!y.leq(x)) return std::nullopt;
  return detail::reflect(x, y);
}

inline Interval delta(const Interval& x, const Interval& y) {
  auto r = try_delta(x, y);
  if (!r) throw std::domain_error("delta(x, y) requires y <= x");
  return *r;
}

inline Interval caret(const Interval& x, const Interval& y) {
  detail::require_same_universe(x.universe(), y.universe());
  return detail::reflect(x, y);
}

inline Length length(const Interval& x) {
  return {join(x.lo(), complement(x.hi(), x.universe()))};
}

/// a * b = [a0 & l(b), a1 | ~l(b)].
inline Interval star(const Interval& a, const Interval& b) {
  detail::require_same_universe(a.universe(), b.universe());
  const Universe& u = a.universe();
  const BoolElem lb = length(b).value;
  return Interval(u, meet(a.lo(), lb), join(a.hi(), complement(lb, u)));
}

/// x -> y = y | delta(1, delta(x | y, y)).
inline Interval implies(const Interval& x, const Interval& y) {
  const Interval top = Interval::top(x.universe());
  return join(y, delta(top, delta(join(x, y), y)));
}

/// a => b = [b0 & ~l(a), b1 | l(a)], the implication of the collapse quotient.
inline Interval collapse_implies(const Interval& a, const Interval& b) {
  detail::require_same_universe(a.universe(), b.universe());
  const Universe& u = a.universe();
  const BoolElem la = length(a).value;
  return Interval(u, meet(b.lo(), complement(la, u)), join(b.hi(), la));
}

/// <A, B> |-> [A, ~B].
inline Interval to_interval(const SignedSet& s) {
  return Interval(s.universe(), s.pos(), complement(s.neg(), s.universe()));
}

inline SignedSet to_signed(const Interval& x) {
  return SignedSet(x.universe(), x.lo(), complement(x.hi(), x.universe()));
}

/// All 3^n intervals, in the order of enumerate_signed under to_interval.
inline std::vector<Interval> enumerate_intervals(const Universe& u) {
  std::vector<Interval> out;
  for (const SignedSet& s : enumerate_signed(u)) out.push_back(to_interval(s));
  return out;
}

/// The filter algebra {[a, b] : a <= b, ~a and b in F} of a principal filter,
/// viewed as a membership predicate over the ambient interval algebra.
class FilterAlgebra {
 public:
  explicit FilterAlgebra(PrincipalFilter f) : f_(std::move(f)) {}

  const PrincipalFilter& filter() const { return f_; }
  const Universe& universe() const { return f_.universe(); }

  bool contains(const Interval& x) const {
    return x.universe() == universe() &&
           f_.contains(complement(x.lo(), universe())) && f_.contains(x.hi());
  }

  /// Members in ambient enumeration order.
  std::vector<Interval> members() const {
    std::vector<Interval> out;
    for (const Interval& x : enumerate_intervals(universe()))
      if (contains(x)) out.push_back(x);
    return out;
  }

 private:
  PrincipalFilter f_;
};

inline FilterAlgebra filter_subalgebra(const PrincipalFilter& f) { return FilterAlgebra(f); }

inline std::string to_string(const Interval& x) {
  return "[" + to_string(x.lo(), x.universe()) + "," +
         to_string(x.hi(), x.universe()) + "]";
}

}  // namespace mrcube
