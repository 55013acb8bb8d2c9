// Independent reference implementations used only by the tests.  They work
// on different representations from the library (sign vectors, point sets of
// subcubes, raw order relations) so agreement is evidence, not tautology.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mrcube/mrcube.hpp"

namespace oracle {

using mrcube::Elem;

// --- signed sets as sign vectors: +1, -1, or 0 (free coordinate) ---------

using Signs = std::vector<int>;

inline Signs signs_of(const mrcube::SignedSet& x) {
  const int n = x.universe().size();
  Signs v(n, 0);
  for (int i = 0; i < n; ++i) {
    if (x.pos().bits >> i & 1u) v[i] = 1;
    if (x.neg().bits >> i & 1u) v[i] = -1;
  }
  return v;
}

inline mrcube::SignedSet from_signs(const Signs& v) {
  mrcube::BoolElem pos, neg;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) pos.bits |= 1u << i;
    if (v[i] == -1) neg.bits |= 1u << i;
  }
  return mrcube::SignedSet(mrcube::Universe(static_cast<int>(v.size())), pos, neg);
}

/// All sign vectors of length n in odometer order (coordinate 0 slowest).
inline std::vector<Signs> all_signs(int n) {
  std::vector<Signs> out{Signs{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Signs> next;
    for (const auto& p : out)
      for (int s : {0, 1, -1}) {
        Signs q = p;
        q.push_back(s);
        next.push_back(q);
      }
    out = next;
  }
  return out;
}

/// x <= y: every coordinate fixed by y is fixed the same way by x.
inline bool s_leq(const Signs& x, const Signs& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] != 0 && x[i] != y[i]) return false;
  return true;
}

inline Signs s_join(const Signs& x, const Signs& y) {
  Signs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] == y[i] ? x[i] : 0;
  return r;
}

/// Reflection of face y through the centre of face x (y <= x): coordinates
/// free in x are flipped, fixed ones stay.
inline Signs s_delta(const Signs& x, const Signs& y) {
  Signs r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] != 0 ? x[i] : -y[i];
  return r;
}

/// Covector composition: a wins wherever it is nonzero.
inline Signs s_compose(const Signs& a, const Signs& b) {
  Signs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] != 0 ? a[i] : b[i];
  return r;
}

// --- generic order-theoretic brute force --------------------------------

template <class T, class Leq>
std::optional<T> brute_glb(const std::vector<T>& all, const T& a, const T& b, Leq leq) {
  std::optional<T> best;
  for (const auto& z : all) {
    if (!leq(z, a) || !leq(z, b)) continue;
    bool greatest = true;
    for (const auto& w : all)
      if (leq(w, a) && leq(w, b) && !leq(w, z)) greatest = false;
    if (greatest) best = z;
  }
  return best;
}

template <class T, class Leq>
std::optional<T> brute_lub(const std::vector<T>& all, const T& a, const T& b, Leq leq) {
  std::optional<T> best;
  for (const auto& z : all) {
    if (!leq(a, z) || !leq(b, z)) continue;
    bool least = true;
    for (const auto& w : all)
      if (leq(a, w) && leq(b, w) && !leq(z, w)) least = false;
    if (least) best = z;
  }
  return best;
}

// --- intervals as point sets of subcubes -------------------------------

/// Bit p of the result is set iff the subset with bit vector p lies in [lo, hi].
inline std::uint64_t points(const mrcube::Interval& x) {
  const int n = x.universe().size();
  std::uint64_t out = 0;
  for (std::uint32_t p = 0; p < (1u << n); ++p)
    if ((x.lo().bits & ~p) == 0 && (p & ~x.hi().bits) == 0) out |= std::uint64_t{1} << p;
  return out;
}

inline bool p_leq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

/// Reflection of subcube y inside subcube x: XOR every point with the free
/// coordinates of x.
inline std::uint64_t p_delta(const mrcube::Interval& x, const mrcube::Interval& y) {
  const std::uint32_t free = x.hi().bits & ~x.lo().bits;
  const std::uint64_t py = points(y);
  std::uint64_t out = 0;
  for (std::uint32_t p = 0; p < 64; ++p)
    if (py >> p & 1u) out |= std::uint64_t{1} << (p ^ free);
  return out;
}

/// Coordinates on which every point of x agrees.
inline std::uint32_t fixed_coords(const mrcube::Interval& x) {
  const int n = x.universe().size();
  const std::uint64_t pts = points(x);
  std::uint32_t fixed = 0;
  for (int i = 0; i < n; ++i) {
    bool zero = false, one = false;
    for (std::uint32_t p = 0; p < (1u << n); ++p)
      if (pts >> p & 1u) (p >> i & 1u ? one : zero) = true;
    if (!(zero && one)) fixed |= 1u << i;
  }
  return fixed;
}

// --- structures -------------------------------------------------------

/// A uniformly random relabeling of s.
inline mrcube::FiniteStructure shuffled(const mrcube::FiniteStructure& s, std::mt19937& rng) {
  std::vector<Elem> perm(s.size());
  for (Elem i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return mrcube::relabel(s, perm);
}

/// Copy of s with caret/delta entry (a, b) replaced.
inline mrcube::FiniteStructure with_delta(const mrcube::FiniteStructure& s, Elem a, Elem b,
                                          Elem v) {
  mrcube::Tables t = s.tables();
  t.caret.reset();
  if (!t.delta) t.delta = mrcube::delta_table_from_caret(s);
  (*t.delta)(a, b) = v;
  return mrcube::FiniteStructure(t);
}

/// Brute-force check that perm is an isomorphism of join, top and caret.
inline bool is_isomorphism(const mrcube::FiniteStructure& a, const mrcube::FiniteStructure& b,
                           const std::vector<Elem>& perm) {
  if (a.size() != b.size() || perm[a.one()] != b.one()) return false;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (perm[a.join(x, y)] != b.join(perm[x], perm[y])) return false;
      if (a.has_caret() && b.has_caret() && perm[a.caret(x, y)] != b.caret(perm[x], perm[y]))
        return false;
    }
  return true;
}

/// A caret variant: S({1,2}) with caret moved to a different admissible
/// value at one incomparable pair and, to keep axiom (b), at its image under
/// 1 ^ .  Returns the modified structure.
inline mrcube::FiniteStructure extra_variant() {
  using namespace mrcube;
  const FiniteStructure s = make_signed_model(Universe(2)).structure;
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) {
      if (s.leq(y, x) || s.leq(x, y)) continue;
      const auto vals = admissible_caret_values(s, x, y);
      if (vals.size() < 2) continue;
      const Elem c = s.caret(x, y);
      for (Elem q : vals) {
        if (q == c) continue;
        Tables t = s.tables();
        const Elem one = s.one();
        (*t.caret)(x, y) = q;
        (*t.caret)(s.caret(one, x), s.caret(one, y)) = s.caret(one, q);
        return FiniteStructure(t);
      }
    }
  throw std::logic_error("no pair with two admissible caret values");
}

}  // namespace oracle
