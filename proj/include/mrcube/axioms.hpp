// Exhaustive axiom checkers.  Every checker quantifies over all element
// tuples the axiom mentions and returns a report with bounded counterexamples;
// failures are data, never exceptions.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mrcube/models.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

/// Counterexample lists are truncated here; `violations` keeps the full count.
inline constexpr std::size_t kMaxCounterexamples = 16;

struct AxiomReport {
  std::string axiom;
  bool passed = true;
  std::vector<std::vector<Elem>> counterexamples;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string axiom) { r_.axiom = std::move(axiom); }

  void check(bool ok, std::initializer_list<Elem> tuple) {
    ++r_.checked;
    if (ok) return;
    ++r_.violations;
    r_.passed = false;
    if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.emplace_back(tuple);
  }

  AxiomReport finish() { return std::move(r_); }

 private:
  AxiomReport r_;
};

inline bool all_passed(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

namespace detail {

// Operations that propagate kAbsent instead of throwing, so a corrupted
// table turns into counterexamples rather than exceptions.
struct Ops {
  const FiniteStructure& s;

  Elem J(Elem a, Elem b) const {
    return (a == kAbsent || b == kAbsent) ? kAbsent : s.join(a, b);
  }
  Elem D(Elem a, Elem b) const {
    if (a == kAbsent || b == kAbsent) return kAbsent;
    auto d = s.try_delta(a, b);
    return d ? *d : kAbsent;
  }
  Elem C(Elem a, Elem b) const {
    return (a == kAbsent || b == kAbsent) ? kAbsent : s.caret(a, b);
  }
  bool leq(Elem a, Elem b) const {
    return a != kAbsent && b != kAbsent && s.leq(a, b);
  }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  // cubic-algebra product xy = delta(1, delta(x | y, y)) | y
  Elem prod(Elem x, Elem y) const { return J(D(s.one(), D(J(x, y), y)), y); }
  // x -> y = y | (1 ^ (x ^ y))
  Elem A(Elem x, Elem y) const { return J(y, C(s.one(), C(x, y))); }
};

inline void require_delta(const FiniteStructure& s) {
  if (!s.has_delta()) throw std::invalid_argument("checker needs a delta or caret table");
}

}  // namespace detail

/// Cubic-algebra axioms a-f, ids "cubic.a" .. "cubic.f".
inline std::vector<AxiomReport> check_cubic(const FiniteStructure& s) {
  detail::require_delta(s);
  const detail::Ops o{s};
  const Elem n = static_cast<Elem>(s.size());
  ReportBuilder a("cubic.a"), b("cubic.b"), c("cubic.c"), d("cubic.d"), e("cubic.e"),
      f("cubic.f");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (s.leq(x, y)) {
        a.check(o.J(o.D(y, x), x) == y, {x, y});
        const Elem r = o.D(y, o.D(y, x));
        c.check(r != kAbsent && r == x, {x, y});
        for (Elem z = 0; z < n; ++z) {
          if (!s.leq(y, z)) continue;
          const Elem lhs = o.D(z, o.D(y, x));
          const Elem rhs = o.D(o.D(z, y), o.D(z, x));
          b.check(lhs != kAbsent && lhs == rhs, {x, y, z});
          d.check(o.leq(o.D(z, x), o.D(z, y)), {x, y, z});
        }
      }
      const Elem lhs = o.prod(o.prod(x, y), y);
      e.check(lhs != kAbsent && lhs == s.join(x, y), {x, y});
      for (Elem z = 0; z < n; ++z) {
        const Elem l = o.prod(x, o.prod(y, z));
        const Elem r = o.prod(y, o.prod(x, z));
        f.check(l != kAbsent && l == r, {x, y, z});
      }
    }
  return {a.finish(), b.finish(), c.finish(), d.finish(), e.finish(), f.finish()};
}

/// For a, b < x: delta(x, a) | b < x iff a meet b does not exist.  Id "mr";
/// tuples are (x, a, b).
inline AxiomReport check_mr_axiom(const FiniteStructure& s) {
  detail::require_delta(s);
  const detail::Ops o{s};
  const Elem n = static_cast<Elem>(s.size());
  ReportBuilder r("mr");
  for (Elem x = 0; x < n; ++x)
    for (Elem a = 0; a < n; ++a) {
      if (!s.lt(a, x)) continue;
      const Elem da = o.D(x, a);
      for (Elem b = 0; b < n; ++b) {
        if (!s.lt(b, x)) continue;
        const bool below = o.lt(o.J(da, b), x);
        const bool no_meet = !s.glb(a, b).has_value();
        r.check(da != kAbsent && below == no_meet, {x, a, b});
      }
    }
  return r.finish();
}

/// The universal caret axioms (a)-(h), plus (i) when include_extra.  Ids
/// "caret.a" .. "caret.h" with "caret.e.i" / "caret.e.ii", and "extra.i".
inline std::vector<AxiomReport> check_caret_axioms(const FiniteStructure& s,
                                                   bool include_extra) {
  if (!s.has_caret()) throw std::invalid_argument("checker needs a caret table");
  const detail::Ops o{s};
  const Elem n = static_cast<Elem>(s.size());
  const Elem one = s.one();
  ReportBuilder a("caret.a"), b("caret.b"), c("caret.c"), d("caret.d"), ei("caret.e.i"),
      eii("caret.e.ii"), f("caret.f"), g("caret.g"), h("caret.h"), extra("extra.i");
  for (Elem x = 0; x < n; ++x) {
    c.check(o.C(one, o.C(one, x)) == x, {x});
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = s.join(x, y);
      a.check(s.join(x, o.C(y, x)) == xy, {x, y});
      b.check(o.C(o.C(one, x), o.C(one, y)) == o.C(one, o.C(x, y)), {x, y});
      if (s.leq(x, y)) d.check(s.leq(o.C(one, x), o.C(one, y)), {x, y});
      ei.check(o.A(o.A(x, y), y) == xy, {x, y});
      for (Elem z = 0; z < n; ++z)
        eii.check(o.A(x, o.A(y, z)) == o.A(y, o.A(x, z)), {x, y, z});
      f.check(o.A(xy, o.C(xy, y)) == o.C(one, o.A(x, y)), {x, y});
      g.check(s.leq(o.C(x, y), o.C(xy, y)), {x, y});
      h.check(s.leq(o.C(x, y), x), {x, y});
      if (include_extra) extra.check(s.leq(o.C(xy, y), o.A(x, o.C(x, y))), {x, y});
    }
  }
  std::vector<AxiomReport> out{a.finish(),  b.finish(), c.finish(), d.finish(),
                               ei.finish(), eii.finish(), f.finish(), g.finish(),
                               h.finish()};
  if (include_extra) out.push_back(extra.finish());
  return out;
}

/// The three conditions of the Metropolis-Rota theorem on the lattice
/// obtained by adjoining a bottom 0, with delta_x(y) = delta(x, y) and
/// delta_x(0) = 0.  The bottom appears in tuples as index size().  Ids
/// "mr-conditions.i", "mr-conditions.ii", "mr-conditions.iii".
inline std::vector<AxiomReport> check_thm_mr_conditions(const FiniteStructure& s) {
  detail::require_delta(s);
  const Elem bot = static_cast<Elem>(s.size());
  const Elem n = bot + 1;
  auto leq0 = [&](Elem a, Elem b) {
    if (a == kAbsent || b == kAbsent) return false;
    if (a == bot) return true;
    return b != bot && s.leq(a, b);
  };
  auto join0 = [&](Elem a, Elem b) -> Elem {
    if (a == kAbsent || b == kAbsent) return kAbsent;
    if (a == bot) return b;
    if (b == bot) return a;
    return s.join(a, b);
  };
  auto meet0 = [&](Elem a, Elem b) -> Elem {
    if (a == bot || b == bot) return bot;
    auto m = s.glb(a, b);
    return m ? *m : bot;
  };
  auto dx = [&](Elem x, Elem y) -> Elem {
    if (y == kAbsent) return kAbsent;
    if (y == bot) return bot;
    auto d = s.try_delta(x, y);
    return d ? *d : kAbsent;
  };
  ReportBuilder ri("mr-conditions.i"), rii("mr-conditions.ii"), riii("mr-conditions.iii");
  for (Elem x = 0; x < bot; ++x)
    for (Elem a = 0; a < n; ++a) {
      if (!leq0(a, x)) continue;
      const Elem da = dx(x, a);
      rii.check(da != kAbsent && dx(x, da) == a, {a, x});
      for (Elem b = 0; b < n; ++b) {
        if (leq0(a, b) && leq0(b, x)) ri.check(leq0(da, dx(x, b)), {a, b, x});
        if (a != x && b != x && leq0(b, x)) {
          const Elem jb = join0(da, b);
          const bool below = jb != kAbsent && jb != x && leq0(jb, x);
          riii.check(da != kAbsent && below == (meet0(a, b) == bot), {a, b, x});
        }
      }
    }
  return {ri.finish(), rii.finish(), riii.finish()};
}

/// Every element p with p <= x and p <= delta(x | y, y), pinned to
/// delta(x, y) when y <= x.
inline std::vector<Elem> admissible_caret_values(const FiniteStructure& s, Elem x, Elem y) {
  if (s.leq(y, x)) return {s.delta(x, y)};
  const Elem bound = s.delta(s.join(x, y), y);
  std::vector<Elem> out;
  for (Elem p = 0; p < s.size(); ++p)
    if (s.leq(p, x) && s.leq(p, bound)) out.push_back(p);
  return out;
}

/// For every pair and every admissible caret value p, y | delta(1, p) equals
/// y | delta(1, delta(x | y, y)).  Id "p-freedom"; tuples are (x, y, p).
inline AxiomReport check_p_freedom(const FiniteStructure& s) {
  detail::require_delta(s);
  const Elem n = static_cast<Elem>(s.size());
  ReportBuilder r("p-freedom");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem target = s.join(y, s.delta(s.one(), s.delta(s.join(x, y), y)));
      for (Elem p : admissible_caret_values(s, x, y))
        r.check(s.join(y, s.delta(s.one(), p)) == target, {x, y, p});
    }
  return r.finish();
}

/// p-freedom over the interval algebra of P(U).
inline AxiomReport check_p_freedom(const Universe& u) {
  return check_p_freedom(make_interval_model(u).structure);
}

/// No a, b < x1, x2 with delta(x1, a) | b = x1 while delta(x2, a) | b < x2.
/// Id "consistency"; tuples are (a, b, x1, x2).
inline AxiomReport check_consistency(const FiniteStructure& s) {
  detail::require_delta(s);
  const detail::Ops o{s};
  const Elem n = static_cast<Elem>(s.size());
  ReportBuilder r("consistency");
  std::vector<Elem> above;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      above.clear();
      for (Elem x = 0; x < n; ++x)
        if (s.lt(a, x) && s.lt(b, x)) above.push_back(x);
      for (Elem x1 : above) {
        const bool full = o.J(o.D(x1, a), b) == x1;
        for (Elem x2 : above) {
          const bool short_of = o.lt(o.J(o.D(x2, a), b), x2);
          r.check(!(full && short_of), {a, b, x1, x2});
        }
      }
    }
  return r.finish();
}

/// Implication-algebra laws for the caret-derived arrow.  Ids
/// "implication.a" ((x->y) | x = 1), "implication.b" ((x->y)->x = x),
/// "implication.c" ((x->y)->y = x | y), "implication.d" (exchange).
inline std::vector<AxiomReport> check_implication_laws(const FiniteStructure& s) {
  if (!s.has_caret()) throw std::invalid_argument("checker needs a caret table");
  const detail::Ops o{s};
  const Elem n = static_cast<Elem>(s.size());
  ReportBuilder a("implication.a"), b("implication.b"), c("implication.c"),
      d("implication.d");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = o.A(x, y);
      a.check(s.join(xy, x) == s.one(), {x, y});
      b.check(o.A(xy, x) == x, {x, y});
      c.check(o.A(xy, y) == s.join(x, y), {x, y});
      for (Elem z = 0; z < n; ++z) d.check(o.A(x, o.A(y, z)) == o.A(y, o.A(x, z)), {x, y, z});
    }
  return {a.finish(), b.finish(), c.finish(), d.finish()};
}

}  // namespace mrcube
