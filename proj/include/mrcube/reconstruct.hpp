// Reconstruction of a finite MR-algebra as the interval algebra of a Boolean
// frame: pick a vertex v0, take the Boolean lattice [v0, 1], and send x to
// [lo(x), hi(x)] with hi(x) = x | v0 and lo(x) the frame complement of
// delta(1, x) | v0.  Every step is verified against the tables.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrcube/axioms.hpp"
#include "mrcube/canonical.hpp"
#include "mrcube/interval.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

/// Elements with nothing strictly below them, in index order.
inline std::vector<Elem> minimal_elements(const FiniteStructure& s) {
  std::vector<Elem> out;
  for (Elem x = 0; x < s.size(); ++x) {
    bool minimal = true;
    for (Elem y = 0; y < s.size() && minimal; ++y)
      if (s.lt(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

struct CubeFrame {
  Elem v0 = 0;
  std::vector<Elem> vertex_list;
  /// The up-set [v0, 1] in index order; its order is the restriction of s.
  std::vector<Elem> members;
  /// Frame elements covering v0, in index order; atom i is ground element i + 1.
  std::vector<Elem> atoms;
  /// complement[x] for x in the frame, kAbsent elsewhere.
  std::vector<Elem> complement;
  /// mask[x]: the atoms below x, for x in the frame; kAbsent elsewhere.
  std::vector<std::uint32_t> mask;
  int dim = 0;

  bool contains(Elem x) const { return x < mask.size() && mask[x] != kAbsent; }
};

/// The Boolean lattice [v0, 1], verified to be distributive and complemented
/// with meets given by glb.  Throws structure_error with a witness otherwise.
inline CubeFrame boolean_frame(const FiniteStructure& s, Elem v0) {
  const Elem n = static_cast<Elem>(s.size());
  if (v0 >= n) throw std::out_of_range("base vertex out of range");
  CubeFrame f;
  f.v0 = v0;
  f.vertex_list = minimal_elements(s);
  if (std::find(f.vertex_list.begin(), f.vertex_list.end(), v0) == f.vertex_list.end())
    throw std::invalid_argument("base element " + std::to_string(v0) + " is not minimal");
  for (Elem x = 0; x < n; ++x)
    if (s.leq(v0, x)) f.members.push_back(x);

  const auto& up = f.members;
  auto meet = [&](Elem a, Elem b) {
    auto m = s.glb(a, b);
    if (!m || !s.leq(v0, *m))
      throw structure_error("frame is not a lattice at " + detail::tuple_text({a, b}), {a, b});
    return *m;
  };
  for (Elem a : up)
    for (Elem b : up)
      for (Elem c : up)
        if (meet(a, s.join(b, c)) != s.join(meet(a, b), meet(a, c)))
          throw structure_error("frame is not distributive at " +
                                    detail::tuple_text({a, b, c}),
                                {a, b, c});

  f.complement.assign(n, kAbsent);
  for (Elem y : up) {
    for (Elem z : up)
      if (s.join(y, z) == s.one() && meet(y, z) == v0) {
        if (f.complement[y] != kAbsent)
          throw structure_error("complement not unique at " + detail::tuple_text({y}), {y});
        f.complement[y] = z;
      }
    if (f.complement[y] == kAbsent)
      throw structure_error("frame element has no complement: " + detail::tuple_text({y}), {y});
  }

  for (Elem a : up) {
    if (a == v0) continue;
    bool covers = true;
    for (Elem b : up)
      if (b != v0 && s.lt(b, a)) covers = false;
    if (covers) f.atoms.push_back(a);
  }
  f.dim = static_cast<int>(f.atoms.size());
  if (f.dim > kMaxGround) throw structure_error("frame dimension too large");

  f.mask.assign(n, kAbsent);
  std::vector<Elem> by_mask(std::size_t{1} << f.dim, kAbsent);
  for (Elem x : up) {
    std::uint32_t m = 0;
    for (int i = 0; i < f.dim; ++i)
      if (s.leq(f.atoms[i], x)) m |= 1u << i;
    if (by_mask[m] != kAbsent)
      throw structure_error("frame element is not a join of atoms: " +
                                detail::tuple_text({by_mask[m], x}),
                            {by_mask[m], x});
    by_mask[m] = x;
    f.mask[x] = m;
  }
  if (up.size() != by_mask.size())
    throw structure_error("frame size is not 2^" + std::to_string(f.dim));
  for (Elem a : up)
    for (Elem b : up)
      if (s.leq(a, b) != ((f.mask[a] & ~f.mask[b]) == 0))
        throw structure_error("frame order is not inclusion of atom sets at " +
                                  detail::tuple_text({a, b}),
                              {a, b});
  if (f.vertex_list.size() != by_mask.size())
    throw structure_error("vertex count is not 2^" + std::to_string(f.dim));
  std::size_t cube = 1;
  for (int i = 0; i < f.dim; ++i) cube *= 3;
  if (s.size() != cube) throw structure_error("structure size is not 3^" + std::to_string(f.dim));
  return f;
}

struct Reconstruction {
  CubeFrame frame;
  Universe universe;
  /// phi[x] is the interval assigned to element x.
  std::vector<Interval> phi;
};

/// An explicit, verified isomorphism onto the interval algebra of the frame
/// at v0 (default: the least-index vertex).  Throws structure_error when the
/// input fails the cubic or MR suites or any transport check.
inline Reconstruction reconstruct_iso(const FiniteStructure& s,
                                      std::optional<Elem> v0 = std::nullopt) {
  if (!s.has_delta()) throw std::invalid_argument("reconstruct_iso needs a delta table");
  for (const auto& r : check_cubic(s))
    if (!r.passed) throw structure_error("input fails " + r.axiom, r.counterexamples.front());
  if (auto r = check_mr_axiom(s); !r.passed)
    throw structure_error("input fails the MR-axiom", r.counterexamples.front());

  const Elem n = static_cast<Elem>(s.size());
  Reconstruction out;
  out.frame = boolean_frame(s, v0 ? *v0 : minimal_elements(s).front());
  const CubeFrame& f = out.frame;
  out.universe = Universe(f.dim);
  const Universe& u = out.universe;

  for (Elem x = 0; x < n; ++x) {
    const Elem hi = s.join(x, f.v0);
    const Elem lo = f.complement[s.join(s.delta(s.one(), x), f.v0)];
    if (!leq(BoolElem{f.mask[lo]}, BoolElem{f.mask[hi]}))
      throw structure_error("image is not an interval at " + detail::tuple_text({x}), {x});
    out.phi.emplace_back(u, BoolElem{f.mask[lo]}, BoolElem{f.mask[hi]});
  }

  const auto& phi = out.phi;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (phi[x] == phi[y])
        throw structure_error("map is not injective at " + detail::tuple_text({x, y}), {x, y});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto fail = [&](const char* what) {
        throw structure_error(std::string("map does not preserve ") + what + " at " +
                                  detail::tuple_text({x, y}),
                              {x, y});
      };
      if (phi[s.join(x, y)] != join(phi[x], phi[y])) fail("join");
      if (s.leq(x, y) != phi[x].leq(phi[y])) fail("order");
      if (s.leq(y, x) && phi[s.delta(x, y)] != delta(phi[x], phi[y])) fail("delta");
      const auto m = s.glb(x, y);
      const auto im = meet(phi[x], phi[y]);
      if (m.has_value() != im.has_value() || (m && phi[*m] != *im)) fail("meets");
      const auto c = caret_from_delta(s, x, y);
      if (!c || phi[*c] != caret(phi[x], phi[y])) fail("caret");
    }
  return out;
}

/// Reconstructs at every vertex and checks that all frames are isomorphic.
inline std::vector<Reconstruction> reconstruct_all_vertices(const FiniteStructure& s) {
  std::vector<Reconstruction> out;
  std::optional<std::vector<std::uint32_t>> first;
  for (Elem v : minimal_elements(s)) {
    out.push_back(reconstruct_iso(s, v));
    const CubeFrame& f = out.back().frame;
    Tables t;
    t.size = f.members.size();
    t.join = Table(t.size);
    for (Elem i = 0; i < t.size; ++i) {
      if (f.members[i] == s.one()) t.one = i;
      for (Elem j = 0; j < t.size; ++j) {
        const Elem jn = s.join(f.members[i], f.members[j]);
        t.join(i, j) = static_cast<Elem>(
            std::find(f.members.begin(), f.members.end(), jn) - f.members.begin());
      }
    }
    auto cert = canonical_form(FiniteStructure(std::move(t))).certificate;
    if (!first) first = std::move(cert);
    else if (cert != *first)
      throw structure_error("frames at different vertices are not isomorphic", {v});
  }
  return out;
}

}  // namespace mrcube
