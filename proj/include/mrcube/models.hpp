// Concrete finite models tabulated into FiniteStructure form.

#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "mrcube/interval.hpp"
#include "mrcube/signed_set.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

/// A tabulated model together with the concrete element behind each index.
template <class T>
struct Model {
  std::vector<T> carrier;
  FiniteStructure structure;

  Elem index_of(const T& x) const {
    for (Elem i = 0; i < carrier.size(); ++i)
      if (carrier[i] == x) return i;
    throw std::invalid_argument("element not in carrier");
  }
};

/// Element types with join, caret, try_delta and a top supplied by the caller.
template <class T>
concept CubicElement = requires(const T& a, const T& b) {
  { join(a, b) } -> std::convertible_to<T>;
  { caret(a, b) } -> std::convertible_to<T>;
  { try_delta(a, b) } -> std::convertible_to<std::optional<T>>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// Tabulates join, caret and delta over `carrier`, which must be closed under
/// all three and contain `top`.
template <CubicElement T>
Model<T> tabulate(std::vector<T> carrier, const T& top) {
  const std::size_t n = carrier.size();
  auto index = [&](const T& x) -> Elem {
    for (Elem i = 0; i < n; ++i)
      if (carrier[i] == x) return i;
    throw std::invalid_argument("carrier is not closed under the operations: " + to_string(x));
  };
  Tables t;
  t.size = n;
  t.one = index(top);
  t.join = Table(n);
  t.caret = Table(n);
  t.delta = Table(n);
  for (Elem a = 0; a < n; ++a) {
    t.labels.push_back(to_string(carrier[a]));
    for (Elem b = 0; b < n; ++b) {
      t.join(a, b) = index(join(carrier[a], carrier[b]));
      (*t.caret)(a, b) = index(caret(carrier[a], carrier[b]));
      if (auto d = try_delta(carrier[a], carrier[b])) (*t.delta)(a, b) = index(*d);
    }
  }
  FiniteStructure s(std::move(t));
  return Model<T>{std::move(carrier), std::move(s)};
}

/// The signed-set algebra S(X), in enumerate_signed order (top at index 0).
inline Model<SignedSet> make_signed_model(const Universe& u) {
  return tabulate(enumerate_signed(u), SignedSet::top(u));
}

/// The interval algebra I(P(X)), in enumerate_intervals order (top at index 0).
inline Model<Interval> make_interval_model(const Universe& u) {
  return tabulate(enumerate_intervals(u), Interval::top(u));
}

/// The filter algebra of a principal filter, with the ambient operations.
inline Model<Interval> make_filter_model(const PrincipalFilter& f) {
  return tabulate(filter_subalgebra(f).members(), Interval::top(f.universe()));
}

/// Four elements a, b < c < 1 with delta(x, y) = y on comparable pairs: a
/// semilattice whose delta-caret is partial, so it is not an MR-algebra.
/// Indices: a = 0, b = 1, c = 2, 1 = 3.
inline FiniteStructure make_diamond_minus_bottom() {
  Tables t;
  t.size = 4;
  t.one = 3;
  t.join = Table(4);
  const Elem j[4][4] = {{0, 2, 2, 3}, {2, 1, 2, 3}, {2, 2, 2, 3}, {3, 3, 3, 3}};
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) t.join(a, b) = j[a][b];
  t.delta = Table(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if (t.join(a, b) == a) (*t.delta)(a, b) = b;
  t.labels = {"a", "b", "c", "1"};
  return FiniteStructure(std::move(t));
}

/// The one-element structure.
inline FiniteStructure make_singleton() {
  Tables t;
  t.size = 1;
  t.one = 0;
  t.join = Table(1, 0);
  t.caret = Table(1, 0);
  t.delta = Table(1, 0);
  return FiniteStructure(std::move(t));
}

}  // namespace mrcube
