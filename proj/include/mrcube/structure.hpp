// Finite structures given by explicit operation tables over an indexed
// carrier: a join table with a designated top, an optional caret table and an
// optional delta table defined exactly on comparable pairs (b <= a).
//
// This is the representation consumed by the axiom checkers, the model
// finder, the collapse quotient and the cube reconstruction.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrcube {

using Elem = std::uint32_t;

/// Sentinel for undefined table entries.
inline constexpr Elem kAbsent = std::numeric_limits<Elem>::max();

/// Dense size x size table of element indices.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = kAbsent) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Elem operator()(Elem a, Elem b) const { return data_[a * n_ + b]; }
  Elem& operator()(Elem a, Elem b) { return data_[a * n_ + b]; }
  std::span<const Elem> row(Elem a) const { return {data_.data() + a * n_, n_}; }
  const std::vector<Elem>& data() const { return data_; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// Raw, unvalidated operation tables; the serializable form of a structure.
struct Tables {
  std::size_t size = 0;
  Elem one = 0;
  Table join;
  std::optional<Table> caret;
  std::optional<Table> delta;
  std::vector<std::string> labels;

  friend bool operator==(const Tables&, const Tables&) = default;
};

/// A table that violates a structural law, with the offending element tuple.
class structure_error : public std::runtime_error {
 public:
  explicit structure_error(const std::string& what, std::vector<Elem> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::vector<Elem> witness_;
};

class Order {
 public:
  Order() = default;
  explicit Order(std::size_t n) : n_(n), rel_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return rel_[a * n_ + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  void set(Elem a, Elem b) { rel_[a * n_ + b] = 1; }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

namespace detail {
inline std::string tuple_text(std::initializer_list<Elem> xs) {
  std::string s = "(";
  bool first = true;
  for (Elem x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}
}  // namespace detail

/// x <= y iff x | y = y.  Throws structure_error when the join table is not a
/// join-semilattice with top `one`.
inline Order derive_order(const Tables& t) {
  const std::size_t n = t.size;
  if (n == 0) throw structure_error("structure must have at least one element");
  if (t.join.size() != n) throw structure_error("join table has the wrong dimension");
  if (t.one >= n) throw structure_error("top index out of range");
  for (Elem x : t.join.data())
    if (x >= n) throw structure_error("join table entry out of range");

  const Table& j = t.join;
  for (Elem a = 0; a < n; ++a) {
    if (j(a, a) != a)
      throw structure_error("join is not idempotent at " + detail::tuple_text({a}), {a});
    if (j(a, t.one) != t.one)
      throw structure_error("top does not absorb " + detail::tuple_text({a}), {a});
    for (Elem b = 0; b < n; ++b)
      if (j(a, b) != j(b, a))
        throw structure_error("join is not commutative at " + detail::tuple_text({a, b}),
                              {a, b});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (j(j(a, b), c) != j(a, j(b, c)))
          throw structure_error(
              "join is not associative at " + detail::tuple_text({a, b, c}), {a, b, c});

  Order ord(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (j(a, b) == b) ord.set(a, b);
  return ord;
}

/// A validated structure.  Immutable; caches the order and the partial meet.
class FiniteStructure {
 public:
  explicit FiniteStructure(Tables t) : t_(std::move(t)), order_(derive_order(t_)) {
    const std::size_t n = t_.size;
    if (t_.caret) {
      if (t_.caret->size() != n) throw structure_error("caret table has the wrong dimension");
      for (Elem x : t_.caret->data())
        if (x >= n) throw structure_error("caret table entry out of range");
    }
    if (t_.delta) {
      if (t_.delta->size() != n) throw structure_error("delta table has the wrong dimension");
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          const Elem d = (*t_.delta)(a, b);
          if (order_.leq(b, a) && d >= n)
            throw structure_error("delta missing on comparable pair " +
                                      detail::tuple_text({a, b}),
                                  {a, b});
          if (!order_.leq(b, a) && d != kAbsent)
            throw structure_error("delta defined on incomparable pair " +
                                      detail::tuple_text({a, b}),
                                  {a, b});
          if (t_.caret && order_.leq(b, a) && d != (*t_.caret)(a, b))
            throw structure_error("delta and caret disagree on comparable pair " +
                                      detail::tuple_text({a, b}),
                                  {a, b});
        }
    }
    if (!t_.labels.empty() && t_.labels.size() != n)
      throw structure_error("label count does not match structure size");
    build_meets();
  }

  std::size_t size() const { return t_.size; }
  Elem one() const { return t_.one; }
  const Tables& tables() const { return t_; }
  const Order& order() const { return order_; }

  Elem join(Elem a, Elem b) const { return t_.join(a, b); }
  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  bool lt(Elem a, Elem b) const { return order_.lt(a, b); }

  /// Greatest lower bound, when one exists.
  std::optional<Elem> glb(Elem a, Elem b) const {
    const Elem m = meet_(a, b);
    if (m == kAbsent) return std::nullopt;
    return m;
  }
  Elem meet_or_absent(Elem a, Elem b) const { return meet_(a, b); }
  const Table& meet_table() const { return meet_; }

  bool has_caret() const { return t_.caret.has_value(); }
  Elem caret(Elem a, Elem b) const {
    if (!t_.caret) throw std::logic_error("structure has no caret table");
    return (*t_.caret)(a, b);
  }

  /// Delta is read from the delta table, or from caret on comparable pairs
  /// (delta(a, b) = a ^ b for b <= a) when only a caret table is present.
  bool has_delta() const { return t_.delta.has_value() || t_.caret.has_value(); }

  std::optional<Elem> try_delta(Elem a, Elem b) const {
    if (!order_.leq(b, a)) return std::nullopt;
    if (t_.delta) return (*t_.delta)(a, b);
    if (t_.caret) return (*t_.caret)(a, b);
    throw std::logic_error("structure has neither delta nor caret table");
  }

  Elem delta(Elem a, Elem b) const {
    auto d = try_delta(a, b);
    if (!d)
      throw std::domain_error("delta" + detail::tuple_text({a, b}) + " requires b <= a");
    return *d;
  }

  std::string label(Elem a) const {
    return t_.labels.empty() ? std::to_string(a) : t_.labels[a];
  }

 private:
  void build_meets() {
    const std::size_t n = t_.size;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> down(n * words, 0);
    std::vector<int> down_count(n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem x = 0; x < n; ++x)
        if (order_.leq(x, a)) {
          down[a * words + x / 64] |= std::uint64_t{1} << (x % 64);
          ++down_count[a];
        }
    meet_ = Table(n, kAbsent);
    std::vector<std::uint64_t> common(words);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b) {
        int total = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = down[a * words + w] & down[b * words + w];
          total += std::popcount(common[w]);
        }
        // The glb, if any, is the common lower bound whose down-set is all of them.
        Elem found = kAbsent;
        for (std::size_t w = 0; w < words && found == kAbsent; ++w) {
          std::uint64_t bits = common[w];
          while (bits) {
            const Elem x = static_cast<Elem>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (down_count[x] == total) {
              found = x;
              break;
            }
          }
        }
        meet_(a, b) = found;
        meet_(b, a) = found;
      }
  }

  Tables t_;
  Order order_;
  Table meet_;
};

/// x -> y = y | (1 ^ (x ^ y)), read from the caret table.
inline Elem derived_arrow(const FiniteStructure& s, Elem x, Elem y) {
  return s.join(y, s.caret(s.one(), s.caret(x, y)));
}

/// x -> y = y | delta(1, delta(x | y, y)), read from delta.
inline Elem arrow(const FiniteStructure& s, Elem x, Elem y) {
  return s.join(y, s.delta(s.one(), s.delta(s.join(x, y), y)));
}

/// a ^ b computed as glb(a, delta(a | b, b)); absent when that meet is.
inline std::optional<Elem> caret_from_delta(const FiniteStructure& s, Elem a, Elem b) {
  const auto d = s.try_delta(s.join(a, b), b);
  if (!d || *d >= s.size()) return std::nullopt;
  return s.glb(a, *d);
}

struct MrVerdict {
  bool total = true;
  std::optional<std::pair<Elem, Elem>> witness;
};

/// True iff the delta-defined caret is total; otherwise the first failing pair.
inline MrVerdict is_mr(const FiniteStructure& s) {
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (!caret_from_delta(s, a, b)) return {false, std::make_pair(a, b)};
  return {};
}

/// Caret table computed from delta, or nullopt when caret is not total.
inline std::optional<Table> caret_table_from_delta(const FiniteStructure& s) {
  Table t(s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) {
      auto c = caret_from_delta(s, a, b);
      if (!c) return std::nullopt;
      t(a, b) = *c;
    }
  return t;
}

/// Delta table read off the caret table on comparable pairs.
inline Table delta_table_from_caret(const FiniteStructure& s) {
  Table t(s.size());
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (s.leq(b, a)) t(a, b) = s.caret(a, b);
  return t;
}

/// Renames element i to perm[i] throughout.
inline FiniteStructure relabel(const FiniteStructure& s, std::span<const Elem> perm) {
  const std::size_t n = s.size();
  if (perm.size() != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (Elem p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  auto map = [&](Elem v) { return v == kAbsent ? kAbsent : perm[v]; };
  auto move_table = [&](const Table& src) {
    Table dst(n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) dst(perm[a], perm[b]) = map(src(a, b));
    return dst;
  };
  const Tables& src = s.tables();
  Tables t;
  t.size = n;
  t.one = perm[src.one];
  t.join = move_table(src.join);
  if (src.caret) t.caret = move_table(*src.caret);
  if (src.delta) t.delta = move_table(*src.delta);
  if (!src.labels.empty()) {
    t.labels.resize(n);
    for (Elem a = 0; a < n; ++a) t.labels[perm[a]] = src.labels[a];
  }
  return FiniteStructure(std::move(t));
}

}  // namespace mrcube
