// Finite-model search for the universal caret axioms.
//
// For every join-semilattice with top of a given size (one representative per
// isomorphism class) the search first fixes the unary map u(x) = 1 ^ x, which
// axioms (c) and (d) force to be an involutive order automorphism, then
// backtracks over the remaining caret cells.  Axiom (b) makes caret
// equivariant under u, so cells are assigned in u-orbits.  Axiom instances are
// kept in watch lists keyed by the first unassigned cell they read and are
// re-evaluated only when that cell is assigned.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "mrcube/axioms.hpp"
#include "mrcube/canonical.hpp"
#include "mrcube/structure.hpp"

namespace mrcube {

inline constexpr int kMaxSearchSize = 8;

struct SearchConfig {
  int max_size = 6;
  bool include_extra = false;
  bool parallel = false;
  /// Per-size wall-clock budget; a size that exceeds it is reported as timed out.
  std::optional<double> time_limit_seconds;
};

struct SizeResult {
  int size = 0;
  std::vector<FiniteStructure> models;
  std::size_t semilattices = 0;
  std::uint64_t nodes = 0;
  bool timed_out = false;
  double seconds = 0.0;
};

struct ModelCatalog {
  std::vector<SizeResult> sizes;

  const SizeResult& at(int size) const {
    for (const auto& r : sizes)
      if (r.size == size) return r;
    throw std::out_of_range("size not in catalog");
  }
};

namespace detail {

inline FiniteStructure semilattice_from_order(Elem n, const std::vector<std::uint32_t>& down,
                                              bool& ok) {
  // down[b] has bit a set iff a < b; element n-1 is the top.
  auto leq = [&](Elem a, Elem b) { return a == b || ((down[b] >> a) & 1u); };
  Tables t;
  t.size = n;
  t.one = n - 1;
  t.join = Table(n);
  ok = true;
  for (Elem a = 0; a < n && ok; ++a)
    for (Elem b = a; b < n && ok; ++b) {
      Elem lub = kAbsent;
      for (Elem c = 0; c < n; ++c) {
        if (!leq(a, c) || !leq(b, c)) continue;
        bool least = true;
        for (Elem d = 0; d < n && least; ++d)
          if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
        if (least) {
          lub = c;
          break;
        }
      }
      if (lub == kAbsent) ok = false;
      t.join(a, b) = lub;
      t.join(b, a) = lub;
    }
  if (!ok) return FiniteStructure(Tables{1, 0, Table(1, 0), {}, {}, {}});
  return FiniteStructure(std::move(t));
}

}  // namespace detail

/// All join-semilattices with top on n elements, one canonical representative
/// per isomorphism class, ordered by certificate.
inline std::vector<FiniteStructure> enumerate_semilattices(int n) {
  if (n < 1 || n > kMaxSearchSize + 1)
    throw std::invalid_argument("semilattice size must lie in [1, 9]");
  const Elem m = static_cast<Elem>(n - 1);  // elements below the top
  std::map<std::vector<std::uint32_t>, FiniteStructure> found;
  std::vector<std::uint32_t> down(n, 0);

  // Naturally labelled posets: each new element's strict down-set is an order
  // ideal of the elements before it.
  std::function<void(Elem)> grow = [&](Elem k) {
    if (k == m) {
      down[m] = (1u << m) - 1u;
      bool ok = false;
      FiniteStructure s = detail::semilattice_from_order(static_cast<Elem>(n), down, ok);
      if (!ok) return;
      CanonicalForm cf = canonical_form(s);
      if (!found.count(cf.certificate))
        found.emplace(cf.certificate, relabel(s, cf.relabeling));
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool ideal = true;
      for (Elem j = 0; j < k && ideal; ++j)
        if (((mask >> j) & 1u) && (down[j] & ~mask)) ideal = false;
      if (!ideal) continue;
      down[k] = mask;
      grow(k + 1);
    }
  };
  grow(0);

  std::vector<FiniteStructure> out;
  for (auto& [cert, s] : found) out.push_back(std::move(s));
  return out;
}

namespace detail {

/// Involutive order automorphisms of a finite poset.
inline std::vector<std::vector<Elem>> order_involutions(const FiniteStructure& s) {
  const Elem n = static_cast<Elem>(s.size());
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> u(n, kAbsent);
  std::function<void(Elem)> place = [&](Elem i) {
    if (i == n) {
      out.push_back(u);
      return;
    }
    if (u[i] != kAbsent) {
      place(i + 1);
      return;
    }
    for (Elem v = i; v < n; ++v) {
      if (u[v] != kAbsent) continue;
      u[i] = v;
      u[v] = i;
      bool ok = true;
      for (Elem a = 0; a < n && ok; ++a) {
        if (u[a] == kAbsent) continue;
        for (Elem b = 0; b < n && ok; ++b)
          if (u[b] != kAbsent && s.leq(a, b) != s.leq(u[a], u[b])) ok = false;
      }
      if (ok) place(i + 1);
      u[i] = kAbsent;
      u[v] = kAbsent;
    }
  };
  place(0);
  return out;
}

enum class Ax : std::uint8_t { A, EI, EII, F, G, H, Extra };

struct Instance {
  Ax axiom;
  Elem x, y, z;
};

/// Backtracking search over caret tables for one semilattice and one u.
class CaretSearch {
 public:
  CaretSearch(const FiniteStructure& lattice, std::vector<Elem> u, bool include_extra,
              std::function<bool()> expired)
      : s_(lattice), n_(static_cast<Elem>(lattice.size())), one_(lattice.one()),
        u_(std::move(u)), extra_(include_extra), expired_(std::move(expired)),
        cells_(n_ * n_, kAbsent), watch_(n_ * n_) {}

  /// Calls `emit` with every complete caret table; returns false on timeout.
  bool run(const std::function<void(const Table&)>& emit) {
    for (Elem y = 0; y < n_; ++y) cells_[one_ * n_ + y] = u_[y];
    if (!build_domains()) return true;
    build_instances();
    for (std::uint32_t i = 0; i < instances_.size(); ++i) {
      const Status st = eval(instances_[i]);
      if (st.fail) return true;
      if (st.blocked != kAbsent) watch_[st.blocked].push_back(i);
    }
    emit_ = &emit;
    dfs(0);
    return !timed_out_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Status {
    bool fail = false;
    Elem blocked = kAbsent;
  };

  Elem partner(Elem k) const { return u_[k / n_] * n_ + u_[k % n_]; }

  bool build_domains() {
    domains_.assign(n_ * n_, {});
    for (Elem x = 0; x < n_; ++x) {
      if (x == one_) continue;
      for (Elem y = 0; y < n_; ++y) {
        const Elem k = x * n_ + y;
        const bool fixed = partner(k) == k;
        const Elem xy = s_.join(x, y);
        for (Elem z = 0; z < n_; ++z) {
          // (h) z <= x, and (a) read as y | (x ^ y) = x | y.
          if (!s_.leq(z, x) || s_.join(z, y) != xy) continue;
          if (fixed && u_[z] != z) continue;
          domains_[k].push_back(z);
        }
        if (domains_[k].empty()) return false;
      }
    }
    // One representative per u-orbit: comparable cells (delta cells) first,
    // then smallest domains.
    for (Elem k = 0; k < n_ * n_; ++k)
      if (k / n_ != one_ && k <= partner(k)) order_.push_back(k);
    std::stable_sort(order_.begin(), order_.end(), [&](Elem a, Elem b) {
      const bool ca = s_.leq(a % n_, a / n_), cb = s_.leq(b % n_, b / n_);
      if (ca != cb) return ca;
      return domains_[a].size() < domains_[b].size();
    });
    return true;
  }

  void build_instances() {
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        for (Ax a : {Ax::A, Ax::EI, Ax::F, Ax::G, Ax::H}) instances_.push_back({a, x, y, 0});
        if (extra_) instances_.push_back({Ax::Extra, x, y, 0});
        for (Elem z = 0; z < n_; ++z) instances_.push_back({Ax::EII, x, y, z});
      }
  }

  // Partial evaluation: kAbsent means "not yet known".
  struct Eval {
    const CaretSearch& S;
    Elem blocked = kAbsent;

    Elem C(Elem a, Elem b) {
      if (a == kAbsent || b == kAbsent) return kAbsent;
      const Elem k = a * S.n_ + b;
      const Elem v = S.cells_[k];
      if (v == kAbsent && blocked == kAbsent) blocked = k;
      return v;
    }
    Elem J(Elem a, Elem b) const {
      return (a == kAbsent || b == kAbsent) ? kAbsent : S.s_.join(a, b);
    }
    Elem A(Elem x, Elem y) { return J(y, C(S.one_, C(x, y))); }
  };

  Status eval(const Instance& in) const {
    Eval e{*this};
    const Elem x = in.x, y = in.y, z = in.z;
    const Elem xy = s_.join(x, y);
    Elem lhs = kAbsent, rhs = kAbsent;
    bool order = false;  // compare lhs <= rhs instead of lhs == rhs
    switch (in.axiom) {
      case Ax::A:
        lhs = e.J(x, e.C(y, x));
        rhs = xy;
        break;
      case Ax::EI:
        lhs = e.A(e.A(x, y), y);
        rhs = xy;
        break;
      case Ax::EII:
        lhs = e.A(x, e.A(y, z));
        rhs = e.A(y, e.A(x, z));
        break;
      case Ax::F:
        lhs = e.A(xy, e.C(xy, y));
        rhs = e.C(one_, e.A(x, y));
        break;
      case Ax::G:
        lhs = e.C(x, y);
        rhs = e.C(xy, y);
        order = true;
        break;
      case Ax::H:
        lhs = e.C(x, y);
        rhs = x;
        order = true;
        break;
      case Ax::Extra:
        lhs = e.C(xy, y);
        rhs = e.A(x, e.C(x, y));
        order = true;
        break;
    }
    if (e.blocked != kAbsent) return {false, e.blocked};
    const bool ok = order ? s_.leq(lhs, rhs) : lhs == rhs;
    return {!ok, kAbsent};
  }

  bool process(Elem k) {
    auto& list = watch_[k];
    std::size_t i = 0;
    while (i < list.size()) {
      const Status st = eval(instances_[list[i]]);
      if (st.fail) return false;
      if (st.blocked != kAbsent) {
        watch_[st.blocked].push_back(list[i]);
        list[i] = list.back();
        list.pop_back();
      } else {
        ++i;
      }
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (timed_out_) return;
    if ((nodes_++ & 0xff) == 0 && expired_ && expired_()) {
      timed_out_ = true;
      return;
    }
    if (depth == order_.size()) {
      Table t(n_);
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) t(a, b) = cells_[a * n_ + b];
      (*emit_)(t);
      return;
    }
    const Elem k = order_[depth];
    const Elem p = partner(k);
    for (Elem z : domains_[k]) {
      cells_[k] = z;
      cells_[p] = u_[z];
      const bool ok = process(k) && (p == k || process(p));
      if (ok) dfs(depth + 1);
      cells_[k] = kAbsent;
      cells_[p] = kAbsent;
      if (timed_out_) return;
    }
  }

  const FiniteStructure& s_;
  Elem n_;
  Elem one_;
  std::vector<Elem> u_;
  bool extra_;
  std::function<bool()> expired_;
  std::vector<Elem> cells_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::vector<Elem>> domains_;
  std::vector<Elem> order_;
  std::vector<Instance> instances_;
  const std::function<void(const Table&)>* emit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

struct LatticeOutcome {
  std::map<std::vector<std::uint32_t>, FiniteStructure> models;
  std::uint64_t nodes = 0;
  bool timed_out = false;
};

inline LatticeOutcome search_lattice(const FiniteStructure& lattice, bool include_extra,
                                     const std::function<bool()>& expired) {
  LatticeOutcome out;
  for (auto& u : order_involutions(lattice)) {
    CaretSearch search(lattice, u, include_extra, expired);
    const bool finished = search.run([&](const Table& caret) {
      Tables t = lattice.tables();
      t.caret = caret;
      FiniteStructure with_caret(t);
      t.delta = delta_table_from_caret(with_caret);
      FiniteStructure model(std::move(t));
      CanonicalForm cf = canonical_form(model);
      if (!out.models.count(cf.certificate))
        out.models.emplace(cf.certificate, relabel(model, cf.relabeling));
    });
    out.nodes += search.nodes();
    if (!finished) {
      out.timed_out = true;
      break;
    }
  }
  return out;
}

}  // namespace detail

/// All models of one size, up to isomorphism, sorted by certificate.
inline SizeResult search_size(int size, const SearchConfig& cfg) {
  if (size < 1 || size > kMaxSearchSize)
    throw std::invalid_argument("search size must lie in [1, 8]");
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::function<bool()> expired;
  if (cfg.time_limit_seconds) {
    const double limit = *cfg.time_limit_seconds;
    expired = [start, limit] {
      return std::chrono::duration<double>(clock::now() - start).count() > limit;
    };
  }

  SizeResult result;
  result.size = size;
  const std::vector<FiniteStructure> lattices = enumerate_semilattices(size);
  result.semilattices = lattices.size();

  std::vector<detail::LatticeOutcome> outcomes(lattices.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < lattices.size(); i += stride)
      outcomes[i] = detail::search_lattice(lattices[i], cfg.include_extra, expired);
  };
  if (cfg.parallel && lattices.size() > 1) {
    const std::size_t workers = std::clamp<std::size_t>(
        std::thread::hardware_concurrency(), 2, std::min<std::size_t>(lattices.size(), 16));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  } else {
    work(0, 1);
  }

  std::map<std::vector<std::uint32_t>, FiniteStructure> merged;
  for (auto& o : outcomes) {
    result.nodes += o.nodes;
    result.timed_out = result.timed_out || o.timed_out;
    for (auto& [cert, m] : o.models)
      if (!merged.count(cert)) merged.emplace(cert, std::move(m));
  }
  for (auto& [cert, m] : merged) {
    // Every emitted model must satisfy the axioms it was searched under and
    // the cubic and MR suites they imply.
    if (!all_passed(check_caret_axioms(m, cfg.include_extra)) || !all_passed(check_cubic(m)) ||
        !check_mr_axiom(m).passed)
      throw std::logic_error("model search produced a structure failing its axioms");
    result.models.push_back(std::move(m));
  }
  result.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return result;
}

/// Sizes 1..max_size; `on_size` (if set) sees each size as soon as it is done.
inline ModelCatalog search_models(const SearchConfig& cfg,
                                  const std::function<void(const SizeResult&)>& on_size = {}) {
  if (cfg.max_size < 1 || cfg.max_size > kMaxSearchSize)
    throw std::invalid_argument("max_size must lie in [1, 8]");
  ModelCatalog catalog;
  for (int size = 1; size <= cfg.max_size; ++size) {
    catalog.sizes.push_back(search_size(size, cfg));
    if (on_size) on_size(catalog.sizes.back());
  }
  return catalog;
}

}  // namespace mrcube
