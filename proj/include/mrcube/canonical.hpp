// Canonical labelings of finite structures.
//
// Individualization-refinement: colour classes are refined by each element's
// multiset of relations (order in both directions, caret and delta results)
// to every other element's class, until stable.  The search tree then
// individualizes members of the first smallest non-singleton class.  At each
// discrete leaf the relabeled tables form a certificate; the canonical form
// is the leaf with the lexicographically least certificate.  Isomorphic
// structures therefore get identical certificates and identical tables.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mrcube/structure.hpp"

namespace mrcube {

struct CanonicalForm {
  /// relabeling[old] = canonical index.
  std::vector<Elem> relabeling;
  /// Complete invariant: equal iff the structures are isomorphic.
  std::vector<std::uint32_t> certificate;
};

namespace detail {

class Canonicalizer {
 public:
  explicit Canonicalizer(const FiniteStructure& s) : s_(s), n_(static_cast<Elem>(s.size())) {
    if (n_ > 1000) throw std::invalid_argument("canonical_form supports at most 1000 elements");
  }

  CanonicalForm run() {
    std::vector<std::uint32_t> cells(n_, 0);
    refine(cells);
    search(cells);
    return {best_labeling_, best_cert_};
  }

 private:
  static std::uint64_t enc(Elem v, const std::vector<std::uint32_t>& cells) {
    return v == kAbsent ? 1023u : cells[v];
  }

  std::uint64_t relation(Elem v, Elem u, const std::vector<std::uint32_t>& cells) const {
    std::uint64_t code = cells[u];
    code = (code << 1) | (s_.leq(u, v) ? 1u : 0u);
    code = (code << 1) | (s_.leq(v, u) ? 1u : 0u);
    if (s_.has_caret()) {
      code = (code << 10) | enc(s_.caret(v, u), cells);
      code = (code << 10) | enc(s_.caret(u, v), cells);
    }
    if (s_.tables().delta) {
      code = (code << 10) | enc((*s_.tables().delta)(v, u), cells);
      code = (code << 10) | enc((*s_.tables().delta)(u, v), cells);
    }
    return code;
  }

  // Refines `cells` (dense ranks) to the coarsest stable partition.
  void refine(std::vector<std::uint32_t>& cells) const {
    std::uint32_t count = cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
    std::vector<std::vector<std::uint64_t>> sig(n_);
    std::vector<Elem> idx(n_);
    while (true) {
      for (Elem v = 0; v < n_; ++v) {
        auto& row = sig[v];
        row.clear();
        for (Elem u = 0; u < n_; ++u) row.push_back(relation(v, u, cells));
        std::sort(row.begin(), row.end());
        row.insert(row.begin(), cells[v]);
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](Elem a, Elem b) { return sig[a] < sig[b]; });
      std::vector<std::uint32_t> next(n_);
      std::uint32_t rank = 0;
      for (Elem i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        next[idx[i]] = rank;
      }
      const std::uint32_t next_count = rank + 1;
      cells = std::move(next);
      if (next_count == count) return;
      count = next_count;
    }
  }

  void search(const std::vector<std::uint32_t>& cells) {
    std::vector<Elem> size(n_, 0);
    for (auto c : cells) ++size[c];
    std::uint32_t target = kAbsent;
    for (std::uint32_t c = 0; c < n_; ++c)
      if (size[c] > 1 && (target == kAbsent || size[c] < size[target])) target = c;
    if (target == kAbsent) {
      leaf(cells);
      return;
    }
    for (Elem v = 0; v < n_; ++v) {
      if (cells[v] != target) continue;
      std::vector<std::uint32_t> child(cells);
      for (Elem w = 0; w < n_; ++w) {
        if (w == v || cells[w] < target) continue;
        child[w] = cells[w] + 1;
      }
      refine(child);
      search(child);
    }
  }

  void leaf(const std::vector<std::uint32_t>& perm) {
    std::vector<Elem> inv(n_);
    for (Elem v = 0; v < n_; ++v) inv[perm[v]] = v;
    auto map = [&](Elem v) -> std::uint32_t { return v == kAbsent ? kAbsent : perm[v]; };
    const Tables& t = s_.tables();
    std::vector<std::uint32_t> cert;
    cert.reserve(3 + 3 * n_ * n_);
    cert.push_back(n_);
    cert.push_back(map(t.one));
    cert.push_back((t.caret ? 1u : 0u) | (t.delta ? 2u : 0u));
    auto append = [&](const Table& tab) {
      for (Elem i = 0; i < n_; ++i)
        for (Elem j = 0; j < n_; ++j) cert.push_back(map(tab(inv[i], inv[j])));
    };
    append(t.join);
    if (t.caret) append(*t.caret);
    if (t.delta) append(*t.delta);
    if (best_cert_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labeling_.assign(perm.begin(), perm.end());
    }
  }

  const FiniteStructure& s_;
  Elem n_;
  std::vector<std::uint32_t> best_cert_;
  std::vector<Elem> best_labeling_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const FiniteStructure& s) {
  return detail::Canonicalizer(s).run();
}

/// The structure relabeled into canonical order.
inline FiniteStructure canonical_structure(const FiniteStructure& s) {
  return relabel(s, canonical_form(s).relabeling);
}

inline bool isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace mrcube
