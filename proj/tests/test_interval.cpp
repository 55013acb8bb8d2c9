#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "mrcube/interval.hpp"
#include "oracles.hpp"

using namespace mrcube;

namespace {
Interval iv(const Universe& u, std::initializer_list<int> lo, std::initializer_list<int> hi) {
  return Interval(u, u.element(lo), u.element(hi));
}

// Collapse operations spelled out from delta, join and the arrow.
Interval star_from_delta(const Interval& a, const Interval& b) {
  return join(a, delta(join(a, b), b));
}
Interval implies_from_delta(const Interval& a, const Interval& b) {
  return implies(delta(join(a, b), a), b);
}
bool collapsed(const Interval& a, const Interval& b) { return delta(join(a, b), a) == b; }
}  // namespace

TEST_CASE("interval construction") {
  const Universe u(2);
  REQUIRE_THROWS_AS(iv(u, {1}, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(Interval(u, {}, BoolElem{0b100}), std::invalid_argument);
  CHECK(Interval::top(u) == iv(u, {}, {1, 2}));
  CHECK(to_string(iv(u, {1}, {1, 2})) == "[{1},{1,2}]");
}

TEST_CASE("interval examples") {
  const Universe u(2), u1(1);
  const Interval top = Interval::top(u);

  CHECK(join(iv(u, {1}, {1}), iv(u, {2}, {2})) == top);
  CHECK(delta(iv(u, {}, {1}), iv(u, {}, {})) == iv(u, {1}, {1}));
  CHECK(delta(top, iv(u, {1}, {1, 2})) == iv(u, {}, {2}));
  REQUIRE_THROWS_AS(delta(iv(u, {}, {}), iv(u, {1}, {1})), std::domain_error);

  CHECK(meet(iv(u, {}, {1}), iv(u, {1}, {1, 2})) == iv(u, {1}, {1}));
  CHECK_FALSE(meet(iv(u, {}, {}), iv(u, {1}, {1})).has_value());

  CHECK(caret(iv(u, {}, {1}), iv(u, {2}, {1, 2})) == iv(u, {}, {1}));
  CHECK(caret(iv(u1, {}, {}), iv(u1, {1}, {1})) == iv(u1, {}, {}));

  CHECK(length(top).value == u.bottom());
  CHECK(length(iv(u, {1}, {1, 2})).value == u.element({1}));

  CHECK(star(iv(u1, {}, {}), iv(u1, {1}, {1})) == iv(u1, {}, {}));
  CHECK(collapse_implies(iv(u1, {}, {}), iv(u1, {1}, {1})) == iv(u1, {}, {1}));

  CHECK(to_interval(SignedSet(u, u.element({1}), u.element({2}))) == iv(u, {1}, {1}));
  CHECK(to_interval(SignedSet::top(u)) == top);
}

TEST_CASE("interval identities over all elements") {
  for (int n = 0; n <= 3; ++n) {
    const Universe u(n);
    const Interval top = Interval::top(u);
    for (const auto& x : enumerate_intervals(u)) {
      CHECK(join(x, x) == x);
      CHECK(join(x, top) == top);
      CHECK(delta(x, x) == x);
      CHECK(caret(x, top) == x);
      CHECK(*meet(x, top) == x);
      CHECK(star(x, x) == x);
      CHECK(star(x, top) == top);
      CHECK(implies(x, x) == top);
      CHECK(implies(top, x) == x);
      CHECK(collapse_implies(x, x) == top);
      // Open question resolved as 1 => a = a.
      CHECK(collapse_implies(top, x) == x);
      if (x.lo() == x.hi()) CHECK(length(x).value == u.top());
      for (const auto& y : enumerate_intervals(u))
        if (y.leq(x)) CHECK(implies(implies(x, y), y) == x);
    }
  }
}

TEST_CASE("interval operations agree with the point-set oracle") {
  for (int n = 0; n <= 3; ++n) {
    const Universe u(n);
    const auto all = enumerate_intervals(u);
    CHECK(all.size() == static_cast<std::size_t>(std::pow(3, n)));
    std::vector<std::uint64_t> pts;
    for (const auto& x : all) pts.push_back(oracle::points(x));
    auto pleq = [](std::uint64_t a, std::uint64_t b) { return oracle::p_leq(a, b); };
    for (const auto& x : all) {
      CHECK(length(x).value.bits == oracle::fixed_coords(x));
      for (const auto& y : all) {
        const auto px = oracle::points(x), py = oracle::points(y);
        CHECK(y.leq(x) == oracle::p_leq(py, px));
        CHECK(oracle::points(join(x, y)) == *oracle::brute_lub(pts, px, py, pleq));
        const auto m = meet(x, y);
        const auto bm = oracle::brute_glb(pts, px, py, pleq);
        REQUIRE(m.has_value() == bm.has_value());
        if (m) CHECK(oracle::points(*m) == *bm);
        if (y.leq(x)) CHECK(oracle::points(delta(x, y)) == oracle::p_delta(x, y));
        const auto c = oracle::brute_glb(pts, px, oracle::p_delta(join(x, y), y), pleq);
        REQUIRE(c.has_value());
        CHECK(oracle::points(caret(x, y)) == *c);
      }
    }
  }
}

TEST_CASE("closed forms match compositional forms and the length lemma") {
  for (int n = 0; n <= 4; ++n) {
    const auto all = enumerate_intervals(Universe(n));
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(star(a, b) == star_from_delta(a, b));
        CHECK(collapse_implies(a, b) == implies_from_delta(a, b));
        CHECK(collapsed(a, b) == (length(a) == length(b)));
      }
  }
}

TEST_CASE("up-set identities") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate_intervals(Universe(n));
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!a.leq(b)) continue;
        for (const auto& c : all) {
          if (!a.leq(c)) continue;
          CHECK(star(b, c) == join(b, c));
          const auto m = meet(b, c);
          REQUIRE(m.has_value());
          CHECK(collapse_implies(b, c) == implies(b, c));
          CHECK(collapsed(b, c) == (b == c));
        }
      }
  }
}

TEST_CASE("signed-interval isomorphism") {
  for (int n = 0; n <= 4; ++n) {
    const Universe u(n);
    const auto ss = enumerate_signed(u);
    for (const auto& s : ss) CHECK(to_signed(to_interval(s)) == s);
    for (const auto& x : enumerate_intervals(u)) CHECK(to_interval(to_signed(x)) == x);
    for (const auto& x : ss)
      for (const auto& y : ss) {
        const Interval hx = to_interval(x), hy = to_interval(y);
        CHECK(to_interval(join(x, y)) == join(hx, hy));
        CHECK(y.leq(x) == hy.leq(hx));
        if (y.leq(x)) CHECK(to_interval(delta(x, y)) == delta(hx, hy));
        CHECK(to_interval(caret(x, y)) == caret(hx, hy));
      }
  }
}

TEST_CASE("filter algebras") {
  const Universe u(2);
  const auto members = filter_subalgebra(principal_filter(u.element({1}), u)).members();
  CHECK(members.size() == 3);
  for (const auto& x : {iv(u, {}, {1}), iv(u, {}, {1, 2}), iv(u, {2}, {1, 2})})
    CHECK(std::find(members.begin(), members.end(), x) != members.end());
  CHECK(filter_subalgebra(principal_filter(u.bottom(), u)).members() == enumerate_intervals(u));
  CHECK(filter_subalgebra(principal_filter(u.top(), u)).members() ==
        std::vector<Interval>{Interval::top(u)});

  // Closed under join, delta and caret, with 3^|~f| members.
  for (int n = 0; n <= 3; ++n) {
    const Universe w(n);
    for (BoolElem f : w.elements()) {
      const FilterAlgebra fa = filter_subalgebra(principal_filter(f, w));
      const auto ms = fa.members();
      CHECK(ms.size() == static_cast<std::size_t>(std::pow(3, n - cardinality(f))));
      for (const auto& x : ms)
        for (const auto& y : ms) {
          CHECK(fa.contains(join(x, y)));
          CHECK(fa.contains(caret(x, y)));
          if (y.leq(x)) CHECK(fa.contains(delta(x, y)));
        }
    }
  }
}
