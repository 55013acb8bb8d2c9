#include <catch_amalgamated.hpp>

#include "mrcube/signed_set.hpp"
#include "oracles.hpp"

using namespace mrcube;

namespace {
SignedSet ss(const Universe& u, std::initializer_list<int> pos, std::initializer_list<int> neg) {
  return SignedSet(u, u.element(pos), u.element(neg));
}
}  // namespace

TEST_CASE("signed sets reject overlapping parts") {
  const Universe u(2);
  REQUIRE_THROWS_AS(ss(u, {1}, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(SignedSet(u, BoolElem{0b100}, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(join(ss(u, {1}, {}), SignedSet::top(Universe(1))), std::invalid_argument);
}

TEST_CASE("signed examples") {
  const Universe u(2);
  const SignedSet top = SignedSet::top(u);

  CHECK(join(ss(u, {1}, {2}), ss(u, {1, 2}, {})) == ss(u, {1}, {}));
  CHECK(join(ss(u, {1}, {2}), top) == top);

  CHECK(delta(top, ss(u, {1}, {2})) == ss(u, {2}, {1}));
  CHECK(delta(ss(u, {}, {2}), ss(u, {1}, {2})) == ss(u, {}, {1, 2}));
  CHECK_FALSE(try_delta(ss(u, {1}, {}), ss(u, {}, {1})).has_value());
  REQUIRE_THROWS_AS(delta(ss(u, {1}, {}), ss(u, {}, {1})), std::domain_error);

  CHECK(meet(ss(u, {1}, {}), ss(u, {}, {2})) == ss(u, {1}, {2}));
  CHECK_FALSE(meet(ss(u, {1}, {}), ss(u, {}, {1})).has_value());

  CHECK(caret(ss(u, {1}, {}), ss(u, {}, {1})) == ss(u, {1}, {}));
  CHECK(compose(ss(u, {1}, {}), ss(u, {}, {1})) == ss(u, {1}, {}));

  CHECK(to_string(ss(u, {1}, {2})) == "<{1},{2}>");
}

TEST_CASE("signed enumeration order") {
  CHECK(enumerate_signed(Universe(0)).size() == 1);
  CHECK(enumerate_signed(Universe(2)).size() == 9);
  CHECK(enumerate_signed(Universe(4)).size() == 81);
  for (int n = 0; n <= 4; ++n) {
    const auto all = enumerate_signed(Universe(n));
    const auto ref = oracle::all_signs(n);
    REQUIRE(all.size() == ref.size());
    CHECK(all.front() == SignedSet::top(Universe(n)));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(oracle::signs_of(all[i]) == ref[i]);
      CHECK(signed_index(all[i]) == i);
    }
  }
}

TEST_CASE("signed operations agree with the sign-vector oracle") {
  for (int n = 0; n <= 3; ++n) {
    const auto all = enumerate_signed(Universe(n));
    const auto vecs = oracle::all_signs(n);
    auto vleq = [](const oracle::Signs& a, const oracle::Signs& b) { return oracle::s_leq(a, b); };
    for (const auto& x : all) {
      const auto vx = oracle::signs_of(x);
      CHECK(x == x);
      CHECK(join(x, x) == x);
      CHECK(delta(x, x) == x);
      CHECK(caret(x, x) == x);
      CHECK(compose(x, x) == x);
      CHECK(compose(SignedSet::top(Universe(n)), x) == x);
      CHECK(caret(x, SignedSet::top(Universe(n))) == x);
      for (const auto& y : all) {
        const auto vy = oracle::signs_of(y);
        CHECK(y.leq(x) == oracle::s_leq(vy, vx));
        CHECK(oracle::signs_of(join(x, y)) == oracle::s_join(vx, vy));
        CHECK(oracle::signs_of(join(x, y)) == *oracle::brute_lub(vecs, vx, vy, vleq));
        const auto m = meet(x, y);
        const auto bm = oracle::brute_glb(vecs, vx, vy, vleq);
        REQUIRE(m.has_value() == bm.has_value());
        if (m) CHECK(oracle::signs_of(*m) == *bm);
        if (y.leq(x)) CHECK(oracle::signs_of(delta(x, y)) == oracle::s_delta(vx, vy));
        else CHECK_FALSE(try_delta(x, y).has_value());
        CHECK(oracle::signs_of(compose(x, y)) == oracle::s_compose(vx, vy));
        // caret(x, y) = glb(x, delta(x | y, y)), computed by brute force.
        const auto d = oracle::s_delta(oracle::s_join(vx, vy), vy);
        const auto c = oracle::brute_glb(vecs, vx, d, vleq);
        REQUIRE(c.has_value());
        CHECK(oracle::signs_of(caret(x, y)) == *c);
      }
    }
  }
}

TEST_CASE("composition equals caret against delta(1, B)") {
  for (int n = 0; n <= 4; ++n) {
    const Universe u(n);
    const SignedSet top = SignedSet::top(u);
    const auto all = enumerate_signed(u);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(compose(a, b) == caret(a, delta(top, b)));
        CHECK(caret(a, b) == *meet(a, delta(join(a, b), b)));
      }
  }
}
