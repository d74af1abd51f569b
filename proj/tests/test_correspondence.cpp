#include <doctest.h>

#include <set>

#include "wilsonff/correspondence.hpp"

using namespace wilsonff;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kFields = {
    {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {3, 2}, {5, 2}, {3, 3}};

Ext2Elem primitive_root(const FieldCtx& f, std::uint64_t d) {
  return f.pow(f.ext2_generator(), static_cast<std::int64_t>(f.ext2_group_order() / d));
}

}  // namespace

TEST_CASE("tau of special orbits") {
  for (auto [p, n] : kFields) {
    auto f = FieldCtx::make(p, n);
    CHECK(tau_of_orbit(f, f.lift(f.one())) == f.zero());
    const auto zeta8 = primitive_root(f, 8);
    CHECK(tau_of_orbit(f, zeta8) == f.div(f.from_int(-1), f.from_int(2)));
    if (p != 3) {
      const auto omega = primitive_root(f, 3);
      CHECK(tau_of_orbit(f, omega) == f.div(f.from_int(-3), f.from_int(4)));
    }
  }
  auto f7 = FieldCtx::make(7, 1);
  CHECK_THROWS_AS(tau_of_orbit(f7, primitive_root(f7, 48)), NotInUnion);
}

TEST_CASE("orbits of special tau") {
  auto f7 = FieldCtx::make(7, 1);
  const auto o0 = orbit_of_tau(f7, f7.zero());
  CHECK(o0.size == 2);
  CHECK(orbit_members(f7, o0.rep) ==
        std::vector<Ext2Elem>{f7.lift(f7.one()), f7.lift(f7.from_int(-1))});
  const auto om1 = orbit_of_tau(f7, f7.from_int(-1));
  CHECK(om1.size == 2);
  CHECK(f7.mul(om1.rep, om1.rep) == f7.lift(f7.from_int(-1)));

  const auto t = f7.div(f7.from_int(-3), f7.from_int(4));
  CHECK(t == f7.one());
  const auto o = orbit_of_tau(f7, t);
  CHECK(o.size == 4);
  CHECK(tau_of_orbit(f7, o.rep) == t);
  bool has_order_six = false;
  for (const auto& v : orbit_members(f7, o.rep)) {
    has_order_six |= unit_order_test(f7, v, 3, -1);
  }
  CHECK(has_order_six);
}

TEST_CASE("classification") {
  for (std::uint32_t p : {7u, 13u, 19u, 31u, 37u}) {
    auto f = FieldCtx::make(p, 1);
    const auto c = classify_tau(f, f.div(f.from_int(-3), f.from_int(4)));
    CHECK(c.signs == SignPair{1, 1});
    CHECK(c.order_test);
  }
  for (std::uint32_t p : {11u, 19u}) {
    auto f = FieldCtx::make(p, 1);
    const auto tau = f.div(f.from_int(-1), f.from_int(2));
    const auto c = classify_tau(f, tau);
    CHECK(c.signs == SignPair{f.legendre(f.from_int(-2)), f.legendre(f.from_int(2))});
    CHECK(c.order_test);
  }
  auto f7 = FieldCtx::make(7, 1);
  CHECK(classify_tau(f7, f7.zero()).degenerate);
  CHECK(classify_tau(f7, f7.from_int(-1)).degenerate);
}

TEST_CASE("orbit counting") {
  auto f13 = FieldCtx::make(13, 1);
  CHECK(orbit_count_card(f13, 1, 1) == 2);
  CHECK(orbit_count_card(f13, 1, -1) == 3);
  auto f7 = FieldCtx::make(7, 1);
  CHECK(orbit_count_card(f7, -1, -1) == 1);
  for (auto [p, n] : kFields) {
    auto f = FieldCtx::make(p, n);
    for (auto s : kAllSignPairs) {
      CHECK(orbit_count_card(f, s.e1, s.e2) ==
            card_closed(f, SetFamily::A(f.zero(), f.one(), s)));
    }
  }
}

TEST_CASE("bijection and set descriptions") {
  for (auto [p, n] : kFields) {
    auto f = FieldCtx::make(p, n);
    const auto q = static_cast<std::int64_t>(f.q());
    std::set<std::uint32_t> image;
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      const auto tau = f.element(i);
      const auto o = orbit_of_tau(f, tau);
      CHECK(tau_of_orbit(f, o.rep) == tau);
      CHECK(orbit_of(f, o.rep) == o);
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> orbits;
    for (std::uint64_t d : {2 * q - 2, 2 * q + 2}) {
      for (const auto& v : roots_of_unity(f, static_cast<std::uint64_t>(d))) {
        const auto o = orbit_of(f, v);
        orbits.insert({o.rep.lo.code, o.rep.hi.code});
        CHECK(orbit_of_tau(f, tau_of_orbit(f, v)) == o);
        image.insert(tau_of_orbit(f, v).code);
      }
    }
    CHECK(orbits.size() == f.q());
    CHECK(image.size() == f.q());

    const Ext2Elem one = f.lift(f.one());
    for (auto s : kAllSignPairs) {
      std::set<std::uint32_t> from_v, from_v2;
      const std::int64_t e = q - s.e1 * s.e2;
      for (const auto& v : roots_of_unity(f, static_cast<std::uint64_t>(2 * e))) {
        if (!unit_order_test(f, v, e, s.e2) || f.pow(v, 4) == one) continue;
        from_v.insert(tau_of_orbit(f, v).code);
        const auto v2 = f.mul(v, v);
        const auto b = f.bracket(v2);
        REQUIRE(f.in_base(b));
        from_v2.insert(b.lo.code);
      }
      std::set<std::uint32_t> a01, a22;
      for (auto a : enumerate_family(f, SetFamily::A(f.zero(), f.one(), s))) a01.insert(a.code);
      for (auto a : enumerate_family(f, SetFamily::A(f.from_int(-2), f.from_int(2), s))) {
        a22.insert(a.code);
      }
      CHECK(from_v == a01);
      CHECK(from_v2 == a22);
    }
  }
}

TEST_CASE("v and w relation, and u^m for square classes") {
  for (auto [p, n] : kFields) {
    auto f = FieldCtx::make(p, n);
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      const auto tau = f.element(i);
      if (tau == f.zero() || tau == f.from_int(-1)) continue;
      CHECK(vw_relation(f, tau).has_value());
      const auto c = classify_tau(f, tau);
      CHECK(c.order_test);
      if (c.signs == SignPair{1, 1}) CHECK(ru2_check(f, tau).holds());
    }
  }
}
