#include <doctest.h>

#include <random>

#include "wilsonff/charsets.hpp"
#include "wilsonff/dickson.hpp"

using namespace wilsonff;

TEST_CASE("small dickson polynomials") {
  auto f13 = FieldCtx::make(13, 1);
  CHECK(dickson_first(f13, 0) == poly_from_ints(f13, {2}));
  CHECK(dickson_first(f13, 1) == poly_from_ints(f13, {0, 1}));
  CHECK(dickson_first(f13, 3) == poly_from_ints(f13, {0, -3, 0, 1}));
  CHECK(dickson_second(f13, 0) == poly_from_ints(f13, {1}));
  CHECK(dickson_second(f13, 2) == poly_from_ints(f13, {-1, 0, 1}));

  auto f23 = FieldCtx::make(23, 1);
  CHECK(dickson_first(f23, 6) == poly_from_ints(f23, {-2, 0, 9, 0, -6, 0, 1}));
  CHECK(dickson_second(f23, 5) == poly_from_ints(f23, {0, 3, 0, -4, 0, 1}));
}

TEST_CASE("degrees and leading coefficients") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto f = FieldCtx::make(p, 1);
    for (std::uint64_t k = 1; k < 40; ++k) {
      const auto d = dickson_first(f, k);
      const auto e = dickson_second(f, k);
      CHECK(d.degree() == static_cast<long>(k));
      CHECK(e.degree() == static_cast<long>(k));
      CHECK(d.coeffs.back() == f.one());
      CHECK(e.coeffs.back() == f.one());
    }
  }
}

TEST_CASE("evaluation") {
  auto f13 = FieldCtx::make(13, 1);
  CHECK(poly_eval(f13, dickson_first(f13, 3), f13.from_int(4)) == f13.zero());
  CHECK(poly_eval(f13, dickson_second(f13, 2), f13.one()) == f13.zero());
  CHECK(poly_eval(f13, poly_from_ints(f13, {2}), f13.from_int(9)) == f13.from_int(2));
  CHECK(to_string(f13, dickson_first(f13, 3)) == "0 10 0 1");
  CHECK(to_string(f13, Poly{}) == "0");
}

TEST_CASE("functional equations on random units") {
  for (auto [p, n] : {std::pair{7u, 1u}, {11u, 1u}, {3u, 2u}, {5u, 2u}, {13u, 1u}}) {
    auto f = FieldCtx::make(p, n);
    std::mt19937 rng(p * 31 + n);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int t = 0; t < 20; ++t) {
      const Ext2Elem u{f.element(pick(rng)), f.element(pick(rng))};
      if (u == f.lift(f.zero())) continue;
      const Ext2Elem x = f.bracket(u);
      const Ext2Elem one = f.lift(f.one());
      for (std::uint64_t k = 0; k <= 50; ++k) {
        CHECK(poly_eval(f, dickson_first(f, k), x) == f.bracket(f.pow(u, static_cast<std::int64_t>(k))));
        if (k >= 1 && f.mul(u, u) != one) {
          const Ext2Elem uk = f.pow(u, static_cast<std::int64_t>(k));
          const Ext2Elem want = f.div(f.sub(uk, f.inv(uk)), f.sub(u, f.inv(u)));
          CHECK(poly_eval(f, dickson_second(f, k - 1), x) == want);
        }
      }
    }
  }
}

TEST_CASE("vanishing polynomials equal D_m and E_{m-1}") {
  auto f13 = FieldCtx::make(13, 1);
  CHECK(vanishing_poly(f13, 1, 1) == poly_from_ints(f13, {-1, 0, 1}));
  CHECK(vanishing_poly(f13, -1, -1) == dickson_first(f13, 3));
  auto f23 = FieldCtx::make(23, 1);
  CHECK(vanishing_poly(f23, 1, -1) == poly_from_ints(f23, {-2, 0, 9, 0, -6, 0, 1}));
  CHECK(vanishing_poly(f23, -1, 1) == poly_from_ints(f23, {0, 3, 0, -4, 0, 1}));

  for (auto [p, n] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {29u, 1u}}) {
    auto f = FieldCtx::make(p, n);
    const int eps = f.eps();
    const auto m = static_cast<std::uint64_t>(f.m());
    CHECK(vanishing_poly(f, -eps, -1) == dickson_first(f, m));
    CHECK(vanishing_poly(f, eps, 1) == dickson_second(f, m - 1));
  }
}
