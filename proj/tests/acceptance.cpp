// Runs every acceptance criterion at exact field equality and prints one line per criterion.

#include <chrono>
#include <concepts>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wilsonff/charsets.hpp"
#include "wilsonff/closedform.hpp"
#include "wilsonff/correspondence.hpp"
#include "wilsonff/dickson.hpp"
#include "wilsonff/reciprocity.hpp"
#include "wilsonff/verify.hpp"

using namespace wilsonff;

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && mismatches++ == 0) first_failure = what;
  }
  template <std::invocable F>
  void expect(bool ok, F describe) {
    ++checks;
    if (!ok && mismatches++ == 0) first_failure = describe();
  }
};

std::vector<FieldCtx> fields_up_to(std::uint64_t qmax) {
  std::vector<FieldCtx> out;
  for (auto [p, n] : prime_powers(3, qmax, 3)) out.push_back(FieldCtx::make(p, n));
  return out;
}

std::vector<FieldElem> elements(const FieldCtx& f) {
  std::vector<FieldElem> out;
  for (std::uint32_t i = 0; i < f.q(); ++i) out.push_back(f.element(i));
  return out;
}

std::string at(const FieldCtx& f) { return "q=" + std::to_string(f.q()); }

FieldElem brute_T(const FieldCtx& f, FieldElem j, FieldElem l, SignPair s) {
  return brute_product(f, SetFamily::T(j, l, s), 0).value;
}

Tally master_tables() {
  Tally t;
  std::mt19937_64 rng(20240601);
  for (const auto& f : fields_up_to(343)) {
    const FieldElem minus_one = f.from_int(-1);
    std::vector<ProjTau> taus{ProjTau::infinity()};
    for (FieldElem e : elements(f)) {
      if (e != minus_one) taus.push_back(ProjTau::finite(e));
    }
    for (const auto& tau : taus) {
      const NormalizedFrame fr = normalized_frame(f, tau);
      for (SignPair s : kAllSignPairs) {
        const FieldElem brute = brute_T(f, fr.j, fr.l, s);
        const auto where = [&] { return at(f) + " tau=" + to_string(f, tau) + " " + to_string(s); };
        t.expect(prod_T_closed(f, fr, s) == brute, where);
        t.expect(rescale_T(f, fr.j, fr.l, s) == brute, where);
      }
    }
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    for (int i = 0; i < 20; ++i) {
      FieldElem j, l;
      do {
        j = f.element(pick(rng));
        l = f.element(pick(rng));
      } while (f.add(j, l) == f.zero());
      for (SignPair s : kAllSignPairs) {
        t.expect(rescale_T(f, j, l, s) == brute_T(f, j, l, s), [&] {
          return at(f) + " j'=" + f.to_string(j) + " l'=" + f.to_string(l) + " " + to_string(s);
        });
      }
    }
  }
  return t;
}

Tally dickson_identity() {
  Tally t;
  for (const auto& f : fields_up_to(1000)) {
    const int eps = f.eps();
    const std::int64_t m = f.m();
    t.expect(dickson_first(f, m) == vanishing_poly(f, -eps, -1), at(f) + " D_m");
    t.expect(dickson_second(f, m - 1) == vanishing_poly(f, eps, 1), at(f) + " E_{m-1}");
  }
  // Worked examples at q = 13 and q = 23.
  const auto f13 = FieldCtx::make(13, 1);
  const auto f23 = FieldCtx::make(23, 1);
  auto members = [](const FieldCtx& f, int e1, int e2) {
    std::set<std::uint32_t> s;
    for (FieldElem a : enumerate_family(f, SetFamily::A(f.from_int(-2), f.from_int(2), {e1, e2}))) s.insert(a.code);
    return s;
  };
  t.expect(members(f13, 1, 1) == std::set<std::uint32_t>{1, 12}, "q=13 A^{++}");
  t.expect(members(f13, 1, -1) == std::set<std::uint32_t>{3, 5, 6}, "q=13 A^{+-}");
  t.expect(members(f13, -1, 1) == std::set<std::uint32_t>{7, 8, 10}, "q=13 A^{-+}");
  t.expect(members(f13, -1, -1) == std::set<std::uint32_t>{0, 4, 9}, "q=13 A^{--}");
  t.expect(vanishing_poly(f13, 1, 1) == poly_from_ints(f13, {-1, 0, 1}), "q=13 f^{++} = x^2 - 1");
  t.expect(dickson_second(f13, 2) == poly_from_ints(f13, {-1, 0, 1}), "q=13 E_2 = x^2 - 1");
  t.expect(vanishing_poly(f13, -1, -1) == poly_from_ints(f13, {0, -3, 0, 1}), "q=13 f^{--} = x^3 - 3x");
  t.expect(dickson_first(f13, 3) == poly_from_ints(f13, {0, -3, 0, 1}), "q=13 D_3 = x^3 - 3x");
  t.expect(members(f23, 1, 1) == std::set<std::uint32_t>{4, 6, 10, 11, 14}, "q=23 A^{++}");
  t.expect(members(f23, 1, -1) == std::set<std::uint32_t>{3, 5, 8, 15, 18, 20}, "q=23 A^{+-}");
  t.expect(members(f23, -1, 1) == std::set<std::uint32_t>{0, 1, 7, 16, 22}, "q=23 A^{-+}");
  t.expect(members(f23, -1, -1) == std::set<std::uint32_t>{9, 12, 13, 17, 19}, "q=23 A^{--}");
  const Poly e5 = poly_from_ints(f23, {0, 3, 0, -4, 0, 1});
  const Poly d6 = poly_from_ints(f23, {-2, 0, 9, 0, -6, 0, 1});
  t.expect(vanishing_poly(f23, -1, 1) == e5, "q=23 f^{-+} = x^5 - 4x^3 + 3x");
  t.expect(dickson_second(f23, 5) == e5, "q=23 E_5");
  t.expect(vanishing_poly(f23, 1, -1) == d6, "q=23 f^{+-} = x^6 - 6x^4 + 9x^2 - 2");
  t.expect(dickson_first(f23, 6) == d6, "q=23 D_6");
  return t;
}

Tally cardinalities() {
  Tally t;
  for (const auto& f : fields_up_to(125)) {
    const auto all = elements(f);
    auto one = [&](const SetFamily& fam) {
      t.expect(card_closed(f, fam) == static_cast<std::int64_t>(enumerate_family(f, fam).size()),
               [&] { return at(f) + " " + to_string(f, fam); });
    };
    for (FieldElem x : all) {
      one(SetFamily::S1(x, 1));
      one(SetFamily::S1(x, -1));
      for (FieldElem y : all) {
        for (SignPair s : kAllSignPairs) {
          if (x != y) {
            one(SetFamily::A(x, y, s));
            one(SetFamily::S2(x, y, s));
          }
          if (f.add(x, y) != f.zero()) one(SetFamily::T(x, y, s));
        }
      }
    }
  }
  for (const auto& f : fields_up_to(1000)) {
    const std::int64_t q = f.q();
    const std::int64_t floors[4] = {(q - 3) / 4, (q + 1) / 4, (q - 1) / 4, (q - 1) / 4};
    for (int i = 0; i < 4; ++i) {
      const SetFamily fam = SetFamily::A(f.zero(), f.one(), kAllSignPairs[i]);
      const auto n = static_cast<std::int64_t>(enumerate_family(f, fam).size());
      t.expect(n == floors[i], [&] { return at(f) + " floor " + to_string(kAllSignPairs[i]); });
      t.expect(card_closed(f, fam) == n, [&] { return at(f) + " A_{0,1}^" + to_string(kAllSignPairs[i]); });
    }
  }
  return t;
}

Tally correspondence() {
  Tally t;
  for (const auto& f : fields_up_to(343)) {
    const FieldElem minus_one = f.from_int(-1);
    std::set<std::pair<std::uint32_t, std::uint32_t>> reps;
    for (FieldElem tau : elements(f)) {
      const Ext2Elem v = v_of_tau(f, tau);
      t.expect(tau_of_orbit(f, v) == tau, [&] { return at(f) + " tau=" + f.to_string(tau); });
      const Orbit o = orbit_of(f, v);
      reps.insert({o.rep.lo.code, o.rep.hi.code});
      if (tau != f.zero() && tau != minus_one) {
        t.expect(classify_tau(f, tau).order_test, [&] { return at(f) + " v^(q-e1e2) tau=" + f.to_string(tau); });
      }
    }
    t.expect(reps.size() == f.q(), at(f) + " tau -> orbit injective");
    const auto q = static_cast<std::uint64_t>(f.q());
    std::vector<Ext2Elem> units = roots_of_unity(f, 2 * q - 2);
    for (const auto& v : roots_of_unity(f, 2 * q + 2)) units.push_back(v);
    for (const auto& v : units) {
      t.expect(orbit_of_tau(f, tau_of_orbit(f, v)) == orbit_of(f, v),
               [&] { return at(f) + " v=" + f.to_string(v); });
    }
    for (SignPair s : kAllSignPairs) {
      t.expect(orbit_count_card(f, s.e1, s.e2) == card_closed(f, SetFamily::A(f.zero(), f.one(), s)),
               at(f) + " orbit count " + to_string(s));
    }
  }
  return t;
}

Tally intro_identities() {
  Tally t;
  for (const auto& f : fields_up_to(1000)) {
    const FieldElem one = f.one(), three = f.from_int(3), four = f.from_int(4);
    FieldElem p1 = one, p2 = one, p3 = one;
    for (FieldElem a : elements(f)) {
      if (f.legendre(a) == -1 && f.legendre(f.sub(four, a)) == -1) p1 = f.mul(p1, a);
      if (f.legendre(f.neg(a)) == -1 && f.legendre(f.add(four, a)) == -1) p2 = f.mul(p2, a);
      if (f.legendre(f.sub(one, a)) == -1 && f.legendre(f.add(three, a)) == -1) p3 = f.mul(p3, a);
    }
    const std::int64_t q = f.q();
    t.expect(p1 == f.from_int(2), at(f) + " a, 4-a");
    t.expect(p2 == f.from_int(2 * f.legendre(f.from_int(2))), at(f) + " -a, 4+a");
    t.expect(p3 == f.from_int(q % 12 == 1 || q % 12 == 11 ? 2 : -1), at(f) + " 1-a, 3+a");
  }
  return t;
}

Tally reciprocity() {
  Tally t;
  for (const auto& f : fields_up_to(5000)) {
    const std::int64_t q = f.q();
    if (f.legendre(f.from_int(2)) == 1) {
      const int expected = q % 8 == 1 ? ((q - 1) / 8 % 2 ? -1 : 1) : ((q + 1) / 8 % 2 ? -1 : 1);
      const FieldElem r = *f.sqrt(f.from_int(2));
      for (FieldElem root : {r, f.neg(r)}) {
        t.expect(f.legendre(f.add(f.from_int(2), root)) == expected, at(f) + " (2+sqrt2|q)");
        t.expect(f.legendre(f.sub(f.from_int(2), root)) == expected, at(f) + " (2-sqrt2|q)");
      }
      t.expect(sqrt2_tower_class(f).ok, at(f) + " sqrt2 class record");
    }
    for (const auto& spec : {TowerSpec::sqrt2(5), TowerSpec::sqrt3(5), TowerSpec::golden(5)}) {
      if ((2 * spec.k) % f.p() == 0) continue;
      const TowerReport r = radical_tower_membership(f, spec);
      t.expect(r.member == r.criterion, at(f) + " tower " + base_name(spec));
      t.expect(r.choices_agree && r.units_ok, at(f) + " tower units " + base_name(spec));
    }
  }
  for (const auto& f : fields_up_to(1000)) {
    for (const auto& spec : {TowerSpec::sqrt2(0), TowerSpec::sqrt3(0), TowerSpec::golden(0)}) {
      const IrrationalReport r = prod_T_quadratic_irrational(f, spec);
      for (const auto& c : r.cases) {
        t.expect(c.closed == c.brute && c.rescaled == c.brute,
                 [&] { return at(f) + " " + base_name(spec) + " b0=" + f.to_string(c.b0); });
      }
    }
  }
  return t;
}

Tally relation_solver() {
  Tally t;
  const auto fields = fields_up_to(343);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const FieldCtx& f = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    FieldElem k, l;
    do {
      k = f.element(pick(rng));
      l = f.element(pick(rng));
    } while (k == l);
    Quadruple brute;
    for (SignPair s : kAllSignPairs) brute[s] = brute_product(f, SetFamily::S2(k, l, s), 0).value;
    const SignPair known = kAllSignPairs[std::uniform_int_distribution<int>(0, 3)(rng)];
    t.expect(quadruple_from_one(f, k, l, known, brute[known]) == brute, [&] {
      return at(f) + " k=" + f.to_string(k) + " l=" + f.to_string(l) + " known " + to_string(known);
    });
  }
  return t;
}

Tally choice_invariance() {
  Tally t;
  const auto fields = fields_up_to(343);
  std::mt19937_64 rng(11);
  int cases = 0;
  while (cases < 1000) {
    const FieldCtx& f = fields[std::uniform_int_distribution<std::size_t>(0, fields.size() - 1)(rng)];
    const FieldElem tau = f.element(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng));
    if (tau == f.zero() || tau == f.from_int(-1)) continue;
    ++cases;
    const NormalizedFrame fr = normalized_frame(f, ProjTau::finite(tau));
    const auto where = [&] { return at(f) + " tau=" + f.to_string(tau); };
    if (const auto rc = root_case_for(f, fr)) {
      const DetRoot a = det_sqrt(f, fr, *rc, false);
      const DetRoot b = det_sqrt(f, fr, *rc, true);
      t.expect(a.value == b.value && a.root == b.root, where);
    } else {
      t.expect(both_squares_class(f, fr, false) == both_squares_class(f, fr, true), where);
      for (SignPair s : kAllSignPairs) {
        t.expect(prod_T_row(f, fr, TableRow::BothSquares, s) == brute_T(f, fr.j, fr.l, s), where);
      }
    }
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "master table sweep, q <= 343, every tau and 20 random (j', l') per q", master_tables},
      {2, "Dickson identity sweep, q <= 1000, with the q = 13 and q = 23 examples", dickson_identity},
      {3, "cardinalities, all families q <= 125 and A_{0,1} floors q <= 1000", cardinalities},
      {4, "orbit and tau correspondence, q <= 343", correspondence},
      {5, "intro identities, q <= 1000", intro_identities},
      {6, "reciprocity: 2 +- sqrt2 and towers q <= 5000, irrational products q <= 1000", reciprocity},
      {7, "relation solver, 100 random cases", relation_solver},
      {8, "choice invariance, 1000 random cases", choice_invariance},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.mismatches == 0 && t.checks > 0;
    all &= ok;
    std::printf("[%s] criterion %d: %s (%llu checks, %llu mismatches, %.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.name, static_cast<unsigned long long>(t.checks), static_cast<unsigned long long>(t.mismatches), secs,
                t.mismatches ? " first: " : "", t.first_failure.c_str());
  }
  return all ? 0 : 1;
}
