#include "wilsonff/reciprocity.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "wilsonff/closedform.hpp"

namespace wilsonff {
namespace {

int pm1_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

bool is_pm1_mod(std::int64_t q, std::int64_t d) {
  const std::int64_t r = q % d;
  return r == 1 || r == d - 1 || d <= 2;
}

void require_coprime(const FieldCtx& f, std::uint64_t d) {
  if (d % f.p() == 0) {
    throw DomainError("q = " + std::to_string(f.q()) + " is not coprime to " + std::to_string(d));
  }
}

std::vector<Ext2Elem> primitive_roots(const FieldCtx& f, std::uint64_t d) {
  const std::uint64_t order = f.ext2_group_order();
  if (order % d != 0) return {};
  const Ext2Elem h = f.pow(f.ext2_generator(), static_cast<std::int64_t>(order / d));
  std::vector<Ext2Elem> out;
  Ext2Elem x = f.lift(f.one());
  for (std::uint64_t j = 0; j < d; ++j) {
    if (std::gcd(j, d) == 1) out.push_back(x);
    x = f.mul(x, h);
  }
  return out;
}

void push_unique(std::vector<FieldElem>& v, FieldElem x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

// Every admissible b0 in F_q; empty when b0 lies outside F_q.
std::vector<FieldElem> base_values(const FieldCtx& f, const TowerSpec& spec, bool& agree) {
  std::vector<FieldElem> out;
  auto both = [&](std::int64_t radicand) {
    if (auto s = f.sqrt(f.from_int(radicand))) {
      push_unique(out, *s);
      push_unique(out, f.neg(*s));
    }
  };
  switch (spec.base) {
    case TowerBase::Sqrt2:
      both(2);
      break;
    case TowerBase::Sqrt3:
      both(3);
      break;
    case TowerBase::Golden:
      if (auto s = f.sqrt(f.from_int(5))) {
        const FieldElem half = f.inv(f.from_int(2));
        push_unique(out, f.mul(f.sub(f.one(), *s), half));
        push_unique(out, f.mul(f.add(f.one(), *s), half));
      }
      break;
    case TowerBase::Bracket: {
      std::size_t inside = 0, total = 0;
      for (const auto& u : primitive_roots(f, 2 * std::uint64_t{spec.k})) {
        const Ext2Elem b = f.bracket(u);
        ++total;
        if (f.in_base(b)) {
          ++inside;
          push_unique(out, b.lo);
        }
      }
      if (inside != 0 && inside != total) agree = false;
      break;
    }
  }
  return out;
}

bool base_identity(const FieldCtx& f, const TowerSpec& spec, const Ext2Elem& b0) {
  switch (spec.base) {
    case TowerBase::Sqrt2:
      return f.mul(b0, b0) == f.lift(f.from_int(2));
    case TowerBase::Sqrt3:
      return f.mul(b0, b0) == f.lift(f.from_int(3));
    case TowerBase::Golden: {
      const Ext2Elem t = f.sub(f.lift(f.one()), f.add(b0, b0));
      return f.mul(t, t) == f.lift(f.from_int(5));
    }
    case TowerBase::Bracket:
      return true;
  }
  return false;
}

// Arithmetic in F_q[x]/(x^4 + x^3 + x^2 + x + 1).
using Quartic = std::array<FieldElem, 4>;

Quartic quartic_mul(const FieldCtx& f, const Quartic& a, const Quartic& b) {
  std::array<FieldElem, 7> prod{};
  for (auto& c : prod) c = f.zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  // x^5 = 1, then x^4 = -(1 + x + x^2 + x^3).
  for (int i = 6; i >= 5; --i) {
    prod[i - 5] = f.add(prod[i - 5], prod[i]);
    prod[i] = f.zero();
  }
  Quartic out;
  for (int i = 0; i < 4; ++i) out[i] = f.sub(prod[i], prod[4]);
  return out;
}

}  // namespace

std::string base_name(const TowerSpec& spec) {
  switch (spec.base) {
    case TowerBase::Sqrt2: return "sqrt2";
    case TowerBase::Sqrt3: return "sqrt3";
    case TowerBase::Golden: return "golden";
    case TowerBase::Bracket: return "bracket" + std::to_string(spec.k);
  }
  return "?";
}

Sqrt2Class sqrt2_tower_class(const FieldCtx& f) {
  Sqrt2Class out;
  const auto root = f.sqrt(f.from_int(2));
  if (!root) return out;
  out.sqrt2_in_field = true;
  const std::int64_t q = f.q();
  const int eps = f.eps();
  out.expected = q % 8 == 1 ? pm1_pow((q - 1) / 8) : pm1_pow((q + 1) / 8);

  const FieldElem two = f.from_int(2);
  const std::array<FieldElem, 2> roots{*root, f.neg(*root)};
  const int c0 = f.legendre(f.add(two, roots[0]));
  out.class_2_plus_sqrt2 = c0;
  for (FieldElem r : roots) {
    out.roots_agree &= f.legendre(f.add(two, r)) == c0 && f.legendre(f.sub(two, r)) == c0;
  }
  out.ok = out.roots_agree && c0 == out.expected;

  if ((q - eps) % 16 == 0) {
    out.expected_next = (q - eps) % 32 == 0 ? 1 : -1;
    std::optional<int> common;
    bool agree = true;
    for (FieldElem r : roots) {
      const auto s = f.sqrt(f.add(two, r));
      if (!s) {
        agree = false;
        continue;
      }
      for (FieldElem b1 : {*s, f.neg(*s)}) {
        for (FieldElem val : {f.add(two, b1), f.sub(two, b1)}) {
          const int c = f.legendre(val);
          if (!common) common = c;
          agree &= *common == c;
        }
      }
    }
    out.class_next_level = common;
    out.roots_agree &= agree;
    out.ok = out.ok && agree && common == out.expected_next;
  }
  return out;
}

TowerReport radical_tower_membership(const FieldCtx& f, const TowerSpec& spec) {
  if (spec.k == 0) throw DomainError("tower order k must be positive");
  require_coprime(f, 2 * std::uint64_t{spec.k});
  TowerReport out;
  const std::int64_t q = f.q();

  std::vector<FieldElem> level = base_values(f, spec, out.choices_agree);
  for (unsigned i = 0; i <= spec.depth; ++i) {
    out.criterion.push_back(is_pm1_mod(q, (std::int64_t{1} << (i + 1)) * spec.k));
    out.member.push_back(!level.empty());
    std::vector<FieldElem> next;
    std::size_t missing = 0;
    for (FieldElem b : level) {
      if (auto s = f.sqrt(f.add(f.from_int(2), b))) {
        push_unique(next, *s);
        push_unique(next, f.neg(*s));
      } else {
        ++missing;
      }
    }
    if (missing != 0 && missing != level.size()) out.choices_agree = false;
    if (missing != 0) next.clear();
    level = std::move(next);
  }

  // u_i^2 = u_{i-1} and b_i = <u_i> inside F_{q^2}, down from the deepest level that fits.
  const std::uint64_t order = f.ext2_group_order();
  int deepest = -1;
  for (unsigned i = 0; i <= spec.depth; ++i) {
    if (order % ((std::uint64_t{1} << (i + 1)) * spec.k) == 0) deepest = static_cast<int>(i);
  }
  if (deepest >= 0) {
    const std::uint64_t d = (std::uint64_t{1} << (deepest + 1)) * spec.k;
    std::vector<Ext2Elem> u(deepest + 1);
    u[deepest] = f.pow(f.ext2_generator(), static_cast<std::int64_t>(order / d));
    for (int i = deepest; i > 0; --i) u[i - 1] = f.mul(u[i], u[i]);
    const Ext2Elem minus_one = f.lift(f.from_int(-1));
    out.units_ok = f.pow(u[0], spec.k) == minus_one;
    Ext2Elem prev = f.bracket(u[0]);
    out.units_ok &= base_identity(f, spec, prev);
    out.units_ok &= f.in_base(prev) == out.member[0];
    for (int i = 1; i <= deepest; ++i) {
      const Ext2Elem b = f.bracket(u[i]);
      out.units_ok &= f.mul(b, b) == f.add(prev, f.lift(f.from_int(2)));
      out.units_ok &= f.in_base(b) == out.member[i];
      prev = b;
    }
    out.unit_levels = static_cast<unsigned>(deepest + 1);
  }
  return out;
}

SpecialAngle special_angle_bracket(const FieldCtx& f, unsigned d) {
  if (d != 8 && d != 10 && d != 12) throw std::invalid_argument("d must be 8, 10 or 12");
  require_coprime(f, d);
  SpecialAngle out;
  out.d = d;
  const std::int64_t q = f.q();
  out.criterion = is_pm1_mod(q, d);
  const std::int64_t radicand = d == 8 ? 2 : (d == 12 ? 3 : 5);

  const auto roots = primitive_roots(f, d);
  if (!roots.empty()) {
    std::optional<FieldElem> canonical;
    if (auto s = f.sqrt(f.from_int(radicand))) {
      canonical = d == 10 ? f.div(f.sub(f.one(), *s), f.from_int(2)) : *s;
    }
    Ext2Elem b = f.bracket(roots.front());
    for (const auto& z : roots) {
      const Ext2Elem c = f.bracket(z);
      if (canonical && c == f.lift(*canonical)) {
        b = c;
        break;
      }
    }
    out.ext_degree = 2;
    out.coeffs = {b.lo, b.hi};
    if (f.in_base(b)) out.value = b.lo;
    const Ext2Elem t = d == 10 ? f.sub(f.add(b, b), f.lift(f.one())) : b;
    out.square_identity = f.mul(t, t) == f.lift(f.from_int(radicand));
  } else {
    // zeta_10 = -x with x a root of the fifth cyclotomic polynomial; <zeta_10> = 1 + x^2 + x^3.
    out.ext_degree = 4;
    const Quartic b{f.one(), f.zero(), f.one(), f.one()};
    out.coeffs.assign(b.begin(), b.end());
    const Quartic t{f.one(), f.zero(), f.from_int(2), f.from_int(2)};
    const Quartic sq = quartic_mul(f, t, t);
    out.square_identity = sq == Quartic{f.from_int(5), f.zero(), f.zero(), f.zero()};
  }
  out.legendre_agrees = (f.legendre(f.from_int(radicand)) == 1) == out.value.has_value();
  return out;
}

IrrationalReport prod_T_quadratic_irrational(const FieldCtx& f, const TowerSpec& spec) {
  IrrationalReport out;
  if (spec.k == 0 || (2 * std::uint64_t{spec.k}) % f.p() == 0) return out;
  const std::int64_t q = f.q();
  const int eps = f.eps();
  const FieldElem two = f.from_int(2);
  bool agree = true;
  const auto choices = base_values(f, spec, agree);
  if (choices.empty()) return out;
  if (spec.base == TowerBase::Bracket && (q - eps) % (4 * std::int64_t{spec.k}) != 0) return out;
  out.applicable = true;

  for (FieldElem b0 : choices) {
    IrrationalCase c;
    c.b0 = b0;
    switch (spec.base) {
      case TowerBase::Sqrt2:
        if ((q - eps) % 16 == 0) {
          c.signs = {-1, -1};
          c.closed = f.mul(f.from_int(pm1_pow((q - eps) / 16)), two);
        } else {
          c.signs = {1, 1};
          c.closed = f.mul(f.from_int(pm1_pow((q + 8 - eps) / 16)), b0);
        }
        break;
      case TowerBase::Sqrt3: {
        const int nu = pm1_pow((q - eps) / 12);
        c.signs = {-nu, -nu};
        c.closed = f.mul(f.from_int(pm1_pow((q + 1) / 24)), two);
        break;
      }
      case TowerBase::Golden:
        if (q % 20 == 1 || q % 20 == 19) {
          c.signs = {-1, -1};
          c.closed = two;
        } else {
          c.signs = {1, 1};
          c.closed = f.mul(f.from_int(-eps), b0);
        }
        break;
      case TowerBase::Bracket: {
        const std::int64_t mu = (q - eps) / (4 * std::int64_t{spec.k});
        c.signs = {-1, -1};
        c.closed = f.mul(f.from_int(pm1_pow((spec.k + 1) * mu)), two);
        break;
      }
    }
    const FieldElem j = f.sub(two, b0), l = f.add(two, b0);
    c.brute = brute_product(f, SetFamily::T(j, l, c.signs), 0).value;
    c.rescaled = rescale_T(f, j, l, c.signs);
    c.ok = agree && c.closed == c.brute && c.rescaled == c.brute;
    out.cases.push_back(c);
  }
  return out;
}

}  // namespace wilsonff
