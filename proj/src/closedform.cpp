#include "wilsonff/closedform.hpp"

#include <stdexcept>

namespace wilsonff {
namespace {

FieldElem sgn(const FieldCtx& f, int s) { return f.from_int(s); }

FieldElem frac(const FieldCtx& f, int num, int den) {
  return f.div(f.from_int(num), f.from_int(den));
}

FieldElem ensure_base(const FieldCtx& f, const Ext2Elem& x, const char* what) {
  if (!f.in_base(x)) throw std::logic_error(std::string(what) + " left the base field");
  return x.lo;
}

int pm1_pow(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::string to_string(const FieldCtx& f, const ProjTau& tau) {
  return tau.infinite ? "inf" : f.to_string(tau.t);
}

NormalizedFrame normalized_frame(const FieldCtx& f, ProjTau tau) {
  NormalizedFrame fr;
  fr.tau = tau;
  const FieldElem four = f.from_int(4);
  if (tau.infinite) {
    fr.j = four;
    fr.k = f.neg(four);
    fr.l = f.zero();
    fr.r = f.from_int(-2);
    fr.tau_prime = f.from_int(-1);
    fr.tau_prime_valid = false;
    return fr;
  }
  const FieldElem t1 = f.add(tau.t, f.one());
  if (t1 == f.zero()) throw DomainError("tau = -1 has no normalized frame");
  fr.l = f.div(four, t1);
  fr.j = f.mul(tau.t, fr.l);
  fr.k = f.neg(fr.j);
  fr.r = f.sub(fr.l, f.from_int(2));
  fr.tau_prime = f.div(fr.k, four);
  fr.tau_prime_valid = true;
  const FieldElem two = f.from_int(2);
  if (f.div(f.sub(two, fr.r), f.add(two, fr.r)) != tau.t) {
    throw std::logic_error("normalized frame does not round-trip");
  }
  return fr;
}

NormalizedFrame frame_from_jl(const FieldCtx& f, FieldElem j, FieldElem l) {
  if (f.add(j, l) != f.from_int(4)) {
    throw DomainError("(j, l) = (" + f.to_string(j) + ", " + f.to_string(l) +
                      ") is not normalized to j + l = 4");
  }
  if (l == f.zero()) return normalized_frame(f, ProjTau::infinity());
  return normalized_frame(f, ProjTau::finite(f.div(j, l)));
}

FieldElem prod_S_single(const FieldCtx& f, FieldElem k, int sign) {
  const int eps = f.eps();
  const FieldElem two = f.from_int(2);
  switch (f.legendre(k)) {
    case 0:
      return sgn(f, sign > 0 ? -eps : eps);
    case 1:
      return sign > 0 ? f.div(sgn(f, eps), f.mul(two, k)) : f.mul(sgn(f, eps), two);
    default:
      return sign > 0 ? f.mul(sgn(f, -eps), two) : f.div(sgn(f, -eps), f.mul(two, k));
  }
}

Quadruple quadruple_from_one(const FieldCtx& f, FieldElem k, FieldElem l, SignPair known,
                             FieldElem known_value) {
  if (k == l) throw DomainError("k = l is not allowed");
  if (known_value == f.zero()) throw DomainError("a product of units cannot be zero");

  // P_k^+ = S++ S+- g1, P_l^- = S-- S+- g2, P_k^- = S-- S-+ g3.
  auto corr = [&](FieldElem a, FieldElem b, int cls) {
    return (f.legendre(f.sub(a, b)) == cls && b != f.zero()) ? f.neg(b) : f.one();
  };
  const FieldElem p1 = f.div(prod_S_single(f, k, 1), corr(k, l, 1));
  const FieldElem p2 = f.div(prod_S_single(f, l, -1), corr(l, k, -1));
  const FieldElem p3 = f.div(prod_S_single(f, k, -1), corr(k, l, -1));

  constexpr SignPair pp{1, 1}, pm{1, -1}, mp{-1, 1}, mm{-1, -1};
  Quadruple out;
  out[known] = known_value;
  if (known == pp) {
    out[pm] = f.div(p1, out[pp]);
    out[mm] = f.div(p2, out[pm]);
    out[mp] = f.div(p3, out[mm]);
  } else if (known == pm) {
    out[pp] = f.div(p1, out[pm]);
    out[mm] = f.div(p2, out[pm]);
    out[mp] = f.div(p3, out[mm]);
  } else if (known == mm) {
    out[pm] = f.div(p2, out[mm]);
    out[pp] = f.div(p1, out[pm]);
    out[mp] = f.div(p3, out[mm]);
  } else {
    out[mm] = f.div(p3, out[mp]);
    out[pm] = f.div(p2, out[mm]);
    out[pp] = f.div(p1, out[pm]);
  }
  return out;
}

std::optional<RootCase> root_case_for(const FieldCtx& f, const NormalizedFrame& fr) {
  if (fr.tau.infinite) return std::nullopt;
  const int a = f.legendre(fr.tau.t);
  const int b = f.legendre(f.add(fr.tau.t, f.one()));
  if (a == 1 && b == -1) return RootCase::a1;
  if (a == -1 && b == 1) return RootCase::a2;
  if (a == -1 && b == -1) return RootCase::a3;
  return std::nullopt;
}

DetRoot det_sqrt(const FieldCtx& f, const NormalizedFrame& fr, RootCase c, bool reciprocal) {
  if (root_case_for(f, fr) != c) {
    throw DomainError("square classes of tau = " + to_string(f, fr.tau) +
                      " do not match the requested root case");
  }
  Ext2Elem u = ext2_solve_unit(f, fr.r);
  if (reciprocal) u = f.inv(u);
  const Ext2Elem one = f.lift(f.one());
  if (f.mul(u, u) == one) throw std::logic_error("u^2 = 1 for tau outside {0, -1, inf}");

  const std::int64_t m = f.m();
  const FieldElem two = f.from_int(2);
  DetRoot out;
  out.kind = c;
  switch (c) {
    case RootCase::a1: {
      const Ext2Elem um = f.pow(u, m);
      const Ext2Elem num = f.sub(um, f.inv(um));
      out.value = ensure_base(f, f.div(num, f.sub(u, f.inv(u))), "a1");
      out.root = f.div(two, f.mul(out.value, fr.l));
      const FieldElem r2m4 = f.sub(f.mul(fr.r, fr.r), f.from_int(4));
      if (f.mul(out.value, out.value) != f.div(f.from_int(-4), r2m4) ||
          f.mul(out.root, out.root) != fr.tau.t) {
        throw std::logic_error("a1 square identities failed");
      }
      break;
    }
    case RootCase::a2: {
      out.value = ensure_base(f, f.bracket(f.pow(u, m)), "a2");
      out.root = f.div(two, out.value);
      if (f.mul(out.value, out.value) != fr.l) throw std::logic_error("a2^2 != l");
      break;
    }
    case RootCase::a3: {
      out.value = ensure_base(f, f.bracket(f.pow(f.neg(u), m)), "a3");
      out.root = f.div(out.value, two);
      if (f.mul(out.value, out.value) != fr.j) throw std::logic_error("a3^2 != j");
      break;
    }
  }
  return out;
}

std::string row_name(TableRow row) {
  switch (row) {
    case TableRow::TauZero: return "tau=0";
    case TableRow::TauInfinity: return "tau=inf";
    case TableRow::TauOne: return "tau=1";
    case TableRow::TauThree: return "tau=3";
    case TableRow::TauThird: return "tau=1/3";
    case TableRow::BothSquares: return "(tau|q)=(tau+1|q)=1";
    case TableRow::SquareNonsquare: return "(tau|q)=1,(tau+1|q)=-1";
    case TableRow::NonsquareSquare: return "(tau|q)=-1,(tau+1|q)=1";
    case TableRow::BothNonsquares: return "(tau|q)=(tau+1|q)=-1";
  }
  return "?";
}

TableRow dispatch_row(const FieldCtx& f, const NormalizedFrame& fr) {
  if (fr.tau.infinite) return TableRow::TauInfinity;
  const FieldElem t = fr.tau.t;
  if (t == f.zero()) return TableRow::TauZero;
  if (t == f.one()) return TableRow::TauOne;
  if (f.p() != 3) {
    const FieldElem three = f.from_int(3);
    if (t == three) return TableRow::TauThree;
    if (t == f.inv(three)) return TableRow::TauThird;
  }
  if (auto c = root_case_for(f, fr)) {
    switch (*c) {
      case RootCase::a1: return TableRow::SquareNonsquare;
      case RootCase::a2: return TableRow::NonsquareSquare;
      case RootCase::a3: return TableRow::BothNonsquares;
    }
  }
  return TableRow::BothSquares;
}

int both_squares_class(const FieldCtx& f, const NormalizedFrame& fr, bool negate_root) {
  auto root = f.sqrt(fr.l);
  if (!root) throw DomainError("l is not a square");
  FieldElem s = negate_root ? f.neg(*root) : *root;
  return f.legendre(f.add(f.one(), f.div(s, f.from_int(2))));
}

FieldElem prod_T_row(const FieldCtx& f, const NormalizedFrame& fr, TableRow row, SignPair s) {
  const std::size_t idx = Quadruple::index(s);
  const std::uint32_t q = f.q();
  const int eps = f.eps();
  const int two = f.legendre(f.from_int(2));
  const int mtwo = f.legendre(f.from_int(-2));
  std::array<FieldElem, 4> v;
  auto E = [&](int x) { return sgn(f, x); };

  switch (row) {
    case TableRow::TauZero:
      v = {frac(f, mtwo, 4), E(mtwo), frac(f, two, 2), E(2 * two)};
      break;
    case TableRow::TauInfinity:
      v = {frac(f, -eps, 4), frac(f, eps, 2), E(1), E(2)};
      break;
    case TableRow::TauOne: {
      const int a = pm1_pow(q / 8);
      const int b = pm1_pow((q + 3) / 8);
      if (q % 8 == 1 || q % 8 == 7) {
        v = {frac(f, a, 8), E(a), E(b), E(2 * b)};
      } else {
        v = {E(a), E(a), E(b), frac(f, b, 4)};
      }
      break;
    }
    case TableRow::TauThree:
      if (q % 12 == 1 || q % 12 == 11) {
        v = {frac(f, mtwo, 6), E(mtwo), E(two), E(2 * two)};
      } else {
        v = {E(-mtwo), E(-2 * mtwo), frac(f, -two, 6), E(-two)};
      }
      break;
    case TableRow::TauThird:
      if (q % 12 == 1 || q % 12 == 11) {
        v = {frac(f, eps, 6), E(eps), E(1), E(2)};
      } else {
        v = {E(eps), frac(f, eps, 6), E(-2), E(-1)};
      }
      break;
    case TableRow::BothSquares: {
      const int nu = both_squares_class(f, fr);
      const FieldElem jl2 = f.mul(f.from_int(2), f.mul(fr.j, fr.l));
      v = {f.div(E(nu * eps), jl2), E(nu * eps), E(nu), E(2 * nu)};
      break;
    }
    case TableRow::SquareNonsquare: {
      const FieldElem t1 = f.add(fr.tau.t, f.one());
      const FieldElem c = f.mul(E(two), det_sqrt(f, fr, RootCase::a1).root);
      v = {f.neg(f.div(t1, f.mul(f.from_int(2), c))), f.neg(c), f.div(E(eps), c),
           f.div(f.mul(E(eps), t1), f.mul(f.from_int(8), c))};
      break;
    }
    case TableRow::NonsquareSquare: {
      const FieldElem t1 = f.add(fr.tau.t, f.one());
      const FieldElem c = f.mul(E(two), det_sqrt(f, fr, RootCase::a2).root);
      v = {f.div(f.mul(E(eps), c), f.from_int(2)), f.mul(E(eps), c),
           f.div(f.mul(c, t1), f.mul(f.from_int(16), fr.tau.t)), f.div(f.from_int(2), c)};
      break;
    }
    case TableRow::BothNonsquares: {
      const FieldElem t1 = f.add(fr.tau.t, f.one());
      const FieldElem c = det_sqrt(f, fr, RootCase::a3).root;
      v = {f.div(E(-eps), f.mul(f.from_int(2), c)),
           f.div(f.mul(E(-eps), t1), f.mul(f.from_int(16), c)), f.inv(c),
           f.mul(f.from_int(2), c)};
      break;
    }
  }
  return v[idx];
}

FieldElem prod_T_closed(const FieldCtx& f, const NormalizedFrame& fr, SignPair s) {
  return prod_T_row(f, fr, dispatch_row(f, fr), s);
}

FieldElem prod_T_closed(const FieldCtx& f, FieldElem j, FieldElem l, SignPair s) {
  return prod_T_closed(f, frame_from_jl(f, j, l), s);
}

std::int64_t rescale_exponent(const FieldCtx& f, FieldElem jp, FieldElem lp, SignPair s) {
  const int eps = f.eps();
  const int nu = f.legendre(f.add(jp, lp));
  const bool beta = f.legendre(jp) == s.e1 && f.legendre(lp) == s.e2;
  const bool gamma = (nu == eps * s.e1 && eps * s.e1 == s.e2) || (-eps == nu * s.e1 && nu * s.e1 == 1);
  return f.m() - (beta ? 1 : 0) - (gamma ? 1 : 0);
}

FieldElem rescale_T(const FieldCtx& f, FieldElem jp, FieldElem lp, SignPair s) {
  const FieldElem sum = f.add(jp, lp);
  if (sum == f.zero()) throw DomainError("j' + l' = 0 is not allowed");
  const FieldElem lambda = f.div(sum, f.from_int(4));
  const int nu = f.legendre(sum);
  const FieldElem j = f.div(jp, lambda);
  const FieldElem l = f.div(lp, lambda);
  const FieldElem base = prod_T_closed(f, j, l, SignPair{nu * s.e1, nu * s.e2});
  return f.mul(f.pow(lambda, rescale_exponent(f, jp, lp, s)), base);
}

FieldElem prod_S_pair(const FieldCtx& f, FieldElem k, FieldElem l, SignPair s) {
  if (k == l) throw DomainError("k = l is not allowed");
  return rescale_T(f, f.neg(k), l, SignPair{f.eps() * s.e1, s.e2});
}

int swap_factor(const FieldCtx& f, FieldElem j, FieldElem l, int mu) {
  const FieldElem sum = f.add(j, l);
  if (sum == f.zero()) throw DomainError("j + l = 0 is not allowed");
  const int base = mu * f.legendre(f.from_int(2)) * f.legendre(sum);
  const bool both = f.legendre(j) == mu && f.legendre(l) == mu;
  return both ? base : -base;
}

FieldElem swap_T(const FieldCtx& f, FieldElem j, FieldElem l, int mu) {
  const int factor = swap_factor(f, j, l, mu);
  return f.mul(sgn(f, factor), rescale_T(f, j, l, SignPair{mu, mu}));
}

TripleVerdict legendre_triple_identity(const FieldCtx& f, FieldElem a, FieldElem b, FieldElem c) {
  if (a == f.zero() || b == f.zero()) throw DomainError("a and b must be nonzero");
  if (f.add(f.mul(a, a), f.mul(b, b)) != f.mul(c, c)) {
    throw DomainError("a^2 + b^2 != c^2");
  }
  TripleVerdict v;
  v.c_plus_a = f.legendre(f.add(c, a));
  v.c_minus_a = f.legendre(f.sub(c, a));
  v.c_plus_b = f.legendre(f.add(c, b));
  v.c_minus_b = f.legendre(f.sub(c, b));
  v.two = f.legendre(f.from_int(2));
  v.holds = v.c_plus_a != 0 && v.c_plus_a == v.two * v.c_plus_b && v.c_plus_a == v.c_minus_a &&
            v.c_plus_b == v.c_minus_b;
  return v;
}

FieldElem unit_product_first(const FieldCtx& f, FieldElem r) {
  const Ext2Elem w = f.neg(ext2_solve_unit(f, r));
  return ensure_base(f, f.bracket(f.pow(w, f.m())), "<(-u)^m>");
}

FieldElem unit_product_second(const FieldCtx& f, FieldElem r) {
  const Ext2Elem u = ext2_solve_unit(f, r);
  const Ext2Elem den = f.sub(u, f.inv(u));
  if (den == f.lift(f.zero())) throw DomainError("r = +-2 is excluded");
  const Ext2Elem wm = f.pow(f.neg(u), f.m());
  return ensure_base(f, f.neg(f.div(f.sub(wm, f.inv(wm)), den)), "E-form product");
}

}  // namespace wilsonff
