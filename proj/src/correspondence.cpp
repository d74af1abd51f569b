#include "wilsonff/correspondence.hpp"

#include <algorithm>

#include "wilsonff/closedform.hpp"

namespace wilsonff {

std::vector<Ext2Elem> orbit_members(const FieldCtx& f, const Ext2Elem& v) {
  const Ext2Elem vi = f.inv(v);
  std::vector<Ext2Elem> out{v, vi, f.neg(v), f.neg(vi)};
  std::sort(out.begin(), out.end(), [&](const Ext2Elem& a, const Ext2Elem& b) { return f.less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Orbit orbit_of(const FieldCtx& f, const Ext2Elem& v) {
  const auto members = orbit_members(f, v);
  return {members.front(), static_cast<unsigned>(members.size())};
}

bool in_root_union(const FieldCtx& f, const Ext2Elem& v) {
  if (v == f.lift(f.zero())) return false;
  const auto q = static_cast<std::int64_t>(f.q());
  return unit_order_test(f, v, 2 * q - 2, 1) || unit_order_test(f, v, 2 * q + 2, 1);
}

FieldElem tau_of_orbit(const FieldCtx& f, const Ext2Elem& v) {
  if (!in_root_union(f, v)) {
    throw NotInUnion(f.to_string(v) + " is not a (2q-2)-th or (2q+2)-th root of unity");
  }
  const Ext2Elem d = f.sub(v, f.inv(v));
  const Ext2Elem t = f.div(f.mul(d, d), f.lift(f.from_int(4)));
  if (!f.in_base(t)) throw std::logic_error("tau left the base field");
  return t.lo;
}

Ext2Elem v_of_tau(const FieldCtx& f, FieldElem tau) {
  return f.add(f.sqrt_in_ext2(f.add(tau, f.one())), f.sqrt_in_ext2(tau));
}

Orbit orbit_of_tau(const FieldCtx& f, FieldElem tau) { return orbit_of(f, v_of_tau(f, tau)); }

TauClass classify_tau(const FieldCtx& f, FieldElem tau) {
  TauClass c;
  const FieldElem t1 = f.add(tau, f.one());
  if (tau == f.zero() || t1 == f.zero()) {
    c.degenerate = true;
    return c;
  }
  c.signs = {f.legendre(tau), f.legendre(t1)};
  const Ext2Elem v = v_of_tau(f, tau);
  const auto e = static_cast<std::int64_t>(f.q()) - c.signs.e1 * c.signs.e2;
  c.order_test = unit_order_test(f, v, e, c.signs.e2);
  return c;
}

std::vector<Ext2Elem> roots_of_unity(const FieldCtx& f, std::uint64_t d) {
  const std::uint64_t order = f.ext2_group_order();
  if (d == 0 || order % d != 0) {
    throw std::invalid_argument(std::to_string(d) + " does not divide q^2 - 1");
  }
  const Ext2Elem h = f.pow(f.ext2_generator(), static_cast<std::int64_t>(order / d));
  std::vector<Ext2Elem> out;
  out.reserve(d);
  Ext2Elem x = f.lift(f.one());
  for (std::uint64_t i = 0; i < d; ++i) {
    out.push_back(x);
    x = f.mul(x, h);
  }
  return out;
}

std::int64_t orbit_count_card(const FieldCtx& f, int e1, int e2) {
  const auto n = static_cast<std::int64_t>(f.q()) - e1 * e2;
  const Ext2Elem target = f.lift(f.from_int(e2));
  const Ext2Elem one = f.lift(f.one());
  std::int64_t count = 0;
  for (const auto& v : roots_of_unity(f, static_cast<std::uint64_t>(2 * n))) {
    if (f.pow(v, n) == target && f.pow(v, 4) != one) ++count;
  }
  if (count % 4 != 0) throw std::logic_error("orbit count is not a multiple of four");
  return count / 4;
}

std::optional<VwWitness> vw_relation(const FieldCtx& f, FieldElem tau) {
  const FieldElem t1 = f.add(tau, f.one());
  if (tau == f.zero() || t1 == f.zero()) throw DomainError("tau must avoid {0, -1}");
  const NormalizedFrame fr = normalized_frame(f, ProjTau::finite(tau));
  const Ext2Elem r = f.lift(fr.r);
  const Ext2Elem two = f.lift(f.from_int(2));
  const Ext2Elem base1 = f.sqrt_in_ext2(t1);
  const Ext2Elem base0 = f.sqrt_in_ext2(tau);
  const Ext2Elem basep = f.sqrt_in_ext2(fr.tau_prime);

  for (int b1 : {1, -1}) {
    for (int b0 : {1, -1}) {
      for (int bp : {1, -1}) {
        VwWitness w;
        w.sqrt_tau1 = b1 > 0 ? base1 : f.neg(base1);
        w.sqrt_tau = b0 > 0 ? base0 : f.neg(base0);
        w.sqrt_tau_prime = bp > 0 ? basep : f.neg(basep);
        w.v = f.add(w.sqrt_tau1, w.sqrt_tau);
        w.i = f.div(f.mul(w.sqrt_tau_prime, w.sqrt_tau1), w.sqrt_tau);
        const Ext2Elem vi = f.inv(w.v);
        w.w = f.div(f.add(two, f.mul(w.i, f.sub(w.v, vi))), f.add(w.v, vi));
        const Ext2Elem w_def = f.add(w.sqrt_tau_prime, f.inv(w.sqrt_tau1));
        if (orbit_of(f, w.w) == orbit_of(f, w_def) && f.bracket(f.mul(w.w, w.w)) == r) {
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

Ru2Check ru2_check(const FieldCtx& f, FieldElem tau) {
  const FieldElem t1 = f.add(tau, f.one());
  if (tau == f.zero() || f.legendre(tau) != 1 || f.legendre(t1) != 1) {
    throw DomainError("tau and tau + 1 must be nonzero squares");
  }
  Ru2Check out;
  const FieldElem c = *f.sqrt(t1);
  const FieldElem cp = *f.sqrt(f.add(f.one(), f.inv(tau)));
  out.nu = f.legendre(f.add(f.one(), f.inv(c)));
  out.mu = f.legendre(f.add(f.one(), f.inv(cp)));
  out.nu_mu = out.nu == f.legendre(f.from_int(2)) * out.mu;

  const NormalizedFrame fr = normalized_frame(f, ProjTau::finite(tau));
  const Ext2Elem u = ext2_solve_unit(f, fr.r);
  out.u_power = f.pow(u, f.m()) == f.lift(f.from_int(out.mu));

  const FieldElem two = f.from_int(2);
  const int eps = f.eps();
  auto in_A = [&](FieldElem x, int e1, int e2) {
    return f.legendre(f.sub(x, two)) == e1 && f.legendre(f.add(x, two)) == e2;
  };
  const auto sp = f.sqrt(f.add(fr.r, two));
  const auto sm = f.sqrt(f.sub(two, fr.r));
  out.root_r_plus = sp && in_A(*sp, eps * out.mu, out.mu) && in_A(f.neg(*sp), eps * out.mu, out.mu);
  out.root_r_minus = sm && in_A(*sm, eps * out.nu, out.nu) && in_A(f.neg(*sm), eps * out.nu, out.nu);
  return out;
}

}  // namespace wilsonff
