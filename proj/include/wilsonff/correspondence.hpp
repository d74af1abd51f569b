#pragma once

// Orbits {v, 1/v, -v, -1/v} of roots of unity in F_{q^2} and the elements tau of F_q.

#include <optional>
#include <stdexcept>
#include <vector>

#include "wilsonff/charsets.hpp"
#include "wilsonff/ffield.hpp"

namespace wilsonff {

class NotInUnion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Orbit {
  Ext2Elem rep;  // smallest member
  unsigned size = 0;
  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// The orbit of a unit v.
Orbit orbit_of(const FieldCtx& f, const Ext2Elem& v);
std::vector<Ext2Elem> orbit_members(const FieldCtx& f, const Ext2Elem& v);

/// True when v^(2q-2) = 1 or v^(2q+2) = 1.
bool in_root_union(const FieldCtx& f, const Ext2Elem& v);

/// (v - 1/v)^2 / 4; throws NotInUnion outside mu_{2q-2} and mu_{2q+2}.
FieldElem tau_of_orbit(const FieldCtx& f, const Ext2Elem& v);

/// sqrt(tau+1) + sqrt(tau) in F_{q^2}, with the canonical roots.
Ext2Elem v_of_tau(const FieldCtx& f, FieldElem tau);
Orbit orbit_of_tau(const FieldCtx& f, FieldElem tau);

struct TauClass {
  bool degenerate = false;  // tau in {0, -1}
  SignPair signs;           // ((tau|q), (tau+1|q))
  bool order_test = false;  // v^(q - e1 e2) = e2 for v = v_of_tau
};

TauClass classify_tau(const FieldCtx& f, FieldElem tau);

/// All d-th roots of unity in F_{q^2}; d must divide q^2 - 1.
std::vector<Ext2Elem> roots_of_unity(const FieldCtx& f, std::uint64_t d);

/// |A_{0,1}^{e1,e2}| by counting v with v^(q - e1 e2) = e2 and v^4 != 1, four per orbit.
std::int64_t orbit_count_card(const FieldCtx& f, int e1, int e2);

/// Branch choices realizing w = (2 + i(v - 1/v))/(v + 1/v).
struct VwWitness {
  Ext2Elem sqrt_tau1, sqrt_tau, sqrt_tau_prime;
  Ext2Elem v, w, i;
};

/// First branch choice (over sqrt(tau+1), sqrt(tau), sqrt(tau')) for which w lies in the
/// orbit of sqrt(tau') + sqrt(tau'+1) and <w^2> = r; tau outside {0, -1}.
std::optional<VwWitness> vw_relation(const FieldCtx& f, FieldElem tau);

struct Ru2Check {
  int nu = 0;          // (1 + 1/c | q), c^2 = 1 + tau
  int mu = 0;          // (1 + 1/c' | q), c'^2 = 1 + 1/tau
  bool nu_mu = false;  // nu = (2|q) mu
  bool u_power = false;     // u^m = mu
  bool root_r_plus = false;  // sqrt(r+2) in A_{-2,2}^{eps mu, mu}
  bool root_r_minus = false; // sqrt(2-r) in A_{-2,2}^{eps nu, nu}
  bool holds() const noexcept { return nu_mu && u_power && root_r_plus && root_r_minus; }
};

/// For tau with tau and tau+1 nonzero squares.
Ru2Check ru2_check(const FieldCtx& f, FieldElem tau);

}  // namespace wilsonff
