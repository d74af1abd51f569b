#pragma once

// Square classes of nested radicals over F_q and products at quadratic-irrational parameters.

#include <optional>
#include <vector>

#include "wilsonff/charsets.hpp"
#include "wilsonff/ffield.hpp"

namespace wilsonff {

struct Sqrt2Class {
  bool sqrt2_in_field = false;
  int class_2_plus_sqrt2 = 0;  // shared by both roots when they agree
  int expected = 0;            // (-1)^((q-1)/8) or (-1)^((q+1)/8)
  bool roots_agree = true;
  /// Set when q = eps (mod 16): common class of 2 +- sqrt(2 + sqrt 2) over all root choices.
  std::optional<int> class_next_level;
  int expected_next = 0;  // 1 iff q = eps (mod 32)
  bool ok = true;
};

Sqrt2Class sqrt2_tower_class(const FieldCtx& f);

enum class TowerBase { Sqrt2, Sqrt3, Golden, Bracket };

struct TowerSpec {
  TowerBase base = TowerBase::Sqrt2;
  unsigned k = 4;  // half the order of u0; 4, 6, 5 for the named bases
  unsigned depth = 0;

  static TowerSpec sqrt2(unsigned depth) { return {TowerBase::Sqrt2, 4, depth}; }
  static TowerSpec sqrt3(unsigned depth) { return {TowerBase::Sqrt3, 6, depth}; }
  static TowerSpec golden(unsigned depth) { return {TowerBase::Golden, 5, depth}; }
  static TowerSpec bracket(unsigned k, unsigned depth) { return {TowerBase::Bracket, k, depth}; }
};

std::string base_name(const TowerSpec& spec);

struct TowerReport {
  std::vector<bool> member;     // b_i in F_q, by explicit arithmetic
  std::vector<bool> criterion;  // q = +-1 (mod 2^(i+1) k)
  bool choices_agree = true;    // every branch of square roots gave the same answer
  unsigned unit_levels = 0;     // levels where u_i^2 = u_{i-1}, b_i = <u_i> was checked in F_{q^2}
  bool units_ok = true;
  bool ok() const { return member == criterion && choices_agree && units_ok; }
};

/// Levels 0..depth. Throws DomainError when q shares a factor with 2k.
TowerReport radical_tower_membership(const FieldCtx& f, const TowerSpec& spec);

struct SpecialAngle {
  unsigned d = 0;
  unsigned ext_degree = 2;          // 2, or 4 for d = 10 when q = +-2 (mod 5)
  std::vector<FieldElem> coeffs;    // <zeta_d> in the power basis of the extension
  std::optional<FieldElem> value;   // <zeta_d> when it lies in F_q
  bool square_identity = false;     // <z8>^2 = 2, <z12>^2 = 3, (2<z10>-1)^2 = 5
  bool criterion = false;           // q = +-1 (mod d)
  bool legendre_agrees = false;     // (2|q), (3|q), (5|q) = 1 iff the bracket is in F_q
  bool ok() const { return square_identity && legendre_agrees && criterion == value.has_value(); }
};

/// d in {8, 10, 12}; throws DomainError when d and q are not coprime.
SpecialAngle special_angle_bracket(const FieldCtx& f, unsigned d);

struct IrrationalCase {
  FieldElem b0;
  SignPair signs;
  FieldElem closed;
  FieldElem brute;
  FieldElem rescaled;
  bool ok = false;
};

struct IrrationalReport {
  bool applicable = false;
  std::vector<IrrationalCase> cases;  // one per choice of b0
  bool ok() const {
    for (const auto& c : cases) {
      if (!c.ok) return false;
    }
    return true;
  }
};

/// prod T_{2-b0, 2+b0} at the sign pair selected by q, over every choice of b0.
/// Not applicable unless b0 lies in F_q (and q = eps (mod 4k) for Bracket bases).
IrrationalReport prod_T_quadratic_irrational(const FieldCtx& f, const TowerSpec& spec);

}  // namespace wilsonff
