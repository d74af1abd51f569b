#pragma once

// Closed forms for products over the S and T families.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "wilsonff/charsets.hpp"
#include "wilsonff/ffield.hpp"

namespace wilsonff {

/// Raised when a formula is asked for outside its hypotheses.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// tau in F_q or the point at infinity.
struct ProjTau {
  bool infinite = false;
  FieldElem t;

  static ProjTau finite(FieldElem v) { return {false, v}; }
  static ProjTau infinity() { return {true, {}}; }
  friend bool operator==(const ProjTau&, const ProjTau&) = default;
};

std::string to_string(const FieldCtx& f, const ProjTau& tau);

/// j + l = 4, k = -j, r = l - 2, tau' = k/4, tau = j/l.
struct NormalizedFrame {
  ProjTau tau;
  FieldElem j, k, l, r;
  FieldElem tau_prime;
  bool tau_prime_valid = false;  // tau' = -1 at tau = infinity
};

NormalizedFrame normalized_frame(const FieldCtx& f, ProjTau tau);
/// Frame of the pair (j, l) with j + l = 4.
NormalizedFrame frame_from_jl(const FieldCtx& f, FieldElem j, FieldElem l);

/// prod S_k^{sign}.
FieldElem prod_S_single(const FieldCtx& f, FieldElem k, int sign);

/// The four products prod S_{k,l}^{e1,e2} indexed ++, +-, -+, --.
struct Quadruple {
  std::array<FieldElem, 4> v;

  FieldElem& operator[](SignPair s) { return v[index(s)]; }
  const FieldElem& operator[](SignPair s) const { return v[index(s)]; }
  static std::size_t index(SignPair s) noexcept {
    return (s.e1 > 0 ? 0 : 2) + (s.e2 > 0 ? 0 : 1);
  }
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

/// Recovers all four products from one known value.
Quadruple quadruple_from_one(const FieldCtx& f, FieldElem k, FieldElem l, SignPair known,
                             FieldElem known_value);

enum class RootCase { a1, a2, a3 };

struct DetRoot {
  RootCase kind = RootCase::a1;
  /// a1, a2 or a3 itself.
  FieldElem value;
  /// sqrt(tau) = 2/(a1 l), sqrt(tau+1) = 2/a2, or sqrt(tau/(tau+1)) = a3/2.
  FieldElem root;
};

/// The square-root case matching the classes of (tau, tau+1), if any.
std::optional<RootCase> root_case_for(const FieldCtx& f, const NormalizedFrame& fr);

/// Computes the root from u with <u> = r, or from 1/u when `reciprocal` is set.
DetRoot det_sqrt(const FieldCtx& f, const NormalizedFrame& fr, RootCase c, bool reciprocal = false);

enum class TableRow {
  TauZero,
  TauInfinity,
  TauOne,
  TauThree,
  TauThird,
  BothSquares,
  SquareNonsquare,   // (tau|q) = 1, (tau+1|q) = -1
  NonsquareSquare,   // (tau|q) = -1, (tau+1|q) = 1
  BothNonsquares,
};

std::string row_name(TableRow row);

/// First applicable row in the order of specificity.
TableRow dispatch_row(const FieldCtx& f, const NormalizedFrame& fr);

/// Value of prod T_{j,l}^{signs} by the formula of a given row; the caller
/// guarantees that the row applies.
FieldElem prod_T_row(const FieldCtx& f, const NormalizedFrame& fr, TableRow row, SignPair s);

/// Class of 1 + sqrt(l)/2 for the BothSquares rows, from the given root of l.
int both_squares_class(const FieldCtx& f, const NormalizedFrame& fr, bool negate_root = false);

FieldElem prod_T_closed(const FieldCtx& f, const NormalizedFrame& fr, SignPair s);
/// Requires j + l = 4.
FieldElem prod_T_closed(const FieldCtx& f, FieldElem j, FieldElem l, SignPair s);

/// Exponent m - beta - gamma of the rescaling factor (may be negative for q = 3).
std::int64_t rescale_exponent(const FieldCtx& f, FieldElem jp, FieldElem lp, SignPair s);

/// prod T_{j',l'}^{signs} for any j' + l' != 0.
FieldElem rescale_T(const FieldCtx& f, FieldElem jp, FieldElem lp, SignPair s);

/// prod S_{k,l}^{signs} for k != l, through T_{-k,l}^{eps e1, e2}.
FieldElem prod_S_pair(const FieldCtx& f, FieldElem k, FieldElem l, SignPair s);

/// Factor taking prod T_{j,l}^{mu,mu} to prod T_{l,j}^{mu,mu}.
int swap_factor(const FieldCtx& f, FieldElem j, FieldElem l, int mu);
/// prod T_{l,j}^{mu,mu} from the closed value of prod T_{j,l}^{mu,mu}.
FieldElem swap_T(const FieldCtx& f, FieldElem j, FieldElem l, int mu);

struct TripleVerdict {
  int c_plus_a = 0;
  int c_minus_a = 0;
  int c_plus_b = 0;
  int c_minus_b = 0;
  int two = 0;  // (2|q)
  bool holds = false;
};

/// For ab != 0 and a^2 + b^2 = c^2: (c+a|q) = (2|q)(c+b|q) != 0, (c+a|q) = (c-a|q),
/// (c+b|q) = (c-b|q).
TripleVerdict legendre_triple_identity(const FieldCtx& f, FieldElem a, FieldElem b, FieldElem c);

/// <(-u)^m> with <u> = r; equals prod S_{r-2,r+2}^{-eps,-} off A_{-2,2}^{-eps,-}.
FieldElem unit_product_first(const FieldCtx& f, FieldElem r);
/// -((-u)^m - (-u)^-m)/(u - 1/u); equals prod S_{r-2,r+2}^{eps,+} off A_{-2,2}^{eps,+} and r = +-2.
FieldElem unit_product_second(const FieldCtx& f, FieldElem r);

}  // namespace wilsonff
