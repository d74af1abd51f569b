#pragma once

// Polynomials over F_q and the Dickson families D_k, E_k.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wilsonff/ffield.hpp"

namespace wilsonff {

/// Little-endian coefficients, no trailing zeros; the zero polynomial is empty.
struct Poly {
  std::vector<FieldElem> coeffs;

  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly make_poly(std::vector<FieldElem> coeffs);
Poly poly_from_ints(const FieldCtx& f, std::initializer_list<std::int64_t> coeffs);

/// prod (x - b) over the given roots.
Poly poly_from_roots(const FieldCtx& f, const std::vector<FieldElem>& roots);

/// D_0 = 2, D_1 = x, D_{k+2} = x D_{k+1} - D_k.
Poly dickson_first(const FieldCtx& f, std::uint64_t k);
/// E_0 = 1, E_1 = x, E_{k+2} = x E_{k+1} - E_k.
Poly dickson_second(const FieldCtx& f, std::uint64_t k);

FieldElem poly_eval(const FieldCtx& f, const Poly& p, FieldElem x);
Ext2Elem poly_eval(const FieldCtx& f, const Poly& p, const Ext2Elem& x);

/// Space separated coefficient texts, low to high; "0" for the zero polynomial.
std::string to_string(const FieldCtx& f, const Poly& p);

}  // namespace wilsonff
