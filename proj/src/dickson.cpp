#include "wilsonff/dickson.hpp"

namespace wilsonff {
namespace {

// x * b - a, for the three-term recursions.
Poly step(const FieldCtx& f, const Poly& a, const Poly& b) {
  std::vector<FieldElem> out(std::max(a.coeffs.size(), b.coeffs.size() + 1), f.zero());
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i + 1] = b.coeffs[i];
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] = f.sub(out[i], a.coeffs[i]);
  return make_poly(std::move(out));
}

Poly recurse(const FieldCtx& f, Poly prev, Poly cur, std::uint64_t k) {
  if (k == 0) return prev;
  for (std::uint64_t i = 1; i < k; ++i) {
    Poly next = step(f, prev, cur);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Poly make_poly(std::vector<FieldElem> coeffs) {
  while (!coeffs.empty() && coeffs.back() == FieldElem{0}) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

Poly poly_from_ints(const FieldCtx& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return make_poly(std::move(c));
}

Poly poly_from_roots(const FieldCtx& f, const std::vector<FieldElem>& roots) {
  std::vector<FieldElem> c{f.one()};
  for (FieldElem b : roots) {
    const FieldElem nb = f.neg(b);
    c.push_back(f.zero());
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = f.add(c[i - 1], f.mul(nb, c[i]));
    c[0] = f.mul(nb, c[0]);
  }
  return make_poly(std::move(c));
}

Poly dickson_first(const FieldCtx& f, std::uint64_t k) {
  return recurse(f, make_poly({f.from_int(2)}), make_poly({f.zero(), f.one()}), k);
}

Poly dickson_second(const FieldCtx& f, std::uint64_t k) {
  return recurse(f, make_poly({f.one()}), make_poly({f.zero(), f.one()}), k);
}

FieldElem poly_eval(const FieldCtx& f, const Poly& p, FieldElem x) {
  FieldElem acc = f.zero();
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

Ext2Elem poly_eval(const FieldCtx& f, const Poly& p, const Ext2Elem& x) {
  Ext2Elem acc = f.lift(f.zero());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = f.add(f.mul(acc, x), f.lift(*it));
  }
  return acc;
}

std::string to_string(const FieldCtx& f, const Poly& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i) out += ' ';
    out += f.to_string(p.coeffs[i]);
  }
  return out;
}

}  // namespace wilsonff
