#include "wilsonff/charsets.hpp"

#include <algorithm>

namespace wilsonff {

char sign_char(int e) noexcept { return e > 0 ? '+' : '-'; }

std::string to_string(SignPair s) { return {sign_char(s.e1), sign_char(s.e2)}; }

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A: return "A";
    case FamilyKind::S1: return "S1";
    case FamilyKind::S2: return "S2";
    case FamilyKind::T: return "T";
  }
  return "?";
}

void validate(const FieldCtx& f, const SetFamily& fam) {
  auto is_sign = [](int e) { return e == 1 || e == -1; };
  if (!is_sign(fam.signs.e1) || (fam.kind != FamilyKind::S1 && !is_sign(fam.signs.e2))) {
    throw FamilyError("signs must be +1 or -1");
  }
  switch (fam.kind) {
    case FamilyKind::A:
    case FamilyKind::S2:
      if (fam.x == fam.y) throw FamilyError("k = l = " + f.to_string(fam.x) + " is not allowed");
      break;
    case FamilyKind::T:
      if (f.add(fam.x, fam.y) == f.zero()) {
        throw FamilyError("j + l = 0 is not allowed (j = " + f.to_string(fam.x) +
                          ", l = " + f.to_string(fam.y) + ")");
      }
      break;
    case FamilyKind::S1:
      break;
  }
}

bool contains(const FieldCtx& f, const SetFamily& fam, FieldElem a) {
  if (fam.kind != FamilyKind::A && a == f.zero()) return false;
  switch (fam.kind) {
    case FamilyKind::S1:
      return f.legendre(f.add(a, fam.x)) == fam.signs.e1;
    case FamilyKind::A:
    case FamilyKind::S2:
      return f.legendre(f.add(a, fam.x)) == fam.signs.e1 &&
             f.legendre(f.add(a, fam.y)) == fam.signs.e2;
    case FamilyKind::T:
      return f.legendre(f.sub(fam.x, a)) == fam.signs.e1 &&
             f.legendre(f.add(fam.y, a)) == fam.signs.e2;
  }
  return false;
}

std::vector<FieldElem> enumerate_family(const FieldCtx& f, const SetFamily& fam) {
  validate(f, fam);
  std::vector<FieldElem> out;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    if (contains(f, fam, f.element(i))) out.push_back(f.element(i));
  }
  if (f.n() > 1) {
    std::sort(out.begin(), out.end(), [&](FieldElem a, FieldElem b) { return f.less(a, b); });
  }
  return out;
}

ProductReport brute_product(const FieldCtx& f, const SetFamily& fam, std::size_t member_cap) {
  validate(f, fam);
  ProductReport r;
  r.value = f.one();
  std::vector<FieldElem> members;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const FieldElem a = f.element(i);
    if (!contains(f, fam, a)) continue;
    r.value = f.mul(r.value, a);
    ++r.cardinality;
    if (members.size() <= member_cap) members.push_back(a);
  }
  if (r.cardinality <= member_cap) {
    std::sort(members.begin(), members.end(),
              [&](FieldElem a, FieldElem b) { return f.less(a, b); });
    r.members = std::move(members);
  }
  return r;
}

namespace {

// |A_{k,l}^{e1,e2}| with nu = (l-k|q).
std::int64_t card_A(const FieldCtx& f, FieldElem k, FieldElem l, SignPair s) {
  const int nu = f.legendre(f.sub(l, k));
  const std::int64_t m = f.m();
  if (s.e1 == nu) return s.e2 == nu ? m - 1 : m;
  return m + (f.eps() - 1) / 2;
}

}  // namespace

std::int64_t card_closed(const FieldCtx& f, const SetFamily& fam) {
  validate(f, fam);
  const std::int64_t q = f.q();
  switch (fam.kind) {
    case FamilyKind::S1: {
      if (fam.x == f.zero()) return (q - 1) / 2;
      return fam.signs.e1 == f.legendre(fam.x) ? (q - 3) / 2 : (q - 1) / 2;
    }
    case FamilyKind::A:
      return card_A(f, fam.x, fam.y, fam.signs);
    case FamilyKind::S2: {
      const bool zero_in_A =
          f.legendre(fam.x) == fam.signs.e1 && f.legendre(fam.y) == fam.signs.e2;
      return card_A(f, fam.x, fam.y, fam.signs) - (zero_in_A ? 1 : 0);
    }
    case FamilyKind::T: {
      const SignPair twisted{f.eps() * fam.signs.e1, fam.signs.e2};
      const bool drop = f.legendre(fam.x) == fam.signs.e1 && f.legendre(fam.y) == fam.signs.e2;
      return card_A(f, f.neg(fam.x), fam.y, twisted) - (drop ? 1 : 0);
    }
  }
  return 0;
}

Poly vanishing_poly(const FieldCtx& f, int e1, int e2) {
  const auto roots =
      enumerate_family(f, SetFamily::A(f.from_int(-2), f.from_int(2), SignPair{e1, e2}));
  return poly_from_roots(f, roots);
}

std::string to_string(const FieldCtx& f, const SetFamily& fam) {
  std::string out = kind_name(fam.kind) + " " + f.to_string(fam.x);
  if (fam.kind == FamilyKind::S1) return out + " " + sign_char(fam.signs.e1);
  return out + " " + f.to_string(fam.y) + " " + to_string(fam.signs);
}

nlohmann::json report_row(const FieldCtx& f, const SetFamily& fam, const ProductReport& r) {
  nlohmann::json params = nlohmann::json::array({f.to_string(fam.x)});
  std::string signs(1, sign_char(fam.signs.e1));
  if (fam.kind != FamilyKind::S1) {
    params.push_back(f.to_string(fam.y));
    signs = to_string(fam.signs);
  }
  return {{"q", f.q()},
          {"family", kind_name(fam.kind)},
          {"params", params},
          {"signs", signs},
          {"cardinality", r.cardinality},
          {"value", f.to_string(r.value)}};
}

}  // namespace wilsonff
