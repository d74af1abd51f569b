#include "wilsonff/ffield.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>

namespace wilsonff {
namespace {

constexpr unsigned kMaxDegree = 31;
constexpr std::uint32_t kCharTableLimit = 1u << 22;

using PolyP = std::vector<std::uint32_t>;  // little-endian over F_p

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t t = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - t) * m[j]) % p);
    }
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(out), m, p);
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::optional<std::pair<std::uint32_t, unsigned>> as_prime_power(std::uint64_t v) {
  if (v < 2) return std::nullopt;
  const auto f = prime_factors(v);
  if (f.size() != 1) return std::nullopt;
  unsigned n = 0;
  while (v > 1) {
    v /= f[0];
    ++n;
  }
  return std::pair{static_cast<std::uint32_t>(f[0]), n};
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const PolyP f(monic.begin(), monic.end());
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const PolyP x{0, 1};
  PolyP h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    // h <- h^p mod f
    PolyP acc{1};
    PolyP base = h;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    PolyP diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    const PolyP g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldCtx FieldCtx::make(std::uint64_t p, unsigned n) {
  if (p % 2 == 0) throw EvenCharacteristic("characteristic " + std::to_string(p) + " is even");
  if (!is_prime(p)) {
    throw CompositeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  }
  if (n == 0) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q >= kMaxFieldOrder || n > kMaxDegree) {
      throw FieldTooLarge("field order " + std::to_string(p) + "^" + std::to_string(n) +
                          " exceeds 2^31");
    }
  }

  FieldCtx f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.n_ = n;
  f.q_ = static_cast<std::uint32_t>(q);
  f.eps_ = (q % 4 == 1) ? 1 : -1;
  f.pow_p_.resize(n + 1);
  f.pow_p_[0] = 1;
  for (unsigned i = 1; i <= n; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * f.p_;

  // Lexicographically smallest monic irreducible, constant term compared first:
  // the counter's most significant digit is c0.
  f.modulus_.assign(n + 1, 0);
  f.modulus_[n] = 1;
  if (n > 1) {
    for (std::uint64_t t = 0; t < q; ++t) {
      std::uint64_t rest = t;
      for (unsigned i = 0; i < n; ++i) {
        f.modulus_[n - 1 - i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_irreducible_mod_p(f.modulus_, f.p_)) break;
    }
  }

  if (f.q_ <= kCharTableLimit) {
    f.quad_char_.assign(f.q_, -1);
    f.quad_char_[0] = 0;
    for (std::uint32_t i = 1; i < f.q_; ++i) f.quad_char_[f.mul(FieldElem{i}, FieldElem{i}).code] = 1;
  }

  // Smallest nonsquare in lexicographic order.
  for (std::uint64_t t = 0; t < q; ++t) {
    std::array<std::uint32_t, kMaxDegree> c{};
    std::uint64_t rest = t;
    for (unsigned i = 0; i < n; ++i) {
      c[n - 1 - i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    const FieldElem a = f.encode(c.data());
    if (f.legendre(a) == -1) {
      f.delta_ = a;
      break;
    }
  }

  // Generator of F_{q^2}^x: order (q-1)(q+1).
  std::vector<std::uint64_t> fac = prime_factors(q - 1);
  for (auto d : prime_factors(q + 1)) fac.push_back(d);
  std::sort(fac.begin(), fac.end());
  fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
  const std::uint64_t order = q * q - 1;
  bool found = false;
  for (std::uint32_t lo = 0; lo < f.q_ && !found; ++lo) {
    for (std::uint32_t hi = 0; hi < f.q_ && !found; ++hi) {
      const Ext2Elem g{{lo}, {hi}};
      if (g.lo.code == 0 && g.hi.code == 0) continue;
      bool primitive = true;
      for (auto d : fac) {
        if (f.pow(g, static_cast<std::int64_t>(order / d)) == f.lift(f.one())) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        f.ext2_gen_ = g;
        found = true;
      }
    }
  }
  return f;
}

void FieldCtx::decode(FieldElem a, std::uint32_t* out) const noexcept {
  std::uint32_t v = a.code;
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
}

FieldElem FieldCtx::encode(const std::uint32_t* c) const noexcept {
  std::uint32_t v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + c[i];
  return {v};
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != n_) throw FieldError("expected " + std::to_string(n_) + " coefficients");
  std::array<std::uint32_t, kMaxDegree> r{};
  for (unsigned i = 0; i < n_; ++i) r[i] = c[i] % p_;
  return encode(r.data());
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem a) const {
  std::vector<std::uint32_t> out(n_);
  decode(a, out.data());
  return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
  if (n_ == 1) {
    const std::uint32_t s = a.code + b.code;
    return {s >= p_ ? s - p_ : s};
  }
  std::array<std::uint32_t, kMaxDegree> x{}, y{};
  decode(a, x.data());
  decode(b, y.data());
  for (unsigned i = 0; i < n_; ++i) {
    x[i] += y[i];
    if (x[i] >= p_) x[i] -= p_;
  }
  return encode(x.data());
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
  if (n_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  std::array<std::uint32_t, kMaxDegree> x{};
  decode(a, x.data());
  for (unsigned i = 0; i < n_; ++i) x[i] = x[i] == 0 ? 0 : p_ - x[i];
  return encode(x.data());
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
  if (n_ == 1) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  }
  return mul_poly(a, b);
}

FieldElem FieldCtx::mul_poly(FieldElem a, FieldElem b) const noexcept {
  std::array<std::uint32_t, kMaxDegree> x{}, y{};
  decode(a, x.data());
  decode(b, y.data());
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    }
  }
  // Reduce by the monic modulus from the top down.
  for (unsigned i = 2 * n_ - 2; i >= n_; --i) {
    const std::uint64_t t = prod[i];
    if (t == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i - n_ + j] = (prod[i - n_ + j] + (p_ - t) * modulus_[j]) % p_;
    }
  }
  std::array<std::uint32_t, kMaxDegree> r{};
  for (unsigned i = 0; i < n_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(r.data());
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  if (n_ == 1) return {inv_mod_p(a.code, p_)};
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
  if (a.code == 0) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t order = static_cast<std::int64_t>(q_) - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  FieldElem acc = one();
  FieldElem base = a;
  for (auto k = static_cast<std::uint64_t>(r); k > 0; k >>= 1) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
  }
  return acc;
}

int FieldCtx::legendre_euler(FieldElem a) const {
  if (a.code == 0) return 0;
  return pow(a, (static_cast<std::int64_t>(q_) - 1) / 2) == one() ? 1 : -1;
}

int FieldCtx::legendre(FieldElem a) const {
  if (!quad_char_.empty()) return quad_char_[a.code];
  return legendre_euler(a);
}

std::optional<FieldElem> FieldCtx::tonelli_shanks(FieldElem a) const {
  std::uint64_t t = q_ - 1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  FieldElem z = pow(delta_, static_cast<std::int64_t>(t));
  FieldElem x = pow(a, static_cast<std::int64_t>((t + 1) / 2));
  FieldElem b = pow(a, static_cast<std::int64_t>(t));
  unsigned mexp = s;
  while (b != one()) {
    unsigned i = 0;
    FieldElem b2 = b;
    while (b2 != one()) {
      b2 = mul(b2, b2);
      ++i;
      if (i == mexp) return std::nullopt;
    }
    FieldElem c = z;
    for (unsigned k = 0; k + 1 < mexp - i; ++k) c = mul(c, c);
    x = mul(x, c);
    z = mul(c, c);
    b = mul(b, z);
    mexp = i;
  }
  return x;
}

std::optional<FieldElem> FieldCtx::sqrt(FieldElem a) const {
  if (a.code == 0) return zero();
  if (legendre(a) != 1) return std::nullopt;
  auto r = tonelli_shanks(a);
  if (!r) return std::nullopt;
  const FieldElem other = neg(*r);
  return less(other, *r) ? other : *r;
}

std::strong_ordering FieldCtx::compare(FieldElem a, FieldElem b) const noexcept {
  if (n_ == 1) return a.code <=> b.code;
  std::array<std::uint32_t, kMaxDegree> x{}, y{};
  decode(a, x.data());
  decode(b, y.data());
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::string FieldCtx::to_string(FieldElem a) const {
  if (n_ == 1) return std::to_string(a.code);
  std::array<std::uint32_t, kMaxDegree> x{};
  decode(a, x.data());
  std::string out;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

FieldElem FieldCtx::parse(std::string_view text) const {
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{}) throw ParseError("expected integer in field element '" +
                                                std::string(text) + "'", start);
    pos = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(v);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                                               "' in field element", pos);
    ++pos;
  }
  if (parts.size() == 1) return from_int(parts[0]);
  if (parts.size() != n_) {
    throw ParseError("field element needs 1 or " + std::to_string(n_) + " coefficients, got " +
                         std::to_string(parts.size()), 0);
  }
  std::vector<std::uint32_t> c(n_);
  for (unsigned i = 0; i < n_; ++i) c[i] = from_int(parts[i]).code;
  return from_coeffs(c);
}

// ---- F_{q^2} ----

Ext2Elem FieldCtx::add(const Ext2Elem& a, const Ext2Elem& b) const noexcept {
  return {add(a.lo, b.lo), add(a.hi, b.hi)};
}

Ext2Elem FieldCtx::sub(const Ext2Elem& a, const Ext2Elem& b) const noexcept {
  return {sub(a.lo, b.lo), sub(a.hi, b.hi)};
}

Ext2Elem FieldCtx::neg(const Ext2Elem& a) const noexcept { return {neg(a.lo), neg(a.hi)}; }

Ext2Elem FieldCtx::mul(const Ext2Elem& a, const Ext2Elem& b) const noexcept {
  const FieldElem lo = add(mul(a.lo, b.lo), mul(delta_, mul(a.hi, b.hi)));
  const FieldElem hi = add(mul(a.lo, b.hi), mul(a.hi, b.lo));
  return {lo, hi};
}

Ext2Elem FieldCtx::inv(const Ext2Elem& a) const {
  // 1/(x + y t) = (x - y t) / (x^2 - delta y^2)
  const FieldElem norm = sub(mul(a.lo, a.lo), mul(delta_, mul(a.hi, a.hi)));
  if (norm.code == 0) throw DivisionByZero("inverse of zero in F_{q^2}");
  const FieldElem ni = inv(norm);
  return {mul(a.lo, ni), neg(mul(a.hi, ni))};
}

Ext2Elem FieldCtx::div(const Ext2Elem& a, const Ext2Elem& b) const { return mul(a, inv(b)); }

Ext2Elem FieldCtx::pow(const Ext2Elem& a, std::int64_t e) const {
  if (a.lo.code == 0 && a.hi.code == 0) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return e == 0 ? lift(one()) : lift(zero());
  }
  const auto order = static_cast<std::int64_t>(ext2_group_order());
  std::int64_t r = e % order;
  if (r < 0) r += order;
  Ext2Elem acc = lift(one());
  Ext2Elem base = a;
  for (auto k = static_cast<std::uint64_t>(r); k > 0; k >>= 1) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
  }
  return acc;
}

Ext2Elem FieldCtx::bracket(const Ext2Elem& u) const { return add(u, inv(u)); }

std::strong_ordering FieldCtx::compare(const Ext2Elem& a, const Ext2Elem& b) const noexcept {
  if (auto c = compare(a.lo, b.lo); c != 0) return c;
  return compare(a.hi, b.hi);
}

std::string FieldCtx::to_string(const Ext2Elem& a) const {
  if (in_base(a)) return to_string(a.lo);
  return "[" + to_string(a.lo) + ";" + to_string(a.hi) + "]";
}

Ext2Elem FieldCtx::sqrt_in_ext2(FieldElem a) const {
  if (auto r = sqrt(a)) return lift(*r);
  // a/delta is a nonzero square when a is a nonsquare.
  const auto t = sqrt(div(a, delta_));
  return {zero(), *t};
}

Ext2Elem ext2_solve_unit(const FieldCtx& f, FieldElem r) {
  const FieldElem half = f.inv(f.from_int(2));
  const FieldElem disc = f.sub(f.mul(r, r), f.from_int(4));
  const FieldElem r2 = f.mul(r, half);
  Ext2Elem u1, u2;
  if (auto s = f.sqrt(disc)) {
    u1 = f.lift(f.add(r2, f.mul(*s, half)));
    u2 = f.lift(f.sub(r2, f.mul(*s, half)));
  } else {
    const FieldElem t = *f.sqrt(f.div(disc, f.delta()));
    u1 = {r2, f.mul(t, half)};
    u2 = {r2, f.neg(f.mul(t, half))};
  }
  return f.less(u2, u1) ? u2 : u1;
}

bool unit_order_test(const FieldCtx& f, const Ext2Elem& u, std::int64_t e, int target) {
  return f.pow(u, e) == f.lift(f.from_int(target));
}

}  // namespace wilsonff
