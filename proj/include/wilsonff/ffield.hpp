#pragma once

// Finite fields F_q = F_p[x]/(g) for odd p, and the quadratic extension F_{q^2}.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wilsonff {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CompositeCharacteristic : public FieldError {
 public:
  using FieldError::FieldError;
};

class EvenCharacteristic : public FieldError {
 public:
  using FieldError::FieldError;
};

class FieldTooLarge : public FieldError {
 public:
  using FieldError::FieldError;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// Largest supported field order (exclusive).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

/// An element of F_q. `code` packs the coefficient vector as sum c_i p^i.
struct FieldElem {
  std::uint32_t code = 0;
  friend bool operator==(FieldElem, FieldElem) = default;
};

/// Element of F_{q^2} written lo + hi*theta with theta^2 = delta.
struct Ext2Elem {
  FieldElem lo;
  FieldElem hi;
  friend bool operator==(const Ext2Elem&, const Ext2Elem&) = default;
};

class FieldCtx {
 public:
  /// Builds F_{p^n} with the lexicographically smallest monic irreducible modulus.
  static FieldCtx make(std::uint64_t p, unsigned n);

  std::uint32_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  /// (-1|q) as an integer.
  int eps() const noexcept { return eps_; }
  /// (q - eps) / 4.
  std::int64_t m() const noexcept { return (static_cast<std::int64_t>(q_) - eps_) / 4; }
  /// Monic modulus, little-endian, n + 1 entries.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  /// Smallest nonsquare, the theta^2 of F_{q^2}.
  FieldElem delta() const noexcept { return delta_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_coeffs(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  /// The i-th element in code order, i in [0, q).
  FieldElem element(std::uint32_t i) const noexcept { return {i}; }

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  /// Negative exponents invert first.
  FieldElem pow(FieldElem a, std::int64_t e) const;

  /// Quadratic character in {-1, 0, 1}.
  int legendre(FieldElem a) const;
  /// Same value, always through a^((q-1)/2).
  int legendre_euler(FieldElem a) const;
  /// Lexicographically smaller of the two square roots, or nothing for nonsquares.
  std::optional<FieldElem> sqrt(FieldElem a) const;

  /// Lexicographic comparison of coefficient vectors, constant term first.
  std::strong_ordering compare(FieldElem a, FieldElem b) const noexcept;
  bool less(FieldElem a, FieldElem b) const noexcept { return compare(a, b) < 0; }

  /// Decimal residue for n = 1, else "c0,c1,...".
  std::string to_string(FieldElem a) const;
  /// Accepts an integer (reduced into F_p) or a comma list of n coefficients.
  FieldElem parse(std::string_view text) const;

  // F_{q^2} arithmetic.
  Ext2Elem lift(FieldElem a) const noexcept { return {a, zero()}; }
  bool in_base(const Ext2Elem& x) const noexcept { return x.hi == zero(); }
  Ext2Elem add(const Ext2Elem& a, const Ext2Elem& b) const noexcept;
  Ext2Elem sub(const Ext2Elem& a, const Ext2Elem& b) const noexcept;
  Ext2Elem neg(const Ext2Elem& a) const noexcept;
  Ext2Elem mul(const Ext2Elem& a, const Ext2Elem& b) const noexcept;
  Ext2Elem inv(const Ext2Elem& a) const;
  Ext2Elem div(const Ext2Elem& a, const Ext2Elem& b) const;
  Ext2Elem pow(const Ext2Elem& a, std::int64_t e) const;
  /// The Frobenius x -> x^q, i.e. (lo, -hi).
  Ext2Elem conj(const Ext2Elem& a) const noexcept { return {a.lo, neg(a.hi)}; }
  /// u + 1/u.
  Ext2Elem bracket(const Ext2Elem& u) const;
  /// Lexicographic on (lo, hi).
  std::strong_ordering compare(const Ext2Elem& a, const Ext2Elem& b) const noexcept;
  bool less(const Ext2Elem& a, const Ext2Elem& b) const noexcept { return compare(a, b) < 0; }
  std::string to_string(const Ext2Elem& a) const;
  /// A square root in F_{q^2} of a base-field element (canonical root or theta times one).
  Ext2Elem sqrt_in_ext2(FieldElem a) const;
  /// A fixed generator of F_{q^2}^x (smallest in (lo, hi) order).
  const Ext2Elem& ext2_generator() const noexcept { return ext2_gen_; }
  /// Order of F_{q^2}^x.
  std::uint64_t ext2_group_order() const noexcept {
    return static_cast<std::uint64_t>(q_) * q_ - 1;
  }

 private:
  FieldCtx() = default;

  void decode(FieldElem a, std::uint32_t* out) const noexcept;
  FieldElem encode(const std::uint32_t* c) const noexcept;
  FieldElem mul_poly(FieldElem a, FieldElem b) const noexcept;
  std::optional<FieldElem> tonelli_shanks(FieldElem a) const;

  std::uint32_t p_ = 3;
  unsigned n_ = 1;
  std::uint32_t q_ = 3;
  int eps_ = -1;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..n
  std::vector<std::int8_t> quad_char_;  // cached quadratic character, empty for large q
  FieldElem delta_{};
  Ext2Elem ext2_gen_{};
};

/// Deterministic primality by trial division.
bool is_prime(std::uint64_t v) noexcept;
/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
/// (p, n) when v = p^n with p prime, else nothing.
std::optional<std::pair<std::uint32_t, unsigned>> as_prime_power(std::uint64_t v);

/// Monic degree-n irreducibility over F_p via gcd(x^(p^i) - x, f) for i <= n/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

/// u with u + 1/u = r, the lexicographically smaller of {u, 1/u}.
Ext2Elem ext2_solve_unit(const FieldCtx& f, FieldElem r);

/// True iff u^e equals target (+1 or -1).
bool unit_order_test(const FieldCtx& f, const Ext2Elem& u, std::int64_t e, int target);

}  // namespace wilsonff
