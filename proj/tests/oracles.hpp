#pragma once

// Independent reference computations over Z/pZ with plain integers.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::set<std::int64_t> nonzero_squares(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t a = 1; a < p; ++a) s.insert(a * a % p);
  return s;
}

inline int legendre(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == a) return 1;
  }
  return -1;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  for (std::int64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

/// Evaluates a little-endian integer polynomial mod p.
inline std::int64_t eval(const std::vector<std::int64_t>& c, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * x + *it, p);
  return acc;
}

/// Irreducibility of a monic polynomial of degree 2 or 3 via root search.
inline bool low_degree_irreducible(const std::vector<std::int64_t>& c, std::int64_t p) {
  for (std::int64_t x = 0; x < p; ++x) {
    if (eval(c, x, p) == 0) return false;
  }
  return true;
}

/// Lexicographically smallest monic irreducible of degree 2 or 3, constant term first.
inline std::vector<std::int64_t> smallest_irreducible(std::int64_t p, int n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::int64_t t = 0; t < total; ++t) {
    std::int64_t rest = t;
    for (int i = n - 1; i >= 0; --i) {
      c[i] = rest % p;  // c[0] ends up most significant
      rest /= p;
    }
    if (low_degree_irreducible(c, p)) return c;
  }
  return {};
}

}  // namespace oracle
