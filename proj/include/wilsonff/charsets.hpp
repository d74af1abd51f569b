#pragma once

// The families A, S, T cut out by quadratic-character conditions, with a
// full-scan oracle for their products and closed cardinality formulas.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilsonff/dickson.hpp"
#include "wilsonff/ffield.hpp"

namespace wilsonff {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SignPair {
  int e1 = 1;
  int e2 = 1;
  friend bool operator==(SignPair, SignPair) = default;
};

inline constexpr SignPair kAllSignPairs[4] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

/// "++", "+-", "-+", "--".
std::string to_string(SignPair s);
char sign_char(int e) noexcept;

enum class FamilyKind { A, S1, S2, T };

/// A(k,l) and S2(k,l): (a+k|q) = e1, (a+l|q) = e2; A admits a = 0.
/// S1(k): (a+k|q) = e1 (e2 unused).
/// T(j,l): (j-a|q) = e1, (l+a|q) = e2.
struct SetFamily {
  FamilyKind kind = FamilyKind::S1;
  FieldElem x;  // k or j
  FieldElem y;  // l (unused for S1)
  SignPair signs;

  static SetFamily A(FieldElem k, FieldElem l, SignPair s) { return {FamilyKind::A, k, l, s}; }
  static SetFamily S1(FieldElem k, int sign) { return {FamilyKind::S1, k, {}, {sign, 1}}; }
  static SetFamily S2(FieldElem k, FieldElem l, SignPair s) { return {FamilyKind::S2, k, l, s}; }
  static SetFamily T(FieldElem j, FieldElem l, SignPair s) { return {FamilyKind::T, j, l, s}; }
};

/// Throws FamilyError for k = l (A, S2), j + l = 0 (T) or signs outside {+1, -1}.
void validate(const FieldCtx& f, const SetFamily& fam);

bool contains(const FieldCtx& f, const SetFamily& fam, FieldElem a);

/// Members in lexicographic element order.
std::vector<FieldElem> enumerate_family(const FieldCtx& f, const SetFamily& fam);

inline constexpr std::size_t kDefaultMemberCap = 10000;

struct ProductReport {
  FieldElem value;
  std::uint64_t cardinality = 0;
  /// Present when the cardinality does not exceed the cap.
  std::optional<std::vector<FieldElem>> members;
};

ProductReport brute_product(const FieldCtx& f, const SetFamily& fam,
                            std::size_t member_cap = kDefaultMemberCap);

std::int64_t card_closed(const FieldCtx& f, const SetFamily& fam);

/// prod (x - b) over b in A_{-2,2}^{e1,e2}.
Poly vanishing_poly(const FieldCtx& f, int e1, int e2);

std::string kind_name(FamilyKind kind);
std::string to_string(const FieldCtx& f, const SetFamily& fam);

/// {q, family, params, signs, cardinality, value}
nlohmann::json report_row(const FieldCtx& f, const SetFamily& fam, const ProductReport& r);

}  // namespace wilsonff
