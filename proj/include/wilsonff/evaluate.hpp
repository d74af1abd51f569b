#pragma once

// Textual family specs such as "T 1 3 -- @ p=13" evaluated both ways.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilsonff/charsets.hpp"

namespace wilsonff {

struct FamilyText {
  FamilyKind kind = FamilyKind::T;
  std::vector<std::string> params;  // unparsed field elements
  std::vector<std::size_t> param_pos;
  SignPair signs;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> n;
};

/// Grammar: KIND PARAM... SIGNS [@ p=P [n=N]], KIND in {A, S1, S2, T} ("S" picks S1 or
/// S2 by arity), SIGNS one sign for S1 and two otherwise. Throws ParseError.
FamilyText parse_family_text(const std::string& text);

/// Resolves parameters in the field; throws ParseError or FamilyError.
SetFamily resolve_family(const FieldCtx& f, const FamilyText& t);

struct Evaluation {
  SetFamily family;
  FieldElem closed;
  ProductReport brute;
  std::int64_t closed_cardinality = 0;
  bool match() const {
    return closed == brute.value && closed_cardinality == static_cast<std::int64_t>(brute.cardinality);
  }
};

/// Closed product beside the brute one; A families use 0 when 0 is a member.
Evaluation evaluate(const FieldCtx& f, const SetFamily& fam);

nlohmann::json to_json(const FieldCtx& f, const Evaluation& e);

}  // namespace wilsonff
