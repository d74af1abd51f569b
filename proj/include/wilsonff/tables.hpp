#pragma once

// The four product tables at a fixed q, closed values beside brute-force ones.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wilsonff/closedform.hpp"

namespace wilsonff {

struct TableLine {
  std::string label;
  std::optional<ProjTau> tau;
  FieldElem x, l;                // (k, l) for S tables, (j, l) for T tables
  std::optional<FieldElem> a;    // a1, a2 or a3 behind c in tables 3 and 4
  std::optional<FieldElem> c;
  std::optional<Quadruple> closed, brute;
  std::string skip_reason;       // nonempty when the row does not apply at this q

  bool skipped() const { return !skip_reason.empty(); }
  bool match() const { return skipped() || closed == brute; }
};

struct Table {
  int id = 1;
  bool s_products = true;  // tables 1 and 3
  std::vector<TableLine> lines;

  bool all_match() const {
    for (const auto& line : lines) {
      if (!line.match()) return false;
    }
    return true;
  }
};

/// Table 1..4 at this field. Rows tied to a class of tau show its smallest
/// member, or every member when `every_tau` is set.
Table emit_table(const FieldCtx& f, int id, bool every_tau = false);

std::string render(const FieldCtx& f, const Table& t);
nlohmann::json to_json(const FieldCtx& f, const Table& t);

}  // namespace wilsonff
