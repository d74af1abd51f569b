#include "wilsonff/tables.hpp"

#include <algorithm>
#include <sstream>

namespace wilsonff {
namespace {

struct RowPlan {
  TableRow row;
  std::string label;
  int nu = 0;  // BothSquares split by the class of 1 + 1/sqrt(tau+1)
};

std::vector<FieldElem> sorted_elements(const FieldCtx& f) {
  std::vector<FieldElem> all;
  for (std::uint32_t i = 0; i < f.q(); ++i) all.push_back(f.element(i));
  std::sort(all.begin(), all.end(), [&](FieldElem a, FieldElem b) { return f.less(a, b); });
  return all;
}

bool is_special(const FieldCtx& f, FieldElem t) {
  if (t == f.zero() || t == f.one() || t == f.from_int(-1)) return true;
  if (f.p() == 3) return false;
  const FieldElem three = f.from_int(3);
  return t == three || t == f.inv(three);
}

bool in_class(const FieldCtx& f, const RowPlan& plan, FieldElem t, bool skip_special) {
  if (t == f.zero() || t == f.from_int(-1)) return false;
  if (skip_special && is_special(f, t)) return false;
  const NormalizedFrame fr = normalized_frame(f, ProjTau::finite(t));
  const auto rc = root_case_for(f, fr);
  switch (plan.row) {
    case TableRow::BothSquares: return !rc && both_squares_class(f, fr) == plan.nu;
    case TableRow::SquareNonsquare: return rc == RootCase::a1;
    case TableRow::NonsquareSquare: return rc == RootCase::a2;
    case TableRow::BothNonsquares: return rc == RootCase::a3;
    default: return false;
  }
}

TableLine make_line(const FieldCtx& f, const RowPlan& plan, ProjTau tau, bool s_products) {
  TableLine line;
  line.label = plan.label;
  line.tau = tau;
  const NormalizedFrame fr = normalized_frame(f, tau);
  line.x = s_products ? fr.k : fr.j;
  line.l = fr.l;
  const int two = f.legendre(f.from_int(2));
  std::optional<RootCase> rc;
  switch (plan.row) {
    case TableRow::SquareNonsquare: rc = RootCase::a1; break;
    case TableRow::NonsquareSquare: rc = RootCase::a2; break;
    case TableRow::BothNonsquares: rc = RootCase::a3; break;
    default: break;
  }
  if (rc) {
    const DetRoot d = det_sqrt(f, fr, *rc);
    line.a = d.value;
    line.c = *rc == RootCase::a3 ? d.root : f.mul(f.from_int(two), d.root);
  }
  Quadruple closed, brute;
  for (SignPair s : kAllSignPairs) {
    const SignPair ts = s_products ? SignPair{f.eps() * s.e1, s.e2} : s;
    closed[s] = prod_T_row(f, fr, plan.row, ts);
    const SetFamily fam = s_products ? SetFamily::S2(fr.k, fr.l, s) : SetFamily::T(fr.j, fr.l, s);
    brute[s] = brute_product(f, fam, 0).value;
  }
  line.closed = closed;
  line.brute = brute;
  return line;
}

TableLine skipped_line(const std::string& label, const std::string& reason) {
  TableLine line;
  line.label = label;
  line.skip_reason = reason;
  return line;
}

}  // namespace

Table emit_table(const FieldCtx& f, int id, bool every_tau) {
  if (id < 1 || id > 4) throw std::invalid_argument("table id must be 1, 2, 3 or 4");
  Table t;
  t.id = id;
  t.s_products = id == 1 || id == 3;
  const bool special = id <= 2;

  if (special) {
    t.lines.push_back(make_line(f, {TableRow::TauZero, "tau=0"}, ProjTau::finite(f.zero()), t.s_products));
    t.lines.push_back(make_line(f, {TableRow::TauInfinity, "tau=inf"}, ProjTau::infinity(), t.s_products));
    t.lines.push_back(make_line(f, {TableRow::TauOne, "tau=1"}, ProjTau::finite(f.one()), t.s_products));
    if (f.p() == 3) {
      t.lines.push_back(skipped_line("tau=3", "p = 3"));
      t.lines.push_back(skipped_line("tau=1/3", "p = 3"));
    } else {
      const FieldElem three = f.from_int(3);
      t.lines.push_back(make_line(f, {TableRow::TauThree, "tau=3"}, ProjTau::finite(three), t.s_products));
      t.lines.push_back(
          make_line(f, {TableRow::TauThird, "tau=1/3"}, ProjTau::finite(f.inv(three)), t.s_products));
    }
  }

  std::vector<RowPlan> plans;
  if (special) {
    plans = {{TableRow::BothSquares, "tau,tau+1 squares; 1+-1/sqrt(tau+1) squares", 1},
             {TableRow::BothSquares, "tau,tau+1 squares; 1+-1/sqrt(tau+1) nonsquares", -1}};
  } else {
    plans = {{TableRow::SquareNonsquare, row_name(TableRow::SquareNonsquare)},
             {TableRow::NonsquareSquare, row_name(TableRow::NonsquareSquare)},
             {TableRow::BothNonsquares, row_name(TableRow::BothNonsquares)}};
  }
  const auto elements = sorted_elements(f);
  for (const auto& plan : plans) {
    bool any = false;
    for (FieldElem e : elements) {
      if (!in_class(f, plan, e, special)) continue;
      t.lines.push_back(make_line(f, plan, ProjTau::finite(e), t.s_products));
      any = true;
      if (!every_tau) break;
    }
    if (!any) t.lines.push_back(skipped_line(plan.label, "no tau of this class"));
  }
  return t;
}

std::string render(const FieldCtx& f, const Table& t) {
  std::ostringstream os;
  const char* x = t.s_products ? "k" : "j";
  os << "Table " << t.id << "  q=" << f.q() << "  prod " << (t.s_products ? "S_{k,l}" : "T_{j,l}")
     << "  closed | brute\n";
  for (const auto& line : t.lines) {
    os << line.label;
    if (line.skipped()) {
      os << "  skipped (" << line.skip_reason << ")\n";
      continue;
    }
    os << "  tau=" << to_string(f, *line.tau) << " " << x << "=" << f.to_string(line.x)
       << " l=" << f.to_string(line.l);
    if (line.a) os << " a=" << f.to_string(*line.a);
    if (line.c) os << " c=" << f.to_string(*line.c);
    os << "  ";
    for (SignPair s : kAllSignPairs) os << to_string(s) << ":" << f.to_string((*line.closed)[s]) << " ";
    os << "|";
    for (SignPair s : kAllSignPairs) os << " " << f.to_string((*line.brute)[s]);
    os << (line.match() ? "  ok" : "  MISMATCH") << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const FieldCtx& f, const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& line : t.lines) {
    nlohmann::json r{{"row", line.label}};
    if (line.skipped()) {
      r["skipped"] = line.skip_reason;
    } else {
      r["tau"] = to_string(f, *line.tau);
      r[t.s_products ? "k" : "j"] = f.to_string(line.x);
      r["l"] = f.to_string(line.l);
      if (line.a) r["a"] = f.to_string(*line.a);
      if (line.c) r["c"] = f.to_string(*line.c);
      for (SignPair s : kAllSignPairs) {
        r["closed"][to_string(s)] = f.to_string((*line.closed)[s]);
        r["brute"][to_string(s)] = f.to_string((*line.brute)[s]);
      }
      r["match"] = line.match();
    }
    rows.push_back(r);
  }
  return {{"table", t.id}, {"q", f.q()}, {"rows", rows}};
}

}  // namespace wilsonff
