#include "wilsonff/evaluate.hpp"

#include <cctype>
#include <charconv>

#include "wilsonff/closedform.hpp"

namespace wilsonff {
namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s, std::size_t begin, std::size_t end, bool commas) {
  std::vector<Token> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && (std::isspace(static_cast<unsigned char>(s[i])) || (commas && s[i] == ','))) ++i;
    if (i >= end) break;
    const std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(s[i])) && !(commas && s[i] == ',')) ++i;
    out.push_back({s.substr(start, i - start), start});
  }
  return out;
}

std::uint64_t parse_uint(const Token& t, std::size_t offset) {
  const std::string_view v = std::string_view(t.text).substr(offset);
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ParseError("expected a positive integer in '" + t.text + "'", t.pos + offset);
  }
  return x;
}

int sign_of(char c, std::size_t pos) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw ParseError(std::string("expected '+' or '-', got '") + c + "'", pos);
}

}  // namespace

FamilyText parse_family_text(const std::string& text) {
  const std::size_t at = text.find('@');
  const std::size_t head_end = at == std::string::npos ? text.size() : at;
  const auto head = tokenize(text, 0, head_end, false);
  if (head.empty()) throw ParseError("empty family spec", 0);

  FamilyText out;
  const std::string& kind = head[0].text;
  std::size_t arity;
  if (kind == "A") {
    out.kind = FamilyKind::A;
    arity = 2;
  } else if (kind == "S1") {
    out.kind = FamilyKind::S1;
    arity = 1;
  } else if (kind == "S2") {
    out.kind = FamilyKind::S2;
    arity = 2;
  } else if (kind == "S") {
    if (head.size() < 3) throw ParseError("incomplete family spec", text.size());
    arity = head.size() - 2;
    out.kind = arity == 1 ? FamilyKind::S1 : FamilyKind::S2;
  } else if (kind == "T") {
    out.kind = FamilyKind::T;
    arity = 2;
  } else {
    throw ParseError("unknown family '" + kind + "' (expected A, S1, S2 or T)", head[0].pos);
  }
  if (head.size() < arity + 2) throw ParseError("missing parameters or signs", head_end);
  if (head.size() > arity + 2) throw ParseError("unexpected token '" + head[arity + 2].text + "'", head[arity + 2].pos);
  for (std::size_t i = 1; i <= arity; ++i) {
    out.params.push_back(head[i].text);
    out.param_pos.push_back(head[i].pos);
  }
  const Token& signs = head[arity + 1];
  const std::size_t want = out.kind == FamilyKind::S1 ? 1 : 2;
  if (signs.text.size() != want) {
    throw ParseError("expected " + std::to_string(want) + " sign character(s), got '" + signs.text + "'", signs.pos);
  }
  out.signs.e1 = sign_of(signs.text[0], signs.pos);
  out.signs.e2 = want == 2 ? sign_of(signs.text[1], signs.pos + 1) : 1;

  if (at != std::string::npos) {
    const auto tail = tokenize(text, at + 1, text.size(), true);
    if (tail.empty()) throw ParseError("expected p=... after '@'", text.size());
    for (const auto& t : tail) {
      if (t.text.rfind("p=", 0) == 0) {
        out.p = static_cast<std::uint32_t>(parse_uint(t, 2));
      } else if (t.text.rfind("n=", 0) == 0) {
        out.n = static_cast<unsigned>(parse_uint(t, 2));
      } else if (t.text.rfind("q=", 0) == 0) {
        const auto pp = as_prime_power(parse_uint(t, 2));
        if (!pp) throw ParseError("q is not a prime power", t.pos + 2);
        out.p = static_cast<std::uint32_t>(pp->first);
        out.n = pp->second;
      } else {
        throw ParseError("unknown field parameter '" + t.text + "' (expected p=, n= or q=)", t.pos);
      }
    }
  }
  return out;
}

SetFamily resolve_family(const FieldCtx& f, const FamilyText& t) {
  std::vector<FieldElem> v;
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    try {
      v.push_back(f.parse(t.params[i]));
    } catch (const ParseError& e) {
      throw ParseError("bad field element '" + t.params[i] + "'", t.param_pos[i] + e.position());
    }
  }
  SetFamily fam;
  switch (t.kind) {
    case FamilyKind::A: fam = SetFamily::A(v[0], v[1], t.signs); break;
    case FamilyKind::S1: fam = SetFamily::S1(v[0], t.signs.e1); break;
    case FamilyKind::S2: fam = SetFamily::S2(v[0], v[1], t.signs); break;
    case FamilyKind::T: fam = SetFamily::T(v[0], v[1], t.signs); break;
  }
  validate(f, fam);
  return fam;
}

Evaluation evaluate(const FieldCtx& f, const SetFamily& fam) {
  validate(f, fam);
  Evaluation e;
  e.family = fam;
  switch (fam.kind) {
    case FamilyKind::S1:
      e.closed = prod_S_single(f, fam.x, fam.signs.e1);
      break;
    case FamilyKind::S2:
      e.closed = prod_S_pair(f, fam.x, fam.y, fam.signs);
      break;
    case FamilyKind::A: {
      const bool has_zero = f.legendre(fam.x) == fam.signs.e1 && f.legendre(fam.y) == fam.signs.e2;
      e.closed = has_zero ? f.zero() : prod_S_pair(f, fam.x, fam.y, fam.signs);
      break;
    }
    case FamilyKind::T:
      e.closed = rescale_T(f, fam.x, fam.y, fam.signs);
      break;
  }
  e.brute = brute_product(f, fam);
  e.closed_cardinality = card_closed(f, fam);
  return e;
}

nlohmann::json to_json(const FieldCtx& f, const Evaluation& e) {
  nlohmann::json j = report_row(f, e.family, e.brute);
  j["closed"] = f.to_string(e.closed);
  j["brute"] = f.to_string(e.brute.value);
  j["closed_cardinality"] = e.closed_cardinality;
  j["match"] = e.match();
  return j;
}

}  // namespace wilsonff
