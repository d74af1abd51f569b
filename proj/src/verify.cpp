#include "wilsonff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "wilsonff/charsets.hpp"
#include "wilsonff/closedform.hpp"
#include "wilsonff/correspondence.hpp"
#include "wilsonff/dickson.hpp"
#include "wilsonff/reciprocity.hpp"

namespace wilsonff {

void to_json(nlohmann::json& j, const Check& c) {
  j = nlohmann::json{{"q", c.q},           {"suite", c.suite},   {"case", c.name},
                     {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}};
}

void from_json(const nlohmann::json& j, Check& c) {
  j.at("q").get_to(c.q);
  j.at("suite").get_to(c.suite);
  j.at("case").get_to(c.name);
  j.at("expected").get_to(c.expected);
  j.at("actual").get_to(c.actual);
  j.at("ok").get_to(c.ok);
}

namespace {

constexpr std::size_t kMaxReportedFailures = 20;
constexpr std::uint32_t kFullCardinalityLimit = 125;
constexpr int kRandomPairs = 20;

class Collector {
 public:
  Collector(const FieldCtx& f, std::string suite) : f_(f), suite_(std::move(suite)) {}

  void add(std::string name, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    out_.push_back({f_.q(), suite_, std::move(name), std::move(expected), std::move(actual), ok});
  }
  void add(std::string name, std::string expected, std::string actual, bool ok) {
    out_.push_back({f_.q(), suite_, std::move(name), std::move(expected), std::move(actual), ok});
  }
  std::vector<Check> take() { return std::move(out_); }

  // Many small comparisons folded into one line, plus the first few mismatches.
  class Group {
   public:
    Group(Collector& c, std::string name) : c_(c), name_(std::move(name)) {}
    void add(const std::string& detail, const std::string& expected, const std::string& actual) {
      ++total_;
      if (expected == actual) {
        ++good_;
      } else if (total_ - good_ <= kMaxReportedFailures) {
        c_.add(name_ + ": " + detail, expected, actual, false);
      }
    }
    void flag(const std::string& detail, bool ok) { add(detail, "true", ok ? "true" : "false"); }
    ~Group() { c_.add(name_, std::to_string(total_), std::to_string(good_), total_ == good_); }

   private:
    Collector& c_;
    std::string name_;
    std::uint64_t total_ = 0, good_ = 0;
  };

 private:
  const FieldCtx& f_;
  std::string suite_;
  std::vector<Check> out_;
};

std::string quad(const FieldCtx& f, const std::array<FieldElem, 4>& v) {
  return f.to_string(v[0]) + " " + f.to_string(v[1]) + " " + f.to_string(v[2]) + " " + f.to_string(v[3]);
}

std::array<FieldElem, 4> brute_quad(const FieldCtx& f, FamilyKind kind, FieldElem x, FieldElem y) {
  std::array<FieldElem, 4> v;
  for (int i = 0; i < 4; ++i) {
    const SignPair s = kAllSignPairs[i];
    const SetFamily fam = kind == FamilyKind::T ? SetFamily::T(x, y, s) : SetFamily::S2(x, y, s);
    v[i] = brute_product(f, fam, 0).value;
  }
  return v;
}

std::vector<FieldElem> sorted_elements(const FieldCtx& f) {
  std::vector<FieldElem> all;
  for (std::uint32_t i = 0; i < f.q(); ++i) all.push_back(f.element(i));
  std::sort(all.begin(), all.end(), [&](FieldElem a, FieldElem b) { return f.less(a, b); });
  return all;
}

std::mt19937_64 rng_for(const FieldCtx& f, std::uint64_t salt) {
  return std::mt19937_64(f.q() * 1000003ULL + salt);
}

FieldElem random_element(const FieldCtx& f, std::mt19937_64& rng) {
  return f.element(static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, f.q() - 1)(rng)));
}

void suite_tables(const FieldCtx& f, Collector& c) {
  const FieldElem minus_one = f.from_int(-1);
  std::vector<ProjTau> taus{ProjTau::infinity()};
  for (FieldElem t : sorted_elements(f)) {
    if (t != minus_one) taus.push_back(ProjTau::finite(t));
  }
  for (const auto& tau : taus) {
    const NormalizedFrame fr = normalized_frame(f, tau);
    const std::string label = to_string(f, tau) + " " + row_name(dispatch_row(f, fr));
    std::array<FieldElem, 4> t_closed, s_closed;
    for (int i = 0; i < 4; ++i) {
      t_closed[i] = prod_T_closed(f, fr, kAllSignPairs[i]);
      s_closed[i] = prod_S_pair(f, fr.k, fr.l, kAllSignPairs[i]);
    }
    c.add("T tau=" + label, quad(f, t_closed), quad(f, brute_quad(f, FamilyKind::T, fr.j, fr.l)));
    c.add("S tau=" + label, quad(f, s_closed), quad(f, brute_quad(f, FamilyKind::S2, fr.k, fr.l)));
  }
  Collector::Group singles(c, "S_k^+ and S_k^- for every k");
  for (FieldElem k : sorted_elements(f)) {
    for (int sign : {1, -1}) {
      singles.add("k=" + f.to_string(k) + " " + sign_char(sign), f.to_string(prod_S_single(f, k, sign)),
                  f.to_string(brute_product(f, SetFamily::S1(k, sign), 0).value));
    }
  }
}

void suite_rescaling(const FieldCtx& f, Collector& c) {
  auto rng = rng_for(f, 1);
  for (int i = 0; i < kRandomPairs; ++i) {
    FieldElem j, l;
    do {
      j = random_element(f, rng);
      l = random_element(f, rng);
    } while (f.add(j, l) == f.zero());
    const std::string jl = "j'=" + f.to_string(j) + " l'=" + f.to_string(l);
    std::array<FieldElem, 4> closed;
    for (int s = 0; s < 4; ++s) closed[s] = rescale_T(f, j, l, kAllSignPairs[s]);
    const auto brute = brute_quad(f, FamilyKind::T, j, l);
    c.add("rescale " + jl, quad(f, closed), quad(f, brute));
    for (int mu : {1, -1}) {
      c.add("swap " + jl + " mu=" + sign_char(mu), f.to_string(swap_T(f, j, l, mu)),
            f.to_string(brute_product(f, SetFamily::T(l, j, {mu, mu}), 0).value));
    }
    // The same pair read as (k, l) = (-j', l') for the S relations.
    const FieldElem k = f.neg(j);
    const auto s_brute = brute_quad(f, FamilyKind::S2, k, l);
    const Quadruple solved = quadruple_from_one(f, k, l, kAllSignPairs[0], s_brute[0]);
    c.add("solver k=" + f.to_string(k) + " l=" + f.to_string(l), quad(f, s_brute), quad(f, solved.v));
  }
}

void suite_dickson(const FieldCtx& f, Collector& c) {
  const int eps = f.eps();
  const std::int64_t m = f.m();
  c.add("D_m = prod over A_{-2,2}^{-eps,-}", to_string(f, vanishing_poly(f, -eps, -1)),
        to_string(f, dickson_first(f, m)));
  c.add("E_{m-1} = prod over A_{-2,2}^{eps,+}", to_string(f, vanishing_poly(f, eps, 1)),
        to_string(f, dickson_second(f, m - 1)));
}

void suite_cardinality(const FieldCtx& f, Collector& c) {
  const std::int64_t q = f.q();
  const std::array<std::int64_t, 4> floors{(q - 3) / 4, (q + 1) / 4, (q - 1) / 4, (q - 1) / 4};
  std::uint64_t total = 2;
  std::map<std::uint32_t, int> seen;
  for (int i = 0; i < 4; ++i) {
    const SignPair s = kAllSignPairs[i];
    const SetFamily fam = SetFamily::A(f.zero(), f.one(), s);
    const auto members = enumerate_family(f, fam);
    c.add("|A_{0,1}^" + to_string(s) + "| floor formula", std::to_string(floors[i]), std::to_string(members.size()));
    c.add("|A_{0,1}^" + to_string(s) + "| closed", std::to_string(card_closed(f, fam)), std::to_string(members.size()));
    total += members.size();
    for (FieldElem a : members) ++seen[a.code];
  }
  bool disjoint = seen.count(0) == 0 && seen.count(f.from_int(-1).code) == 0;
  for (const auto& [code, n] : seen) disjoint &= n == 1;
  c.add("F_q = {0} + {-1} + four A_{0,1} classes", std::to_string(q), std::to_string(total), disjoint && total == std::uint64_t(q));

  Collector::Group g(c, f.q() <= kFullCardinalityLimit ? "card_closed for every family" : "card_closed on random families");
  auto one = [&](const SetFamily& fam) {
    g.add(to_string(f, fam), std::to_string(card_closed(f, fam)), std::to_string(enumerate_family(f, fam).size()));
  };
  for (FieldElem k : sorted_elements(f)) {
    one(SetFamily::S1(k, 1));
    one(SetFamily::S1(k, -1));
  }
  auto pair_families = [&](FieldElem x, FieldElem y) {
    for (SignPair s : kAllSignPairs) {
      if (x != y) {
        one(SetFamily::A(x, y, s));
        one(SetFamily::S2(x, y, s));
      }
      if (f.add(x, y) != f.zero()) one(SetFamily::T(x, y, s));
    }
  };
  if (f.q() <= kFullCardinalityLimit) {
    const auto all = sorted_elements(f);
    for (FieldElem x : all) {
      for (FieldElem y : all) pair_families(x, y);
    }
  } else {
    auto rng = rng_for(f, 2);
    for (int i = 0; i < kRandomPairs; ++i) pair_families(random_element(f, rng), random_element(f, rng));
  }
}

void suite_correspondence(const FieldCtx& f, Collector& c) {
  const FieldElem minus_one = f.from_int(-1);
  const auto elements = sorted_elements(f);
  {
    Collector::Group g(c, "tau -> orbit -> tau");
    for (FieldElem t : elements) {
      g.add("tau=" + f.to_string(t), f.to_string(t), f.to_string(tau_of_orbit(f, v_of_tau(f, t))));
    }
  }
  const auto q = static_cast<std::uint64_t>(f.q());
  std::vector<Ext2Elem> units = roots_of_unity(f, 2 * q - 2);
  for (const auto& v : roots_of_unity(f, 2 * q + 2)) units.push_back(v);
  std::set<std::pair<std::uint32_t, std::uint32_t>> reps;
  {
    Collector::Group g(c, "orbit -> tau -> orbit");
    for (const auto& v : units) {
      const Orbit o = orbit_of(f, v);
      reps.insert({o.rep.lo.code, o.rep.hi.code});
      g.add("v=" + f.to_string(v), f.to_string(o.rep), f.to_string(orbit_of_tau(f, tau_of_orbit(f, v)).rep));
    }
  }
  c.add("number of orbits", std::to_string(q), std::to_string(reps.size()));
  {
    Collector::Group g(c, "v^(q - e1 e2) = e2 for v = sqrt(tau+1) + sqrt(tau)");
    Collector::Group w(c, "w = (2 + i(v - 1/v))/(v + 1/v) has a branch witness");
    Collector::Group r(c, "u^m and square classes of 2 +- r when tau, tau+1 are squares");
    for (FieldElem t : elements) {
      if (t == f.zero() || t == minus_one) continue;
      const std::string name = "tau=" + f.to_string(t);
      const TauClass tc = classify_tau(f, t);
      g.flag(name, tc.order_test);
      w.flag(name, vw_relation(f, t).has_value());
      if (tc.signs.e1 == 1 && tc.signs.e2 == 1) r.flag(name, ru2_check(f, t).holds());
    }
  }
  for (SignPair s : kAllSignPairs) {
    const SetFamily fam = SetFamily::A(f.zero(), f.one(), s);
    c.add("orbit count = |A_{0,1}^" + to_string(s) + "|", std::to_string(card_closed(f, fam)),
          std::to_string(orbit_count_card(f, s.e1, s.e2)));
    // A_{0,1}^{e1,e2} = {(v - 1/v)^2/4 : v^(q - e1 e2) = e2, v^4 != 1}.
    const auto n = static_cast<std::int64_t>(q) - s.e1 * s.e2;
    const Ext2Elem target = f.lift(f.from_int(s.e2));
    const Ext2Elem one = f.lift(f.one());
    std::set<std::uint32_t> image;
    for (const auto& v : roots_of_unity(f, static_cast<std::uint64_t>(2 * n))) {
      if (f.pow(v, n) == target && f.pow(v, 4) != one) image.insert(tau_of_orbit(f, v).code);
    }
    std::set<std::uint32_t> direct;
    for (FieldElem a : enumerate_family(f, fam)) direct.insert(a.code);
    c.add("A_{0,1}^" + to_string(s) + " as an image of roots of unity", std::to_string(direct.size()),
          std::to_string(image.size()), image == direct);
  }
}

std::string bits(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

void suite_reciprocity(const FieldCtx& f, Collector& c) {
  const auto sc = sqrt2_tower_class(f);
  if (sc.sqrt2_in_field) {
    c.add("(2 +- sqrt2 | q)", std::to_string(sc.expected), std::to_string(sc.class_2_plus_sqrt2),
          sc.roots_agree && sc.expected == sc.class_2_plus_sqrt2);
    if (sc.class_next_level || sc.expected_next != 0) {
      c.add("(2 +- sqrt(2 + sqrt2) | q)", std::to_string(sc.expected_next),
            sc.class_next_level ? std::to_string(*sc.class_next_level) : "none", sc.ok);
    }
  }
  for (const auto& spec : {TowerSpec::sqrt2(5), TowerSpec::sqrt3(5), TowerSpec::golden(5)}) {
    if ((2 * spec.k) % f.p() == 0) continue;
    const auto t = radical_tower_membership(f, spec);
    c.add("tower " + base_name(spec) + " levels 0..5", bits(t.criterion), bits(t.member), t.ok());
  }
  for (unsigned d : {8u, 10u, 12u}) {
    if (d % f.p() == 0) continue;
    const auto a = special_angle_bracket(f, d);
    c.add("<zeta_" + std::to_string(d) + "> in F_q", a.criterion ? "true" : "false",
          a.value ? "true" : "false", a.ok());
  }
  for (const auto& spec : {TowerSpec::sqrt2(0), TowerSpec::sqrt3(0), TowerSpec::golden(0)}) {
    const auto r = prod_T_quadratic_irrational(f, spec);
    for (const auto& ic : r.cases) {
      c.add("prod T_{2-b0,2+b0}^" + to_string(ic.signs) + " " + base_name(spec) + " b0=" + f.to_string(ic.b0),
            f.to_string(ic.closed), f.to_string(ic.brute), ic.ok);
    }
  }
}

void suite_intro(const FieldCtx& f, Collector& c) {
  const FieldElem four = f.from_int(4), one = f.one(), three = f.from_int(3);
  FieldElem p1 = one, p2 = one, p3 = one;
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const FieldElem a = f.element(i);
    if (f.legendre(a) == -1 && f.legendre(f.sub(four, a)) == -1) p1 = f.mul(p1, a);
    if (f.legendre(f.neg(a)) == -1 && f.legendre(f.add(four, a)) == -1) p2 = f.mul(p2, a);
    if (f.legendre(f.sub(one, a)) == -1 && f.legendre(f.add(three, a)) == -1) p3 = f.mul(p3, a);
  }
  const std::int64_t q = f.q();
  const int two = f.legendre(f.from_int(2));
  c.add("prod {a : a, 4-a nonsquares}", f.to_string(f.from_int(2)), f.to_string(p1));
  c.add("prod {a : -a, 4+a nonsquares}", f.to_string(f.from_int(2 * two)), f.to_string(p2));
  const bool pm1 = q % 12 == 1 || q % 12 == 11;
  c.add("prod {a : 1-a, 3+a nonsquares}", f.to_string(f.from_int(pm1 ? 2 : -1)), f.to_string(p3));
}

}  // namespace

std::vector<std::pair<std::uint32_t, unsigned>> prime_powers(std::uint64_t qmin, std::uint64_t qmax,
                                                             unsigned max_degree) {
  std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, unsigned>>> found;
  for (std::uint64_t p = 3; p <= qmax; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned n = 1; n <= max_degree && q <= qmax; ++n, q *= p) {
      if (q >= qmin) found.push_back({q, {static_cast<std::uint32_t>(p), n}});
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (const auto& e : found) out.push_back(e.second);
  return out;
}

std::vector<Check> run_suite(const FieldCtx& f, const std::string& suite) {
  Collector c(f, suite);
  if (suite == "tables") {
    suite_tables(f, c);
  } else if (suite == "rescaling") {
    suite_rescaling(f, c);
  } else if (suite == "dickson") {
    suite_dickson(f, c);
  } else if (suite == "cardinality") {
    suite_cardinality(f, c);
  } else if (suite == "correspondence") {
    suite_correspondence(f, c);
  } else if (suite == "reciprocity") {
    suite_reciprocity(f, c);
  } else if (suite == "intro") {
    suite_intro(f, c);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return c.take();
}

void validate(const SweepConfig& cfg) {
  if (cfg.qmin < 3) throw std::invalid_argument("qmin must be at least 3");
  if (cfg.suites.empty()) throw std::invalid_argument("no suites selected");
  for (const auto& s : cfg.suites) {
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end()) {
      throw std::invalid_argument("unknown suite '" + s + "'");
    }
  }
  if (cfg.max_degree == 0) throw std::invalid_argument("max degree must be positive");
}

SweepSummary run_verify(const SweepConfig& cfg, std::ostream& out) {
  validate(cfg);
  const auto fields = prime_powers(cfg.qmin, cfg.qmax, cfg.max_degree);
  SweepSummary summary;
  summary.fields = fields.size();
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      const auto f = FieldCtx::make(fields[i].first, fields[i].second);
      std::string block;
      std::uint64_t checks = 0, failures = 0;
      for (const auto& suite : cfg.suites) {
        for (const auto& check : run_suite(f, suite)) {
          block += nlohmann::json(check).dump();
          block += '\n';
          ++checks;
          if (!check.ok) ++failures;
        }
      }
      std::lock_guard lock(mu);
      out << block;
      summary.checks += checks;
      summary.failures += failures;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(fields.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  out.flush();
  return summary;
}

}  // namespace wilsonff
