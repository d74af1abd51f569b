#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "wilsonff/charsets.hpp"
#include "wilsonff/evaluate.hpp"
#include "wilsonff/tables.hpp"
#include "wilsonff/verify.hpp"

using namespace wilsonff;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void print_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

int cmd_verify(const SweepConfig& cfg, const std::string& out_path) {
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  const SweepSummary s = run_verify(cfg, out);
  if (file.is_open() && !file) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return kUsage;
  }
  std::cerr << "fields " << s.fields << "  checks " << s.checks << "  failures " << s.failures << "\n";
  return s.ok() ? kOk : kMismatch;
}

int cmd_eval(const std::string& text, std::optional<std::uint32_t> p, std::optional<unsigned> n, bool json) {
  FamilyText ft;
  try {
    ft = parse_family_text(text);
  } catch (const ParseError& e) {
    print_parse_error(text, e);
    return kUsage;
  }
  if (p && ft.p && *p != *ft.p) {
    std::cerr << "error: --p " << *p << " conflicts with p=" << *ft.p << " in the spec\n";
    return kUsage;
  }
  const auto pp = p ? p : ft.p;
  const unsigned nn = n.value_or(ft.n.value_or(1));
  if (!pp) {
    std::cerr << "error: no characteristic; add '@ p=...' or --p\n";
    return kUsage;
  }
  try {
    const FieldCtx f = FieldCtx::make(*pp, nn);
    const SetFamily fam = resolve_family(f, ft);
    const Evaluation e = evaluate(f, fam);
    if (json) {
      std::cout << to_json(f, e).dump() << "\n";
    } else {
      std::cout << to_string(f, fam) << "  q=" << f.q() << "\n"
                << "closed       " << f.to_string(e.closed) << "\n"
                << "brute        " << f.to_string(e.brute.value) << "\n"
                << "cardinality  " << e.brute.cardinality << " (closed " << e.closed_cardinality << ")\n"
                << "match        " << (e.match() ? "yes" : "NO") << "\n";
    }
    return e.match() ? kOk : kMismatch;
  } catch (const ParseError& e) {
    print_parse_error(text, e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}

int cmd_table(int id, std::uint32_t p, unsigned n, bool all, bool json) {
  try {
    const FieldCtx f = FieldCtx::make(p, n);
    const Table t = emit_table(f, id, all);
    if (json) {
      std::cout << to_json(f, t).dump() << "\n";
    } else {
      std::cout << render(f, t);
    }
    return t.all_match() ? kOk : kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson-type products over finite fields"};
  app.require_subcommand(1);

  SweepConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Sweep prime powers and check every closed form against brute force");
  verify->add_option("--qmin", cfg.qmin, "Smallest q")->capture_default_str();
  verify->add_option("--qmax", cfg.qmax, "Largest q")->capture_default_str();
  verify->add_option("--maxdeg", cfg.max_degree, "Largest extension degree n")->capture_default_str();
  verify->add_option("--suites", cfg.suites, "Comma-separated suites")->delimiter(',')->capture_default_str();
  verify->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  verify->add_option("--out", out_path, "Report file (JSON lines); stdout when omitted");

  std::string spec;
  std::optional<std::uint32_t> eval_p;
  std::optional<unsigned> eval_n;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate one family, e.g. \"T 1 3 -- @ p=13\"");
  eval->add_option("spec", spec, "Family spec")->required();
  eval->add_option("--p", eval_p, "Characteristic");
  eval->add_option("--n", eval_n, "Degree");
  eval->add_flag("--json", eval_json, "Print one JSON object");

  int table_id = 0;
  std::uint32_t table_p = 0;
  unsigned table_n = 1;
  bool table_all = false, table_json = false;
  auto* table = app.add_subcommand("table", "Print table 1-4 at q = p^n");
  table->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 4));
  table->add_option("--p", table_p, "Characteristic")->required();
  table->add_option("--n", table_n, "Degree")->capture_default_str();
  table->add_flag("--all", table_all, "Every tau of each class instead of the smallest");
  table->add_flag("--json", table_json, "Print one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*verify) return cmd_verify(cfg, out_path);
  if (*eval) return cmd_eval(spec, eval_p, eval_n, eval_json);
  return cmd_table(table_id, table_p, table_n, table_all, table_json);
}
