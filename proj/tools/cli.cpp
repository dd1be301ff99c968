#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "sylow/composite.hpp"
#include "sylow/derived.hpp"
#include "sylow/report.hpp"
#include "sylow/selftest.hpp"
#include "sylow/sylow2.hpp"

namespace sylow::cli {

namespace {

/// Argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SymmetricKind parse_kind(const std::string& s) {
  if (s == "S") return SymmetricKind::S;
  if (s == "A") return SymmetricKind::A;
  throw UsageError("kind must be S or A");
}

std::string format_tuple(const BlockLayout& layout, const SubdirectElement& e) {
  if (e.factors.size() == 1 && layout.blocks.front().exponent > 0 && layout.blocks.size() == 1)
    return format_portrait(e.factors.front());
  std::string s = "(";
  for (std::size_t i = 0; i < e.factors.size(); ++i) s += (i ? ", " : "") + format_portrait(e.factors[i]);
  return s + ")";
}

void print_element(std::ostream& out, const Portrait& g) {
  out << format_portrait(g) << '\n' << format_cycles(leaf_permutation(g)) << '\n';
}

int cmd_order(const std::string& kind_text, std::size_t n, bool decimal, std::ostream& out) {
  const auto kind = parse_kind(kind_text);
  if (n < 1) throw UsageError("n must be positive");
  const std::size_t v = kind == SymmetricKind::S ? order_syl2_S_log2(n) : order_syl2_A_log2(n);
  out << "2^" << v;
  if (decimal) out << " = " << pow2(static_cast<unsigned>(v));
  out << '\n';
  return kOk;
}

int cmd_rank(const std::string& kind_text, std::size_t n, std::ostream& out) {
  const auto kind = parse_kind(kind_text);
  if (n < 2) throw UsageError("n must be at least 2");
  out << (kind == SymmetricKind::S ? rank_syl2_S(n) : rank_syl2_A(n)) << '\n';
  return kOk;
}

int cmd_gens(const std::string& kind_text, std::size_t n, const std::string& format, std::ostream& out) {
  const auto kind = parse_kind(kind_text);
  if (n < 2) throw UsageError("n must be at least 2");
  if (format != "portrait" && format != "cycles") throw UsageError("format must be portrait or cycles");
  if (n > 0xFFFF) throw UsageError("n too large");
  const auto layout = block_layout(n);
  const auto tuples = kind == SymmetricKind::S ? build_tuples_S(n) : build_tuples_A(n);
  for (const auto& t : tuples)
    out << (format == "portrait" ? format_tuple(layout, t) : format_cycles(to_permutation(layout, t))) << '\n';
  return kOk;
}

int cmd_member(const std::string& predicate, const std::string& text, std::ostream& out) {
  const auto g = parse_portrait(text);
  auto needs_depth2 = [&] {
    if (g.depth() < 2) throw UsageError("predicate " + predicate + " requires depth >= 2");
  };
  bool verdict = false;
  if (predicate == "G") {
    needs_depth2();
    verdict = in_G(g);
  } else if (predicate == "W") {
    needs_depth2();
    verdict = in_W(g);
  } else if (predicate == "derived-B") {
    verdict = in_derived_B(g);
  } else if (predicate == "derived-G") {
    needs_depth2();
    verdict = in_derived_G(g);
  } else if (predicate == "frattini-G") {
    needs_depth2();
    verdict = in_G(g) && in_frattini_G(g);
  } else if (predicate == "typeT") {
    needs_depth2();
    verdict = is_type_T(g);
  } else if (predicate == "typeC") {
    needs_depth2();
    verdict = is_type_C(g);
  } else {
    throw UsageError("unknown predicate " + predicate);
  }
  out << (verdict ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_calc(const std::string& op, const std::vector<std::string>& operands, std::ostream& out) {
  std::vector<Portrait> xs;
  for (const auto& s : operands) xs.push_back(parse_portrait(s));
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (xs.size() < lo || xs.size() > hi) throw UsageError("wrong number of operands for " + op);
  };
  for (const auto& x : xs)
    if (x.depth() != xs.front().depth()) throw UsageError("operands have different depths");

  if (op == "mul") {
    arity(2, 64);
    Portrait acc = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) acc = compose(acc, xs[i]);
    print_element(out, acc);
  } else if (op == "inv") {
    arity(1, 1);
    print_element(out, inverse(xs[0]));
  } else if (op == "comm") {
    arity(2, 2);
    print_element(out, commutator(xs[0], xs[1]));
  } else if (op == "abelianize-B") {
    arity(1, 1);
    out << format_parity(abelianization_B(xs[0])) << '\n';
  } else if (op == "abelianize-G") {
    arity(1, 1);
    if (xs[0].depth() < 2 || !in_G(xs[0])) throw UsageError("abelianize-G needs an element of G_k");
    out << format_parity(abelianization_G(xs[0])) << '\n';
  } else {
    throw UsageError("unknown calc operation " + op);
  }
  return kOk;
}

void print_report(std::ostream& out, const VerificationReport& r) {
  for (const auto& c : r.claims)
    out << (c.pass ? "PASS " : "FAIL ") << c.claim << " expected=" << c.expected << " computed=" << c.computed
        << " [" << c.provenance << ", " << std::fixed << std::setprecision(1) << c.wall_ms << " ms]\n";
  out << (r.pass ? "PASS" : "FAIL") << ' ' << to_string(r.kind) << ' ' << r.n << ": order 2^" << r.oracle_order_log2
      << ", rank " << r.oracle_rank << '\n';
}

int cmd_verify(const std::string& kind_text, std::size_t n, const std::string& level_text,
               const std::string& json_path, std::ostream& out) {
  const auto kind = parse_kind(kind_text);
  if (level_text != "quick" && level_text != "full") throw UsageError("level must be quick or full");
  if (n < 2) throw UsageError("n must be at least 2");
  if (n > kOracleDegreeLimit)
    throw UsageError("n = " + std::to_string(n) + " exceeds the oracle limit of " +
                     std::to_string(kOracleDegreeLimit) + "; order, rank and gens give formula-only output");
  const auto report = verify_group(kind, n, level_text == "quick" ? VerifyLevel::Quick : VerifyLevel::Full);
  print_report(out, report);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw UsageError("cannot write " + json_path);
    f << to_json(report).dump(2) << '\n';
  }
  return report.pass ? kOk : kVerificationFailed;
}

int cmd_replay(const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  VerificationReport stored;
  try {
    stored = report_from_json(nlohmann::json::parse(f));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
  const auto differing = replay_report(stored);
  for (const auto& id : differing) out << "DIFF " << id << '\n';
  out << (differing.empty() ? "replay identical" : "replay differs") << '\n';
  return differing.empty() ? kOk : kVerificationFailed;
}

int cmd_selftest(std::uint64_t seed, std::size_t cases, bool inject_fault, std::ostream& out) {
  SelftestOptions options;
  options.seed = seed;
  options.random_cases = cases;
  if (inject_fault) options.compose = faulty_compose;
  const auto results = run_selftest(options);
  const SuiteResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    out << "first violated invariant: " << first_failure->name << ": " << first_failure->failure << '\n';
    return kVerificationFailed;
  }
  out << "selftest passed (seed " << seed << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sylow 2-subgroups of symmetric and alternating groups via binary-tree portraits", "sylow2"};
  app.require_subcommand(1);

  std::string kind, format = "cycles", predicate, op, level = "quick", json_path, path;
  std::size_t n = 0;
  bool decimal = false, inject_fault = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cases = 2000;
  std::string element;
  std::vector<std::string> operands;

  auto* order = app.add_subcommand("order", "2-part of the order of Syl2(S_n) or Syl2(A_n)");
  order->add_option("kind", kind, "S or A")->required();
  order->add_option("n", n, "degree")->required();
  order->add_flag("--decimal", decimal, "also print the order in decimal");

  auto* rank = app.add_subcommand("rank", "minimal number of generators");
  rank->add_option("kind", kind, "S or A")->required();
  rank->add_option("n", n, "degree")->required();

  auto* gens = app.add_subcommand("gens", "emit a minimal generating set");
  gens->add_option("kind", kind, "S or A")->required();
  gens->add_option("n", n, "degree")->required();
  gens->add_option("--format", format, "portrait or cycles");

  auto* member = app.add_subcommand("member", "membership predicate for a portrait");
  member->add_option("predicate", predicate, "G, W, derived-B, derived-G, frattini-G, typeT, typeC")->required();
  member->add_option("element", element, "portrait, e.g. 0/00/1001")->required();

  auto* calc = app.add_subcommand("calc", "portrait arithmetic");
  calc->add_option("op", op, "mul, inv, comm, abelianize-B, abelianize-G")->required();
  calc->add_option("operands", operands, "portraits")->required();

  auto* verify = app.add_subcommand("verify", "check the constructed group against the permutation oracle");
  verify->add_option("kind", kind, "S or A")->required();
  verify->add_option("n", n, "degree, at most 32")->required();
  verify->add_option("--level", level, "quick or full");
  verify->add_option("--json", json_path, "write the report as JSON");

  auto* replay = app.add_subcommand("replay", "re-run the claims of a JSON report");
  replay->add_option("path", path, "report file")->required();

  auto* selftest = app.add_subcommand("selftest", "exhaustive and randomized invariant suites");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--cases", cases, "random cases per suite");
  selftest->add_flag("--inject-fault", inject_fault, "use a broken product rule");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*order) return cmd_order(kind, n, decimal, out);
    if (*rank) return cmd_rank(kind, n, out);
    if (*gens) return cmd_gens(kind, n, format, out);
    if (*member) return cmd_member(predicate, element, out);
    if (*calc) return cmd_calc(op, operands, out);
    if (*verify) return cmd_verify(kind, n, level, json_path, out);
    if (*replay) return cmd_replay(path, out);
    if (*selftest) return cmd_selftest(seed, cases, inject_fault, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sylow::cli
