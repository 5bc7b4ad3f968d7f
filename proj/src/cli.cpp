#include "regen/cli.hpp"

#include "regen/bounds.hpp"
#include "regen/code_model.hpp"
#include "regen/dual_chain.hpp"
#include "regen/instances.hpp"
#include "regen/io.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace regen {

namespace {

/// Bad input that is the caller's fault; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string in;
  std::string out;
  int n = 0;
  Residue q = 2;
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  std::string format = "csv";
  std::vector<std::string> kind;
};

void configure_logging() {
  auto logger = spdlog::get("regen");
  if (!logger) {
    logger = spdlog::stderr_color_mt("regen");
    spdlog::set_default_logger(logger);
  }
  spdlog::level::level_enum level = spdlog::level::warn;
  if (const char* env = std::getenv("REGEN_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; keep the default instead.
    if (level == spdlog::level::off && std::string(env) != "off") level = spdlog::level::warn;
  }
  spdlog::set_level(level);
}

/// Writes `text` to --out when given, otherwise to `out`.
void emit(const CommandConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write '" + cfg.out + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + cfg.out + "'");
  spdlog::info("wrote {}", cfg.out);
}

std::string subsets_text(const std::vector<std::vector<int>>& subsets) {
  std::string s;
  for (const auto& subset : subsets) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < subset.size(); ++i) {
      s += (i ? "," : "") + std::to_string(subset[i] + 1);
    }
    s += "}";
  }
  return s;
}

int cmd_bounds(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.n < 4) throw UsageError("bounds needs n >= 4 (got " + std::to_string(cfg.n) + ")");
  if (cfg.alpha.has_value() != cfg.beta.has_value()) {
    throw UsageError("--alpha and --beta must be given together");
  }

  if (!cfg.alpha) {
    const auto curves = tradeoff_curves(cfg.n);
    if (cfg.format == "json") {
      emit(cfg, curves_to_json(curves).dump(2) + "\n", out);
    } else {
      std::ostringstream ss;
      write_curves_csv(ss, curves);
      emit(cfg, ss.str(), out);
    }
    return exit_ok;
  }

  const std::int64_t a = *cfg.alpha;
  const std::int64_t b = *cfg.beta;
  if (b < 1 || a < b || a > (cfg.n - 1) * b) {
    throw UsageError("need 1 <= beta <= alpha <= (n-1) beta");
  }
  const int n = cfg.n;
  std::vector<std::pair<std::string, std::int64_t>> values{
      {"cutset", cutset_bound(n, n - 1, n - 1, a, b)},
      {"fr_rank_lower", fr_rank_lower_bound(n, n - 1, a, b)},
      {"theorem1_outer", theorem1_bound(n, a, b)},
      {"theorem5_rank", theorem5_rank_bound(n, a, b)},
  };
  if (n == 5) {
    values.emplace_back("sassenkum", sassenkum_544(a, b));
    values.emplace_back("duursma", duursma_544(a, b));
  }

  if (cfg.format == "json") {
    nlohmann::json doc{{"n", n}, {"alpha", a}, {"beta", b}};
    for (const auto& [name, v] : values) doc["bounds"][name] = v;
    emit(cfg, doc.dump(2) + "\n", out);
  } else {
    std::string text = "bound,value\n";
    for (const auto& [name, v] : values) text += name + "," + std::to_string(v) + "\n";
    emit(cfg, text, out);
  }
  return exit_ok;
}

struct Verification {
  nlohmann::json report;
  bool pass = false;
};

Verification verify_file(const CodeFile& file, std::ostream& err) {
  Verification v;
  const CodeParams& p = file.code.params();
  v.report["params"] = {{"n", p.n},         {"k", p.k},       {"d", p.d}, {"q", p.q},
                        {"alpha", p.alpha}, {"beta", p.beta}, {"B", p.B}};
  v.report["warnings"] = nlohmann::json::array();

  const DataCollectionReport dc = check_data_collection(file.code);
  v.report["data_collection"] = to_json(dc);
  if (!dc.pass) {
    err << "data collection fails: rank(G) = " << dc.generator_rank << ", B = " << p.B;
    if (!dc.failing_subsets.empty()) err << "; failing node subsets " << subsets_text(dc.failing_subsets);
    err << "\n";
  }

  bool repair_ok = true;
  if (!file.scheme) {
    const std::string warning = "no repair section; exact repair not checked";
    spdlog::warn(warning);
    err << "warning: " << warning << "\n";
    v.report["warnings"].push_back(warning);
    v.report["exact_repair"] = nullptr;
  } else {
    ExactRepairReport er;
    try {
      er = check_exact_repair(file.code, *file.scheme);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    v.report["exact_repair"] = to_json(er);
    repair_ok = er.pass;
    if (!er.pass) {
      err << "exact repair fails for nodes";
      for (int j : er.failing_nodes) err << " " << j + 1;
      err << "\n";
    }
  }
  v.pass = dc.pass && repair_ok;
  v.report["pass"] = v.pass;
  return v;
}

CodeFile load(const CommandConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  return read_code_file(cfg.in);
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const CodeFile file = load(cfg);
  Verification v = verify_file(file, err);
  v.report["file"] = cfg.in;
  emit(cfg, v.report.dump(2) + "\n", out);
  return v.pass ? exit_ok : exit_failure;
}

int cmd_certify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const CodeFile file = load(cfg);
  if (!file.scheme) throw UsageError("certify needs a code file with a repair section");
  if (file.code.params().n < 4) throw UsageError("certify needs n >= 4");

  const Verification v = verify_file(file, err);
  if (!v.pass) {
    err << "certify aborted: '" << cfg.in << "' does not pass verification\n";
    return exit_failure;
  }

  const DualChain chain = build_chain(extract_h_repair(file.code, *file.scheme));
  const ChainCertificate cert = certify_all(chain);
  nlohmann::json report = chain_report_json(chain, cert);
  report["file"] = cfg.in;
  report["dual_rank"] = chain.stats(chain.top()).rank;
  emit(cfg, report.dump(2) + "\n", out);

  if (!cert.pass()) {
    for (const CertificationReport* r : {&cert.lemma4, &cert.theorem6, &cert.cascade, &cert.slack}) {
      for (const Check& c : r->violations()) {
        err << r->name << " " << c.part << " violated at t=" << c.t << " j=" << c.j << " s=" << c.s
            << ": " << to_string(c.lhs) << " " << c.relation << " " << to_string(c.rhs) << "\n";
      }
    }
    return exit_failure;
  }
  return exit_ok;
}

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  InstanceRecipe recipe;
  SchemedCode code = [&] {
    try {
      recipe = parse_recipe(cfg.kind, cfg.n, cfg.q);
      return build(recipe);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  spdlog::info("generated {}: alpha={} beta={} B={}", describe(recipe), code.code.params().alpha,
               code.code.params().beta, code.code.params().B);
  emit(cfg, code_to_json(code.code, &code.scheme).dump(2) + "\n", out);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_logging();

  CommandConfig cfg;
  CLI::App app{"Bounds, instances and certificates for exact-repair regenerating codes", "regen"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Emit trade-off curves, or bound values at --alpha/--beta");
  bounds->add_option("--n", cfg.n, "Number of nodes (k = d = n-1)")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--alpha", cfg.alpha, "Per-node storage");
  bounds->add_option("--beta", cfg.beta, "Per-helper download");
  bounds->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check data collection and exact repair of a code file");
  verify->add_option("--in", cfg.in, "Code JSON file")->required();
  verify->add_option("--out", cfg.out, "Report file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Build the dual chain and certify its rank relations");
  certify->add_option("--in", cfg.in, "Code JSON file")->required();
  certify->add_option("--out", cfg.out, "Report file (default stdout)");

  auto* gen = app.add_subcommand("gen", "Generate an instance: msr | mbr | sum <a> <b>");
  gen->add_option("kind", cfg.kind, "Instance recipe")->required();
  gen->add_option("--n", cfg.n, "Number of nodes")->required();
  gen->add_option("--q", cfg.q, "Field size (prime)");
  gen->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*bounds) return cmd_bounds(cfg, out);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*certify) return cmd_certify(cfg, out, err);
    if (*gen) return cmd_gen(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace regen
