#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cinf/complexes.hpp"
#include "cinf/dupont.hpp"
#include "cinf/io.hpp"
#include "cinf/transfer.hpp"
#include "cinf/trees.hpp"

namespace {

using cinf::Json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  std::string format = "text";
  int dim = 2;
  int poly_degree = 4;
  int max_arity = 4;
  int leaves = 4;
  bool count_only = false;
  bool break_signs = false;
  std::string complex_file;
  std::string a_file;
  std::string b_file;
  std::vector<std::string> input_files;
  int complex_poly_degree = 2;
  int complex_arity = 3;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_contraction(const RunConfig& cfg) {
  const auto report = cinf::check_contraction(cfg.dim, static_cast<unsigned>(cfg.poly_degree));
  emit(cfg, cinf::to_json(report), cinf::to_text(report));
  return report.all_passed() ? kPass : kFail;
}

int run_trees(const RunConfig& cfg) {
  const auto& trees = cinf::enumerate_trees(cfg.leaves);
  if (cfg.count_only) {
    if (cfg.format == "json") {
      Json j;
      j["leaves"] = cfg.leaves;
      j["count"] = trees.size();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << trees.size() << "\n";
    }
    return kPass;
  }
  Json j;
  j["leaves"] = cfg.leaves;
  j["count"] = trees.size();
  j["trees"] = Json::array();
  std::string text;
  for (const auto& t : trees) {
    j["trees"].push_back(t.str());
    text += t.str() + "\n";
  }
  emit(cfg, j, text);
  return kPass;
}

int run_interval(const RunConfig& cfg) {
  const auto table = cinf::interval_product_table(cfg.max_arity);
  const auto rows = cinf::p_polynomial_report(std::max(cfg.max_arity, 1));
  const bool ok = table.all_passed() &&
                  std::all_of(rows.begin(), rows.end(), [](const cinf::PPolynomialRow& r) { return r.ok(); });
  Json j;
  j["table"] = cinf::to_json(table);
  j["p_polynomials"] = cinf::to_json(rows);
  j["passed"] = ok;
  emit(cfg, j, cinf::to_text(table) + "\n" + cinf::to_text(rows));
  return ok ? kPass : kFail;
}

cinf::VerificationReport tree_cross_check(cinf::TransferEngine& engine, int max_arity) {
  const auto& ctx = engine.contraction();
  cinf::VerificationReport report{"Tree sum against the recursion on N_" + std::to_string(ctx.dim()), {}};
  for (int n = 2; n <= max_arity; ++n) {
    cinf::RelationCheck c{"trees", "sum over T_" + std::to_string(n) + " = recursive m_" + std::to_string(n),
                          "N_" + std::to_string(ctx.dim()) + " face basis", 0, true, std::nullopt, std::nullopt};
    for (const auto& w : cinf::all_words(ctx.basis_size(), n)) {
      ++c.cases;
      std::vector<cinf::Cochain> slots;
      for (int idx : w) slots.push_back(ctx.basis_element(idx));
      const cinf::Cochain trees = engine.transferred_m_trees(slots);
      if (trees != engine.m(w)) {
        c.passed = false;
        c.counterexample = "word " + cinf::basis_word_str(ctx, w);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

int run_verify(const RunConfig& cfg) {
  const cinf::SimplexContraction ctx(cfg.dim);
  cinf::TransferEngine engine(ctx, cfg.break_signs ? cinf::SignRule::unshifted : cinf::SignRule::shifted);
  std::vector<cinf::VerificationReport> reports;
  reports.push_back(cinf::check_a_infinity(engine, cfg.max_arity));
  reports.push_back(cinf::check_morphism(engine, cfg.max_arity));
  reports.push_back(cinf::check_c_infinity(engine, cfg.max_arity));
  reports.push_back(cinf::check_unital(engine, cfg.max_arity));
  reports.push_back(tree_cross_check(engine, cfg.max_arity));
  bool ok = true;
  Json j;
  j["dimension"] = cfg.dim;
  j["max_arity"] = cfg.max_arity;
  j["sign_rule"] = cfg.break_signs ? "unshifted" : "shifted";
  j["reports"] = Json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.all_passed();
    j["reports"].push_back(cinf::to_json(r));
    text += cinf::to_text(r) + "\n";
  }
  j["passed"] = ok;
  text += std::string("overall: ") + (ok ? "PASS" : "FAIL") + "\n";
  emit(cfg, j, text);
  return ok ? kPass : kFail;
}

void emit_cochain(const RunConfig& cfg, const cinf::GlobalCochain& c) {
  if (cfg.format == "json")
    std::cout << cinf::cochain_to_json(c);
  else
    std::cout << c.str() << "\n";
}

int run_complex(const RunConfig& cfg, const std::string& op) {
  const auto x = cinf::load_complex(read_file(cfg.complex_file));
  if (op == "cup") {
    const auto a = cinf::load_cochain(read_file(cfg.a_file), x);
    const auto b = cinf::load_cochain(read_file(cfg.b_file), x);
    emit_cochain(cfg, cinf::cup(x, a, b));
    return kPass;
  }
  if (op == "coboundary") {
    emit_cochain(cfg, cinf::global_coboundary(x, cinf::load_cochain(read_file(cfg.a_file), x)));
    return kPass;
  }
  if (op == "m") {
    std::vector<cinf::GlobalCochain> inputs;
    for (const auto& f : cfg.input_files) inputs.push_back(cinf::load_cochain(read_file(f), x));
    cinf::GlobalTransfer transfer(x);
    emit_cochain(cfg, transfer.m(inputs));
    return kPass;
  }
  cinf::VerificationReport report =
      op == "whitney-check" ? cinf::check_whitney_conditions(x)
                            : cinf::check_global_contraction(x, cfg.complex_poly_degree, cfg.complex_arity);
  emit(cfg, cinf::to_json(report), cinf::to_text(report));
  return report.all_passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homotopy transfer on simplicial cochains"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* contraction = app.add_subcommand("contraction", "Check the Whitney-Dupont contraction identities");
  contraction->add_option("--dim", cfg.dim, "Simplex dimension")->check(CLI::Range(1, 6));
  contraction->add_option("--max-poly-degree", cfg.poly_degree, "Polynomial degree bound")->check(CLI::Range(0, 12));

  auto* trees = app.add_subcommand("trees", "Enumerate planar trees");
  trees->add_option("--leaves", cfg.leaves, "Number of leaves")->check(CLI::Range(1, 10));
  trees->add_flag("--count-only", cfg.count_only, "Print only the count");

  auto* interval = app.add_subcommand("interval", "Transferred products on the interval");
  interval->add_option("--max-arity", cfg.max_arity, "Largest arity")->check(CLI::Range(2, 12));

  auto* verify = app.add_subcommand("verify", "A-infinity, morphism, C-infinity and unit relations");
  verify->add_option("--dim", cfg.dim, "Simplex dimension")->check(CLI::Range(1, 4));
  verify->add_option("--max-arity", cfg.max_arity, "Largest arity")->check(CLI::Range(1, 6));
  verify->add_flag("--break-signs", cfg.break_signs, "Use unshifted degrees in the Koszul rule (debug)");

  auto* complex = app.add_subcommand("complex", "Operations on an ordered simplicial complex");
  complex->require_subcommand(1);
  complex->fallthrough();
  complex->add_option("--file", cfg.complex_file, "Complex JSON file")->required()->check(CLI::ExistingFile);
  auto* cup = complex->add_subcommand("cup", "a cup b = f(ga ^ gb)");
  cup->add_option("--a", cfg.a_file, "Cochain JSON")->required()->check(CLI::ExistingFile);
  cup->add_option("--b", cfg.b_file, "Cochain JSON")->required()->check(CLI::ExistingFile);
  auto* cob = complex->add_subcommand("coboundary", "Simplicial coboundary");
  cob->add_option("--a", cfg.a_file, "Cochain JSON")->required()->check(CLI::ExistingFile);
  auto* m = complex->add_subcommand("m", "Transferred operation m_n on n cochains");
  m->add_option("--inputs", cfg.input_files, "Cochain JSON files")->required()->check(CLI::ExistingFile);
  complex->add_subcommand("whitney-check", "Whitney product conditions on all basis cochains");
  auto* cc = complex->add_subcommand("contraction-check", "Levelwise contraction identities on global forms");
  cc->add_option("--max-poly-degree", cfg.complex_poly_degree, "Polynomial degree of test forms")->check(CLI::Range(0, 4));
  cc->add_option("--max-arity", cfg.complex_arity, "Largest arity for shuffle vanishing")->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*contraction) return run_contraction(cfg);
    if (*trees) return run_trees(cfg);
    if (*interval) return run_interval(cfg);
    if (*verify) return run_verify(cfg);
    if (*complex) {
      for (auto* sub : complex->get_subcommands()) return run_complex(cfg, sub->get_name());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
