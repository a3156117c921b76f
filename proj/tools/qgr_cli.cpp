// Command-line surface over the library: ring products, graded characters,
// basis decompositions, dimension reports, classical restriction, folding,
// the deterministic check suites, and the character-table store.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical
// inconsistency, 3 resource cap exceeded.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgr/classical.hpp"
#include "qgr/decompose.hpp"
#include "qgr/io.hpp"
#include "qgr/quiverdim.hpp"
#include "qgr/suites.hpp"

namespace {

using namespace qgr;

// Table-file problems are input errors, reported with exit code 1.
struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::vector<int>> parse_orbits(const std::string& text) {
  std::vector<std::vector<int>> orbits;
  std::vector<int> cur;
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) throw CLI::ValidationError("--orbits", "empty node entry");
    cur.push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      num += ch;
    } else if (ch == ',') {
      flush_num();
    } else if (ch == '|') {
      flush_num();
      orbits.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      throw CLI::ValidationError("--orbits", std::string("unexpected character '") + ch + "'");
    }
  }
  flush_num();
  orbits.push_back(cur);
  return orbits;
}

void print_graded(const ClassicalGraded& x, const char* key_prefix) {
  for (const auto& [w, p] : x.terms)
    std::cout << key_prefix << "[" << print_weight(w) << "] : " << print_laurent(p) << "\n";
  if (x.terms.empty()) std::cout << "0\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations in a quantum Grothendieck ring"};
  app.require_subcommand(1);

  std::string type = "A1", table_path, save_path;
  std::string lhs, rhs, expr, gamma_text, eta_text, lambda_text, orbits_text, suite;
  int trunc = 0, max_iter = 10000, n = 100;
  std::uint64_t seed = 0;

  auto add_type = [&](CLI::App* cmd) { cmd->add_option("--type", type, "Cartan type, e.g. A2"); };
  auto add_table = [&](CLI::App* cmd) {
    cmd->add_option("--table", table_path, "character-table file");
  };

  CLI::App* mul = app.add_subcommand("mul", "product of two ring elements");
  add_type(mul);
  mul->add_option("--lhs", lhs, "left factor")->required();
  mul->add_option("--rhs", rhs, "right factor")->required();

  CLI::App* standard = app.add_subcommand("standard", "graded character of a standard module");
  add_type(standard);
  add_table(standard);
  standard->add_option("--gamma", gamma_text, "dominant top term")->required();

  CLI::App* simple = app.add_subcommand("simple", "graded character of a simple module");
  add_type(simple);
  add_table(simple);
  simple->add_option("--gamma", gamma_text, "dominant top term")->required();

  CLI::App* decomp = app.add_subcommand("decompose", "expansion in the simple basis");
  add_type(decomp);
  add_table(decomp);
  decomp->add_option("--expr", expr, "ring element")->required();
  decomp->add_option("--max-iter", max_iter, "iteration cap");

  CLI::App* dims = app.add_subcommand("dims", "dimension report for a (gamma, eta) pair");
  add_type(dims);
  dims->add_option("--gamma", gamma_text, "x{...} literal")->required();
  dims->add_option("--eta", eta_text, "y{...} literal")->required();

  CLI::App* restr = app.add_subcommand("restrict", "classical restriction of a simple character");
  add_type(restr);
  add_table(restr);
  restr->add_option("--gamma", gamma_text, "dominant top term")->required();

  CLI::App* ctensor = app.add_subcommand("classical-tensor", "tensor product multiplicities");
  add_type(ctensor);
  ctensor->add_option("--lhs", lhs, "dominant weight w{...}")->required();
  ctensor->add_option("--rhs", rhs, "dominant weight w{...}")->required();

  CLI::App* fold = app.add_subcommand("fold", "fold a Cartan datum along diagram orbits");
  add_type(fold);
  fold->add_option("--orbits", orbits_text, "orbit partition, e.g. \"1,3|2\"")->required();
  fold->add_option("--lambda", lambda_text, "folded dominant weight w{...}");

  CLI::App* check = app.add_subcommand("check", "run a deterministic property suite");
  check->add_option("--suite", suite, "suite name")->required();
  check->add_option("--n", n, "cases per sub-family");
  check->add_option("--seed", seed, "random seed");

  CLI::App* table = app.add_subcommand("table", "load, validate, and reprint a character table");
  table->add_option("--table", table_path, "character-table file")->required();
  table->add_option("--save", save_path, "write the canonical form to this path");

  app.add_option("--trunc", trunc, "starting series truncation depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (trunc > 0) set_min_truncation(trunc);

  auto make_table = [&](const CartanDatum& c) {
    if (table_path.empty()) return CharTable(c);
    try {
      CharTable t = table_load(table_path);
      if (t.cartan().name() != c.name())
        throw DomainError("table type " + t.cartan().name() + " does not match --type " +
                          c.name());
      return t;
    } catch (const std::exception& e) {
      throw TableError(e.what());
    }
  };

  if (mul->parsed()) {
    CartanDatum c = build_cartan(type);
    std::cout << print_ax(ax_mul(c, parse_ax(lhs), parse_ax(rhs))) << "\n";
  } else if (standard->parsed() || simple->parsed()) {
    CartanDatum c = build_cartan(type);
    CharTable t = make_table(c);
    XElem g = parse_x(gamma_text);
    std::cout << print_ax(standard->parsed() ? standard_char(t, g) : simple_char(t, g)) << "\n";
  } else if (decomp->parsed()) {
    CartanDatum c = build_cartan(type);
    CharTable t = make_table(c);
    BExpansion e = expand_in_simples(t, parse_ax(expr), max_iter);
    for (const auto& [g, p] : e.terms)
      std::cout << print_x(g) << " : " << print_laurent(p) << "\n";
    if (!e.success()) throw DomainError("nonzero residual " + print_ax(e.residual));
    std::vector<XElem> bad;
    if (!positivity_check(e, &bad)) {
      std::string what = "coefficients outside N[v,v^-1] at";
      for (const XElem& g : bad) what += " " + print_x(g);
      throw DomainError(what);
    }
  } else if (dims->parsed()) {
    CartanDatum c = build_cartan(type);
    XElem g = parse_x(gamma_text);
    YElem eta = parse_y(eta_text);
    Weight lam = spec_q1(c, g);
    Root alpha = spec_q1(c, eta);
    std::cout << "lambda = " << print_weight(lam) << "\n";
    std::cout << "d_lambda_alpha = " << d_lambda_alpha(c, lam, alpha) << "\n";
    std::cout << "d_gamma_eta = " << d_gamma_eta(c, g, eta) << "\n";
    KappaPair k = kappa_eta(c, lam, alpha, g, eta);
    std::cout << "kappa_plus = " << k.plus << "\nkappa_minus = " << k.minus << "\n";
  } else if (restr->parsed()) {
    CartanDatum c = build_cartan(type);
    CharTable t = make_table(c);
    ClassicalGraded r = restrict_ax(c, simple_char(t, parse_x(gamma_text)));
    print_graded(expand_in_chi(c, r), "chi");
  } else if (ctensor->parsed()) {
    CartanDatum c = build_cartan(type);
    auto mult = tensor_mult(c, parse_weight(lhs, c.rank()), parse_weight(rhs, c.rank()));
    for (const auto& [w, m] : mult) std::cout << print_weight(w) << " : " << m << "\n";
  } else if (fold->parsed()) {
    CartanDatum cf = fold_cartan(build_cartan(type), parse_orbits(orbits_text));
    std::cout << "folded Cartan matrix:\n";
    for (int i = 0; i < cf.rank(); ++i) {
      for (int j = 0; j < cf.rank(); ++j) std::cout << (j ? " " : "") << cf.a(i, j);
      std::cout << "\n";
    }
    if (!lambda_text.empty()) {
      MultTable row = folded_transition(cf, parse_weight(lambda_text, cf.rank()));
      for (const auto& [w, m] : row.mult) std::cout << print_weight(w) << " : " << m << "\n";
    }
  } else if (check->parsed()) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "error: unknown suite '" << suite << "'; available:";
      for (const auto& s : names) std::cerr << " " << s;
      std::cerr << "\n";
      return 1;
    }
    SuiteReport r = run_suite(suite, n, seed);
    std::cout << r.text;
    if (!r.passed) return 2;
  } else if (table->parsed()) {
    try {
      CharTable t = table_load(table_path);
      if (!save_path.empty()) table_save(t, save_path);
      std::cout << "type " << t.cartan().name() << ", " << t.fund().size() << " fundamental and "
                << t.simples().size() << " simple entries\n";
    } catch (const std::exception& e) {
      throw TableError(e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const TableError& e) {
    std::cerr << "table error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const TruncationError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
