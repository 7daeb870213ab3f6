#include <CLI11.hpp>

#include <ostream>
#include <thread>

#include "nsg/cli.hpp"

namespace nsg::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup toolkit", "nsg"};
  app.set_version_flag("--version", std::string(NSG_VERSION));
  app.fallthrough();
  app.require_subcommand(1);

  CommandRequest req;
  req.jobs = std::max(1u, std::thread::hardware_concurrency());
  bool json = false;
  bool csv = false;
  bool timing = false;
  auto* json_flag = app.add_flag("--json", json, "JSON report on stdout");
  auto* csv_flag = app.add_flag("--csv", csv, "CSV rows on stdout");
  json_flag->excludes(csv_flag);
  app.add_flag("--timing", timing, "include elapsed_ms in the report");
  app.add_option("--jobs", req.jobs, "worker threads for enumeration (default: all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-ms", req.budget_ms, "time budget for enumeration, 0 for none")
      ->check(CLI::NonNegativeNumber);

  auto leaf = [&req](CLI::App* parent, const std::string& name, const std::string& help,
                     std::vector<std::string> path) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("args", req.args, "positional arguments");
    sub->callback([&req, path] {
      if (req.path.empty()) req.path = path;
    });
    return sub;
  };
  auto option = [&req](CLI::App* sub, const std::string& name, const std::string& help) {
    sub->add_option_function<std::string>(
        "--" + name, [&req, name](const std::string& v) { req.flags[name] = v; }, help);
  };
  auto group = [&app](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  leaf(&app, "info", "invariants of <GENS>", {"info"});
  leaf(&app, "gaps", "gaps, fundamental and special gaps", {"gaps"});
  option(leaf(&app, "apery", "Apery set (default: of the multiplicity)", {"apery"}), "n", "base element");

  auto* pm = group("pm", "proportionally modular semigroups");
  leaf(pm, "solve", "solutions of a x mod b <= c x: A B C", {"pm", "solve"});
  leaf(pm, "interval", "S(I) for I = LO..HI; '(' and ')' mark open ends", {"pm", "interval"});
  leaf(pm, "bezout", "proper Bezout sequence from F1 to F2", {"pm", "bezout"});
  leaf(pm, "recognize", "whether GENS is proportionally modular", {"pm", "recognize"});

  auto* quot = leaf(&app, "quot", "quotient GENS/P", {"quot"});
  auto* doubles = leaf(quot, "doubles", "every T with T/d = S and F(T) <= fmax", {"quot", "doubles"});
  option(doubles, "fmax", "largest Frobenius number searched");
  option(doubles, "d", "divisor (default 2)");
  leaf(quot, "decompose", "decomposition into irreducibles", {"quot", "decompose"});

  auto* tree = group("tree", "semigroup tree by genus");
  for (const auto& [name, help] : {std::pair<std::string, std::string>{"count", "vertices per genus"},
                                   {"list", "semigroups of one genus"}}) {
    auto* sub = leaf(tree, name, help, {"tree", name});
    option(sub, "genus", "genus");
    option(sub, "variety", "all, arf or saturated");
    option(sub, "isa", "scalar, avx2 or neon");
  }

  auto* closure = group("closure", "closures in a variety");
  leaf(closure, "arf", "Arf closure", {"closure", "arf"});
  leaf(closure, "sat", "saturated closure", {"closure", "sat"});

  auto* pres = group("pres", "presentations");
  leaf(pres, "minimal", "minimal presentation", {"pres", "minimal"});
  leaf(pres, "betti", "Betti elements and their graphs", {"pres", "betti"});
  leaf(pres, "glue", "gluing: GENS1 GENS2 LAMBDA MU", {"pres", "glue"});

  auto* d3 = group("d3", "embedding dimension three");
  leaf(d3, "sym", "symmetric witness", {"d3", "sym"});
  leaf(d3, "psym", "pseudo-symmetric square-root test: N1 N2 N3", {"d3", "psym"});
  leaf(d3, "rij", "positive solution of the r_ij system: N1 N2 N3", {"d3", "rij"});
  leaf(d3, "c", "c_i minima", {"d3", "c"});
  leaf(d3, "pm", "modular inequality for <N1,N2>/N3", {"d3", "pm"});
  leaf(d3, "fermat", "desk check: A B C N", {"d3", "fermat"});

  auto* fact = group("fact", "factorization invariants");
  leaf(fact, "lengths", "factorizations and lengths: GENS S", {"fact", "lengths"});
  leaf(fact, "catenary", "catenary degree: GENS [S]", {"fact", "catenary"});
  leaf(fact, "tame", "tame degree: GENS [S]", {"fact", "tame"});
  leaf(fact, "omega", "omega-primality: GENS [S]", {"fact", "omega"});
  leaf(fact, "elasticity", "elasticity: GENS [S]", {"fact", "elasticity"});
  option(leaf(fact, "delta", "Delta set up to a bound", {"fact", "delta"}), "bound", "largest element");
  auto* probe = leaf(fact, "probe", "compare an invariant at n and n + p", {"fact", "probe"});
  option(probe, "invariant", "delta, catenary or tame");
  option(probe, "window", "largest n compared");
  option(probe, "candidates", "periods, comma separated (default: generators)");

  option(leaf(&app, "corpus", "run a suite over a file of generator lists", {"corpus"}), "suite",
         "wilf, fgh, herzog-dim3, presentation-card, catenary-betti");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error [ParseError]: " << e.what() << '\n';
    return 2;
  }
  req.format = json ? Format::Json : csv ? Format::Csv : Format::Table;
  const auto report = execute(req);
  render(report, req.format, timing, out, err);
  return report.exit_code;
}

}  // namespace nsg::cli
