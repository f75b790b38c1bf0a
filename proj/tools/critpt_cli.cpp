// critpt: command-line front end for the critical-point toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "critpt/critpt.hpp"

namespace {

using namespace critpt;

struct ShapeArgs {
  int n = 0;
  int p = 0;
  std::vector<int> degrees;

  void attach(CLI::App* app) {
    app->add_option("--n", n, "number of variables")->required();
    app->add_option("--p", p, "number of constraints")->required();
    app->add_option("--degrees", degrees, "d0,d1,...,dp")->required()->delimiter(',');
  }
  ProblemShape shape() const { return ProblemShape(n, p, degrees); }
};

PrimeField default_field() {
  if (const char* env = std::getenv("CRITPT_PRIME")) {
    try {
      return PrimeField(static_cast<Coeff>(std::stoul(env)));
    } catch (const std::logic_error&) {
      throw UndefinedInput(std::string("CRITPT_PRIME is not a number: ") + env);
    }
  }
  return PrimeField();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// Opens `path` for writing, or returns std::cout when it is empty or "-".
struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw UndefinedInput("cannot open " + path + " for writing");
    os = &file;
  }
};

int cmd_gen(const ShapeArgs& a, std::uint64_t seed, unsigned prime, const std::string& out) {
  PrimeField field = prime ? PrimeField(prime) : default_field();
  Output o(out);
  write_instance(*o.os, random_instance(a.shape(), field, seed));
  return 0;
}

int cmd_analyze(const ShapeArgs& a) {
  auto shape = a.shape();
  auto prof = averages(shape);
  std::cout << "shape " << shape.to_string() << '\n'
            << "A=" << prof.A.to_string() << " (" << prof.A.value() << ")\n"
            << "G=" << prof.g_exact() << " (" << prof.G << ")\n"
            << "logA_over_logG=" << prof.log_a_over_log_g() << '\n'
            << "delta=" << prof.delta << '\n'
            << "dreg=" << prof.dreg << '\n'
            << "dwit_bound=" << prof.dwit_bound << '\n'
            << "HS=" << join(hs_critical(shape).coefficients()) << '\n';
  return 0;
}

int cmd_solve(const std::string& path) {
  auto sys = read_instance_file(path);
  auto sol = solve(sys);
  auto lex = fglm(sol.basis, with_order(sys.ring, OrderKind::lex));
  std::cout << "grevlex:\n" << sol.basis.to_string() << "lex:\n" << lex.to_string();
  std::cout << "delta=" << quotient_dimension(sol.basis) << '\n'
            << "dwit_empirical=" << dwit_empirical(sys) << '\n'
            << "dwit_bound=" << witness_degree_bound(sys.shape) << '\n';
  return 0;
}

int cmd_kpoly(const ShapeArgs& a) {
  auto shape = a.shape();
  auto w = determinantal_permutation(shape);
  std::cout << "w=" << w.to_string() << '\n'
            << "G_w=" << grothendieck_poly(w).to_string() << '\n'
            << "K(t)=" << evaluate_kpoly(shape).to_string() << '\n';
  return 0;
}

int cmd_en_check(const ShapeArgs& a) {
  auto shape = a.shape();
  auto c = build_complex(shape);
  for (std::size_t k = 0; k < c.modules.size(); ++k) {
    std::cout << "F" << k << " rank=" << c.modules[k].rank() << " shifts=";
    for (std::size_t i = 0; i < c.modules[k].shifts.size(); ++i) std::cout << (i ? "," : "") << c.modules[k].shifts[i];
    std::cout << '\n';
  }
  std::cout << verify_complex(c).to_string() << '\n';
  std::cout << "numerator=" << alternating_numerator(shape).to_string() << '\n';
  return 0;
}

int cmd_sweep(int max_n, int max_degree) {
  int checked = 0, failed = 0;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p < n; ++p) {
      std::vector<int> d(static_cast<std::size_t>(p) + 1, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == d.size()) {
          if (p == 0 && d[0] == 1) return;  // no critical points at all
          ProblemShape shape(n, p, d);
          auto num = hs_determinantal(shape).numerator();
          bool ok = num == evaluate_kpoly(shape) && num == alternating_numerator(shape);
          auto hs = hs_critical(shape);
          ok = ok && hs.at_one() == algebraic_degree(shape) && hs.degree() + 1 == degree_of_regularity(shape);
          ++checked;
          if (!ok) {
            ++failed;
            std::cout << "FAIL " << shape.to_string() << '\n';
          }
          return;
        }
        for (int v = i == 0 ? 1 : 2; v <= max_degree; ++v) {
          d[i] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
  std::cout << "shapes=" << checked << " failures=" << failed << '\n';
  return failed ? 2 : 0;
}

int cmd_bench(const std::string& grid, int max_n, int max_d0, std::uint64_t max_columns, int degree, int p,
              BenchOptions opt, const std::string& out) {
  std::vector<ProblemShape> cells;
  if (grid == "fig1") cells = fig1_grid(max_n, max_d0, max_columns);
  else cells = fig2_grid(degree, p, p + 1, max_n);
  auto records = bench_grid(cells, opt);
  {
    Output o(out);
    write_csv(*o.os, records);
  }
  auto pts = grid == "fig1" ? fig1_points(records) : fig2_points(records);
  std::size_t ok = 0;
  for (const auto& r : records) ok += r.ok();
  std::cerr << "cells=" << cells.size() << " records=" << records.size() << " ok=" << ok
            << " slope=" << least_squares_slope(pts) << '\n';
  return ok == records.size() ? 0 : 2;
}

int cmd_plot_data(const std::string& csv, int figure, const std::string& out) {
  std::ifstream in(csv);
  if (!in) throw UndefinedInput("cannot open " + csv);
  auto records = read_csv(in);
  Output o(out);
  write_plot_data(*o.os, figure == 1 ? fig1_points(records) : fig2_points(records));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points of polynomial optimization problems over GF(p)"};
  app.require_subcommand(1);

  ShapeArgs gen_args, analyze_args, kpoly_args, en_args;
  std::uint64_t seed = 1;
  unsigned prime = 0;
  std::string out, instance, csv, grid = "fig1";
  int sweep_n = 6, sweep_d = 4, max_n = 4, max_d0 = 6, degree = 3, bench_p = 1, figure = 1;
  std::uint64_t max_columns = 3000;
  BenchOptions bench;

  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen_args.attach(gen);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--prime", prime, "field characteristic (default $CRITPT_PRIME or 65521)");
  gen->add_option("-o,--output", out, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "formulas for a shape");
  analyze_args.attach(analyze);

  auto* solve_cmd = app.add_subcommand("solve", "Groebner bases of an instance file");
  solve_cmd->add_option("instance", instance, "instance file")->required();

  auto* kpoly = app.add_subcommand("kpoly", "Grothendieck polynomial and K-polynomial");
  kpoly_args.attach(kpoly);

  auto* en = app.add_subcommand("en-check", "build and verify the Eagon-Northcott complex");
  en_args.attach(en);

  auto* sweep = app.add_subcommand("sweep", "three-way numerator agreement over a shape grid");
  sweep->add_option("--max-n", sweep_n, "largest n");
  sweep->add_option("--max-degree", sweep_d, "largest degree");

  auto* bench_cmd = app.add_subcommand("bench", "timing grid to CSV");
  bench_cmd->add_option("--grid", grid, "fig1 or fig2")->check(CLI::IsMember({"fig1", "fig2"}));
  bench_cmd->add_option("--seeds", bench.seeds_per_cell, "seeds per cell");
  bench_cmd->add_option("--base-seed", bench.base_seed, "first seed");
  bench_cmd->add_option("--workers", bench.workers, "parallel workers");
  bench_cmd->add_option("--max-n", max_n, "largest n");
  bench_cmd->add_option("--max-d0", max_d0, "largest objective degree (fig1)");
  bench_cmd->add_option("--max-columns", max_columns, "Macaulay column cap (fig1)");
  bench_cmd->add_option("--degree", degree, "common degree D (fig2)");
  bench_cmd->add_option("--p", bench_p, "constraint count (fig2)");
  bench_cmd->add_option("-o,--output", out, "CSV file (default stdout)");

  auto* plot = app.add_subcommand("plot-data", "two-column data from a bench CSV");
  plot->add_option("csv", csv, "bench CSV")->required();
  plot->add_option("--figure", figure, "1 or 2")->check(CLI::IsMember({1, 2}));
  plot->add_option("-o,--output", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return cmd_gen(gen_args, seed, prime, out);
    if (*analyze) return cmd_analyze(analyze_args);
    if (*solve_cmd) return cmd_solve(instance);
    if (*kpoly) return cmd_kpoly(kpoly_args);
    if (*en) return cmd_en_check(en_args);
    if (*sweep) return cmd_sweep(sweep_n, sweep_d);
    if (*bench_cmd) {
      bench.field = default_field();
      return cmd_bench(grid, max_n, max_d0, max_columns, degree, bench_p, bench, out);
    }
    if (*plot) return cmd_plot_data(csv, figure, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "invalid shape: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
