#ifndef CRITPT_BENCH_HPP
#define CRITPT_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "critpt/critical_system.hpp"
#include "critpt/groebner.hpp"
#include "critpt/hilbert.hpp"
#include "critpt/macaulay.hpp"

namespace critpt {

inline constexpr const char* kBenchHeader =
    "seed,n,p,degrees,delta,dreg,dwit_bound,dwit_empirical,A,G,logA_over_logG,solve_time_seconds,"
    "fglm_time_seconds,status";

struct BenchRecord {
  std::uint64_t seed = 0;
  int n = 0;
  int p = 0;
  std::vector<int> degrees;
  std::int64_t delta = 0;
  int dreg = 0;
  int dwit_bound = 0;
  int dwit_empirical = -1;  // -1 when the pipeline did not finish
  double A = 0;
  double G = 0;
  double logA_over_logG = 0;
  double solve_time_seconds = 0;
  double fglm_time_seconds = 0;
  std::string status;

  bool ok() const { return status == "ok"; }
  ProblemShape shape() const { return ProblemShape(n, p, degrees); }
  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace detail

inline std::string degrees_field(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ";" : "") + std::to_string(d[i]);
  return s;
}

inline std::string to_csv_row(const BenchRecord& r) {
  using detail::format_double;
  std::ostringstream os;
  os << r.seed << ',' << r.n << ',' << r.p << ',' << degrees_field(r.degrees) << ',' << r.delta << ',' << r.dreg << ','
     << r.dwit_bound << ',' << r.dwit_empirical << ',' << format_double(r.A) << ',' << format_double(r.G) << ','
     << format_double(r.logA_over_logG) << ',' << format_double(r.solve_time_seconds) << ','
     << format_double(r.fglm_time_seconds) << ',' << r.status;
  return os.str();
}

inline BenchRecord parse_csv_row(const std::string& line, int lineno = 1) {
  auto f = detail::split(line, ',');
  if (f.size() != 14) throw ParseError("expected 14 CSV fields, got " + std::to_string(f.size()), lineno, 1);
  BenchRecord r;
  int col = 1;
  auto field = [&](std::size_t i) -> const std::string& {
    col = 1;
    for (std::size_t k = 0; k < i; ++k) col += static_cast<int>(f[k].size()) + 1;
    return f[i];
  };
  try {
    r.seed = std::stoull(field(0));
    r.n = std::stoi(field(1));
    r.p = std::stoi(field(2));
    for (const auto& d : detail::split(field(3), ';')) r.degrees.push_back(std::stoi(d));
    r.delta = std::stoll(field(4));
    r.dreg = std::stoi(field(5));
    r.dwit_bound = std::stoi(field(6));
    r.dwit_empirical = std::stoi(field(7));
    r.A = std::stod(field(8));
    r.G = std::stod(field(9));
    r.logA_over_logG = std::stod(field(10));
    r.solve_time_seconds = std::stod(field(11));
    r.fglm_time_seconds = std::stod(field(12));
    r.status = field(13);
  } catch (const std::logic_error&) {
    throw ParseError("malformed CSV field", lineno, col);
  }
  return r;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchHeader << '\n';
  for (const auto& r : records) os << to_csv_row(r) << '\n';
}

inline std::vector<BenchRecord> read_csv(std::istream& is) {
  std::string line;
  int lineno = 1;
  if (!std::getline(is, line) || line != kBenchHeader) throw ParseError("missing or wrong CSV header", 1, 1);
  std::vector<BenchRecord> out;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    out.push_back(parse_csv_row(line, lineno));
  }
  return out;
}

struct BenchOptions {
  int seeds_per_cell = 1;
  std::uint64_t base_seed = 1;
  int max_resamples = 5;
  unsigned workers = 1;
  bool warmup = true;
  PrimeField field{};
};

/// Formula columns of a record for one shape.
inline BenchRecord formula_record(const ProblemShape& shape, std::uint64_t seed) {
  auto prof = averages(shape);
  BenchRecord r;
  r.seed = seed;
  r.n = shape.n;
  r.p = shape.p;
  r.degrees = shape.degrees;
  r.delta = prof.delta;
  r.dreg = prof.dreg;
  r.dwit_bound = prof.dwit_bound;
  r.A = prof.A.value();
  r.G = prof.G;
  r.logA_over_logG = prof.log_a_over_log_g();
  return r;
}

/// Full pipeline on one (shape, seed): Macaulay solve (timed), witness-degree scan, FGLM to lex
/// (timed) and the staircase check. Failures land in `status`, never escape.
inline BenchRecord run_cell(const ProblemShape& shape, std::uint64_t seed, const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  BenchRecord r = formula_record(shape, seed);
  r.status = "genericity-failure";
  for (int attempt = 0; attempt <= opt.max_resamples; ++attempt) {
    try {
      auto sys = random_instance(shape, opt.field, resample_seed(seed, attempt));
      auto t0 = clock::now();
      auto sol = solve(sys);
      auto t1 = clock::now();
      auto lex = fglm(sol.basis, with_order(sys.ring, OrderKind::lex));
      auto t2 = clock::now();
      auto dim = quotient_dimension(sol.basis);
      if (static_cast<std::int64_t>(dim) != r.delta || quotient_dimension(lex) != dim) continue;
      r.dwit_empirical = dwit_empirical(sys);
      r.solve_time_seconds = std::chrono::duration<double>(t1 - t0).count();
      r.fglm_time_seconds = std::chrono::duration<double>(t2 - t1).count();
      r.status = "ok";
      return r;
    } catch (const GenericityFailure&) {
    } catch (const PositiveDimension&) {
      r.status = "positive-dimension";
    } catch (const Error& e) {
      r.status = std::string("error:") + e.what();
      std::replace(r.status.begin(), r.status.end(), ',', ';');
      return r;
    }
  }
  return r;
}

/// Every (cell, seed) pair, run on a bounded pool of workers; output sorted by (cell, seed).
inline std::vector<BenchRecord> bench_grid(const std::vector<ProblemShape>& cells, const BenchOptions& opt) {
  struct Job {
    std::size_t cell;
    int seed_index;
  };
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int s = 0; s < opt.seeds_per_cell; ++s) jobs.push_back({c, s});
  std::vector<BenchRecord> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const auto& shape = cells[jobs[j].cell];
      std::uint64_t seed = opt.base_seed + static_cast<std::uint64_t>(jobs[j].seed_index);
      // Warm-up run on the first seed of each cell; its timing is discarded.
      if (opt.warmup && jobs[j].seed_index == 0) run_cell(shape, seed, opt);
      out[j] = run_cell(shape, seed, opt);
    }
  };
  unsigned nw = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < nw; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

/// Desk-scale grid for the complexity trend: 2 <= n <= max_n, 1 <= p < n, d0 up to max_d0,
/// d1 in {2, 3}, remaining constraints quadratic. Only shapes with max degree >= 3 and a
/// Macaulay matrix of at most `max_columns` columns at the witness bound are kept.
inline std::vector<ProblemShape> fig1_grid(int max_n, int max_d0, std::uint64_t max_columns) {
  std::vector<ProblemShape> cells;
  for (int n = 2; n <= max_n; ++n)
    for (int p = 1; p < n; ++p)
      for (int d0 = 1; d0 <= max_d0; ++d0)
        for (int d1 = 2; d1 <= 3; ++d1) {
          std::vector<int> d{d0, d1};
          d.resize(static_cast<std::size_t>(p) + 1, 2);
          if (*std::max_element(d.begin(), d.end()) < 3) continue;
          ProblemShape shape(n, p, d);
          if (binomial(n + witness_degree_bound(shape), n) > max_columns) continue;
          cells.push_back(shape);
        }
  return cells;
}

/// Shapes (n, p, (D, ..., D)) for n in [min_n, max_n].
inline std::vector<ProblemShape> fig2_grid(int degree, int p, int min_n, int max_n) {
  std::vector<ProblemShape> cells;
  for (int n = std::max(min_n, p + 1); n <= max_n; ++n)
    cells.emplace_back(n, p, std::vector<int>(static_cast<std::size_t>(p) + 1, degree));
  return cells;
}

struct PlotPoint {
  double x;
  double y;
};

/// (log(A)/log(G), log(time)/log(delta)) for every ok record with delta > 1, time in seconds.
inline std::vector<PlotPoint> fig1_points(const std::vector<BenchRecord>& records) {
  std::vector<PlotPoint> pts;
  for (const auto& r : records) {
    if (!r.ok() || r.delta <= 1) continue;
    if (r.solve_time_seconds <= 0) continue;
    double t = r.solve_time_seconds;
    pts.push_back({r.logA_over_logG, std::log(t) / std::log(static_cast<double>(r.delta))});
  }
  return pts;
}

/// (n, log(time)/log(D)) with D the largest degree.
inline std::vector<PlotPoint> fig2_points(const std::vector<BenchRecord>& records) {
  std::vector<PlotPoint> pts;
  for (const auto& r : records) {
    if (!r.ok()) continue;
    int D = *std::max_element(r.degrees.begin(), r.degrees.end());
    if (D <= 1) continue;
    if (r.solve_time_seconds <= 0) continue;
    double t = r.solve_time_seconds;
    pts.push_back({static_cast<double>(r.n), std::log(t) / std::log(static_cast<double>(D))});
  }
  return pts;
}

/// Least-squares slope of y against x; NaN with fewer than two distinct x values.
inline double least_squares_slope(const std::vector<PlotPoint>& pts) {
  if (pts.size() < 2) return std::nan("");
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& p : pts) {
    sxy += (p.x - mx) * (p.y - my);
    sxx += (p.x - mx) * (p.x - mx);
  }
  if (sxx == 0) return std::nan("");
  return sxy / sxx;
}

/// Two whitespace-separated columns, one point per line.
inline void write_plot_data(std::ostream& os, const std::vector<PlotPoint>& pts) {
  for (const auto& p : pts) os << detail::format_double(p.x) << ' ' << detail::format_double(p.y) << '\n';
}

}  // namespace critpt

#endif  // CRITPT_BENCH_HPP
