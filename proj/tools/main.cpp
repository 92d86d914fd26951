// Command line front end: single invariants, full tables, consistency
// checks, and the golden self-test.
//
// Exit codes: 0 success, 1 check or self-test failure (also integrality
// failures inside the pipeline), 2 usage error.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "higgsdt/golden.hpp"
#include "higgsdt/invariants.hpp"
#include "higgsdt/record.hpp"

namespace {

using namespace higgsdt;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string ms_label(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

int thread_budget(int jobs) {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("HIGGSDT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) cap = static_cast<int>(parsed);
  }
  return std::min(jobs, cap);
}

// Runs fn(0..jobs-1) on a small worker pool; results must be collected by
// index so output stays deterministic.
template <class F>
void parallel_for(int jobs, F&& fn) {
  const int workers = thread_budget(jobs);
  if (workers <= 1) {
    for (int i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

void print_record(const OutputRecord& rec, const std::string& format) {
  if (format == "json")
    std::cout << record_json(rec).dump() << "\n";
  else
    std::cout << poly_text(rec.poly) << "\n";
}

int run_omega(int ell, int r, int d, const std::string& format) {
  const auto start = Clock::now();
  OmegaValue value = higgs_dt(QuiverConfig{ell}, r, d);
  OutputRecord rec{value.ell, value.r, value.d, "omega_L", std::nullopt,
                   std::move(value.poly), ms_since(start)};
  print_record(rec, format);
  return 0;
}

int run_table(int ell, int rmax, const std::string& format) {
  const QuiverConfig q{ell};
  std::vector<OutputRecord> rows(static_cast<std::size_t>(rmax));
  parallel_for(rmax, [&](int i) {
    const int r = i + 1;
    const auto start = Clock::now();
    OmegaValue value = higgs_dt(q, r, preferred_table_degree(q, r));
    rows[static_cast<std::size_t>(i)] =
        OutputRecord{value.ell,    value.r, value.d, "omega_L",
                     std::nullopt, std::move(value.poly), ms_since(start)};
  });
  if (format == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : rows) out.push_back(record_json(row));
    std::cout << out.dump() << "\n";
  } else if (format == "latex") {
    for (const auto& row : rows)
      std::cout << "\\Omega_{" << row.ell << "}(" << row.r << ") &= "
                << poly_latex(row.poly) << "\\\\\n";
  } else {
    for (const auto& row : rows)
      std::cout << "Omega_" << row.ell << "(" << row.r << ") [d=" << row.d
                << "] = " << poly_text(row.poly) << "\n";
  }
  return 0;
}

int run_quiver_omega(int ell, const std::string& dimvec,
                     const std::string& format) {
  const DimVector m = parse_dim_vector(dimvec);
  const auto start = Clock::now();
  LaurentPoly omega = quiver_dt(QuiverConfig{ell}, m);
  OutputRecord rec{ell,
                   m.rank(),
                   static_cast<int>(m.degree()),
                   "omega_Q",
                   m,
                   std::move(omega),
                   ms_since(start)};
  print_record(rec, format);
  return 0;
}

int run_check_quiver_sum(int ell, int r, int d, int margin) {
  const QuiverSumCheck check =
      check_quiver_sum(PipelineConfig{{ell}, r, d, margin});
  std::cout << "Omega_" << ell << "(" << r << "," << d
            << ") = " << poly_text(check.higgs_side) << "\n";
  for (const auto& [m, omega] : check.summands)
    std::cout << "  Omega_Q(" << m.to_string() << ") = " << poly_text(omega)
              << "\n";
  std::cout << "  sum = " << poly_text(check.quiver_sum) << "\n";
  if (!check.sum_matches)
    std::cout << "MISMATCH: quiver sum differs from the bundle side\n";
  for (const auto& [m, omega] : check.nonvanishing_extras)
    std::cout << "UNEXPECTED nonzero Omega_Q(" << m.to_string()
              << ") = " << poly_text(omega) << " below vertex 1\n";
  std::cout << (check.ok() ? "PASS" : "FAIL") << "\n";
  return check.ok() ? 0 : 1;
}

int run_check_d_independence(int ell, int r, const std::vector<int>& degrees) {
  const DegreeIndependenceCheck check =
      check_degree_independence(QuiverConfig{ell}, r, degrees);
  for (const auto& row : check.rows)
    std::cout << "Omega_" << ell << "(" << r << ") at d=" << row.requested_d
              << " (computed at d=" << row.used_d
              << "): " << poly_text(row.poly) << "\n";
  std::cout << (check.all_equal ? "PASS: all degrees agree"
                                : "FAIL: values differ across degrees")
            << "\n";
  return check.all_equal ? 0 : 1;
}

int run_check_shift(int ell, const std::string& dimvec) {
  const DimVector m = parse_dim_vector(dimvec);
  const ShiftInvarianceCheck check =
      check_shift_invariance(QuiverConfig{ell}, m);
  std::cout << "Omega_Q(" << m.to_string() << ") = " << poly_text(check.base)
            << "\n";
  std::cout << "Omega_Q(" << m.shifted(1).to_string()
            << ") = " << poly_text(check.shifted) << "\n";
  std::cout << (check.equal ? "PASS" : "FAIL") << "\n";
  return check.equal ? 0 : 1;
}

int run_check_hn_product(int ell, int rmax, int dmax) {
  const bool ok = check_hn_factorization(PipelineConfig{{ell}, rmax, dmax});
  std::cout << "slope-factor product on box (" << rmax << "," << dmax << ") "
            << (ok ? "reproduces" : "DOES NOT reproduce")
            << " the positive series\n";
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_selftest(bool quick) {
  std::vector<const GoldenEntry*> entries;
  for (const auto& e : golden_entries())
    if (!quick || e.r <= 3) entries.push_back(&e);
  struct Row {
    OmegaValue value;
    bool ok = false;
    double ms = 0.0;
  };
  std::vector<Row> rows(entries.size());
  const auto start = Clock::now();
  parallel_for(static_cast<int>(entries.size()), [&](int i) {
    const GoldenEntry& e = *entries[static_cast<std::size_t>(i)];
    const auto row_start = Clock::now();
    const QuiverConfig q{e.ell};
    OmegaValue value = higgs_dt(q, e.r, preferred_table_degree(q, e.r));
    const bool ok = value.poly == golden_poly(e);
    rows[static_cast<std::size_t>(i)] = {std::move(value), ok,
                                         ms_since(row_start)};
  });
  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.ok) {
      std::cout << "ok   Omega_" << row.value.ell << "(" << row.value.r
                << ") [d=" << row.value.d << "] = " << poly_text(row.value.poly)
                << "  (" << ms_label(row.ms) << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL Omega_" << row.value.ell << "(" << row.value.r
                << "): expected " << poly_text(golden_poly(*entries[i]))
                << ", got " << poly_text(row.value.poly) << "\n";
    }
  }
  std::cout << "self-test: " << rows.size() - static_cast<std::size_t>(failures)
            << "/" << rows.size() << " entries match (" << ms_label(ms_since(start))
            << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Donaldson-Thomas invariants of twisted Higgs bundles over the "
      "projective line and of the associated infinite symmetric quiver"};
  app.require_subcommand(1);

  int ell = 1, rank = 1, degree = 1, rmax = 1, dmax = 4, margin = 2;
  std::string dimvec, format = "text";
  std::vector<int> degrees;
  bool quick = false;

  auto* omega = app.add_subcommand("omega", "compute one invariant Omega_ell(r, d)");
  omega->add_option("--ell", ell, "twist degree")->required()->check(CLI::NonNegativeNumber);
  omega->add_option("--rank", rank, "rank r")->required()->check(CLI::PositiveNumber);
  omega->add_option("--degree", degree, "degree d (normalized into the stable range)")
      ->default_val(1);
  omega->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "compute Omega_ell(r) for r = 1..rmax");
  table->add_option("--ell", ell, "twist degree")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--rmax", rmax, "largest rank")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* quiver =
      app.add_subcommand("quiver-omega", "compute the quiver invariant Omega_Q(m)");
  quiver->add_option("--ell", ell, "twist degree")->required()->check(CLI::NonNegativeNumber);
  quiver->add_option("--dimvec", dimvec, "dimension vector, e.g. \"1:1,2:1\"")->required();
  quiver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "run a consistency check");
  check->require_subcommand(1);
  auto* theorem2 = check->add_subcommand(
      "theorem2", "Omega_ell(r, d) equals the sum of Omega_Q over splitting types");
  theorem2->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  theorem2->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  theorem2->add_option("--degree", degree)->required();
  theorem2->add_option("--margin", margin, "window extension below vertex 1")
      ->check(CLI::NonNegativeNumber);
  auto* dindep = check->add_subcommand(
      "d-independence", "Omega_ell(r, d) agrees across the listed degrees");
  dindep->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  dindep->add_option("--rank", rank)->required()->check(CLI::PositiveNumber);
  dindep->add_option("--degrees", degrees, "comma-separated degrees")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  auto* shift = check->add_subcommand("shift", "Omega_Q(m) equals Omega_Q of the shifted vector");
  shift->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  shift->add_option("--dimvec", dimvec)->required();
  auto* hn = check->add_subcommand(
      "hn-product", "slope factors multiply back to the positive series");
  hn->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  hn->add_option("--rmax", rmax, "box rank bound")->default_val(3)->check(CLI::PositiveNumber);
  hn->add_option("--dmax", dmax, "box degree bound")->default_val(4)->check(CLI::PositiveNumber);

  auto* selftest =
      app.add_subcommand("selftest", "recompute the built-in reference tables");
  selftest->add_flag("--quick", quick, "ranks up to 3 only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(omega)) return run_omega(ell, rank, degree, format);
    if (app.got_subcommand(table)) return run_table(ell, rmax, format);
    if (app.got_subcommand(quiver)) return run_quiver_omega(ell, dimvec, format);
    if (app.got_subcommand(check)) {
      if (check->got_subcommand(theorem2))
        return run_check_quiver_sum(ell, rank, degree, margin);
      if (check->got_subcommand(dindep))
        return run_check_d_independence(ell, rank, degrees);
      if (check->got_subcommand(shift)) return run_check_shift(ell, dimvec);
      if (check->got_subcommand(hn)) return run_check_hn_product(ell, rmax, dmax);
    }
    if (app.got_subcommand(selftest)) return run_selftest(quick);
  } catch (const IntegralityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
