#include "decay/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "decay/homotopy.hpp"
#include "decay/linear.hpp"
#include "decay/spec_io.hpp"

namespace decay {

namespace {

struct Job {
  std::size_t n;
  double epsilon;
  std::optional<std::uint64_t> seed;
};

std::vector<Job> plan(const SweepConfig& cfg) {
  std::vector<Job> jobs;
  for (std::size_t n : cfg.dims)
    for (double eps : cfg.epsilons) {
      if (cfg.family == SweepFamily::Chain) {
        jobs.push_back({n, eps, std::nullopt});
      } else {
        for (std::size_t k = 0; k < cfg.instances; ++k) jobs.push_back({n, eps, cfg.seed0 + k});
      }
    }
  return jobs;
}

SweepRow run_job(const SweepConfig& cfg, const Job& job) {
  const auto start = std::chrono::steady_clock::now();
  const MonotoneMap t = cfg.family == SweepFamily::Chain ? make_chain_map(job.n)
                                                         : make_linear_map(random_contractive(job.n, cfg.rho, *job.seed));
  SolverConfig sc;
  sc.radius = cfg.radius;
  sc.epsilon = job.epsilon;
  sc.max_iterations = cfg.max_iterations;
  sc.tie_break = cfg.tie_break;
  const auto report = find_decay_point(t, sc);
  const auto stop = std::chrono::steady_clock::now();

  SweepRow row;
  row.family = to_string(cfg.family);
  row.n = job.n;
  row.epsilon = job.epsilon;
  row.radius = cfg.radius;
  row.seed = job.seed;
  row.iterations = report.iterations;
  row.success = report.success;
  row.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

}  // namespace

std::string to_string(SweepFamily family) {
  return family == SweepFamily::Chain ? "chain" : "linear-random";
}

SweepFamily parse_sweep_family(const std::string& name) {
  if (name == "chain") return SweepFamily::Chain;
  if (name == "linear-random") return SweepFamily::LinearRandom;
  throw std::invalid_argument("unknown sweep family '" + name + "' (expected chain or linear-random)");
}

void SweepConfig::validate() const {
  if (dims.empty()) throw std::invalid_argument("sweep needs at least one dimension");
  if (epsilons.empty()) throw std::invalid_argument("sweep needs at least one epsilon");
  for (std::size_t n : dims) {
    if (family == SweepFamily::Chain && n < 2) throw std::invalid_argument("chain maps need n >= 2");
    if (n < 1) throw std::invalid_argument("dimensions must be positive");
  }
  for (double eps : epsilons)
    if (!(eps > 0.0)) throw std::invalid_argument("epsilons must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (family == SweepFamily::LinearRandom && instances < 1) throw std::invalid_argument("instances must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto jobs = plan(cfg);
  std::vector<SweepRow> rows(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) rows[static_cast<std::size_t>(k)] = run_job(cfg, jobs[static_cast<std::size_t>(k)]);
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<SweepRow> rows;
  for (const auto& job : plan(cfg)) rows.push_back(run_job(cfg, job));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,n,epsilon,r,seed,iterations,success,ms\n";
  char ms[32];
  for (const auto& row : rows) {
    std::snprintf(ms, sizeof ms, "%.3f", row.ms);
    out << row.family << ',' << row.n << ',' << format_double(row.epsilon) << ',' << format_double(row.radius) << ','
        << (row.seed ? std::to_string(*row.seed) : std::string()) << ',' << row.iterations << ','
        << (row.success ? 1 : 0) << ',' << ms << '\n';
  }
}

}  // namespace decay
