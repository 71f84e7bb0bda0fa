#include "decay/commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "decay/dynamics.hpp"
#include "decay/homotopy.hpp"
#include "decay/linear.hpp"
#include "decay/spec_io.hpp"
#include "decay/sweep.hpp"

namespace decay {

namespace {

std::string csv_vector(const OrthantVector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += format_double(x[i]);
  }
  return s;
}

SolverConfig solver_config(const CommandOptions& opt) {
  SolverConfig cfg;
  cfg.radius = opt.radius;
  cfg.epsilon = opt.epsilon;
  cfg.max_iterations = opt.max_iterations;
  cfg.tie_break = opt.tie_break;
  cfg.validate();
  return cfg;
}

void render_solve(const MapSpec& spec, const SolverConfig& cfg, const SolveReport& rep, std::ostream& out) {
  out << "map: " << spec.kind_name() << " (n=" << spec.dimension() << ")\n";
  out << "radius: " << format_double(cfg.radius) << "  epsilon: " << format_double(cfg.epsilon)
      << "  max iterations: " << cfg.max_iterations << '\n';
  out << "status: " << (rep.success ? "decay point found" : "no decay point found") << '\n';
  if (rep.success) {
    out << "s*: " << format(*rep.s_star) << '\n';
    out << "||s*||_1: " << format_double(one_norm(*rep.s_star)) << '\n';
    out << "margin: " << format_double(*rep.margin) << '\n';
  } else {
    out << "failure: " << to_string(*rep.failure_reason) << '\n';
    if (rep.offending_point) out << "unlabelable point: " << format(*rep.offending_point) << '\n';
  }
  out << "iterations: " << rep.iterations << "  levels: " << rep.levels << "  mesh: " << format_double(rep.mesh) << '\n';
}

void result_solve(const SolveReport& rep, std::ostream& out) {
  out << "success=" << (rep.success ? 1 : 0) << " iterations=" << rep.iterations << " levels=" << rep.levels;
  if (rep.success) {
    out << " margin=" << format_double(*rep.margin) << " s_star=" << csv_vector(*rep.s_star);
  } else {
    out << " failure_reason=" << to_string(*rep.failure_reason);
  }
}

// Runs `body`, mapping exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoCertificate;
  }
}

MapSpec read_spec(const CommandOptions& opt) {
  if (opt.map_path.empty()) throw SpecError("--map is required");
  return load_map_spec(opt.map_path);
}

}  // namespace

int cmd_find(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = read_spec(opt);
    const auto cfg = solver_config(opt);
    const auto rep = find_decay_point(build_map(spec), cfg);
    render_solve(spec, cfg, rep, out);
    out << "RESULT: command=find kind=" << spec.kind_name() << " n=" << spec.dimension()
        << " r=" << format_double(cfg.radius) << " epsilon=" << format_double(cfg.epsilon) << ' ';
    result_solve(rep, out);
    out << '\n';
    return rep.success ? kExitSuccess : kExitNoCertificate;
  });
}

int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(opt.stop_tol > 0.0)) throw std::invalid_argument("--stop-tol must be positive");
    if (opt.k_max < 1) throw std::invalid_argument("--k-max must be at least 1");
    const auto spec = read_spec(opt);
    const auto cfg = solver_config(opt);
    const auto cert = solve_problem1(build_map(spec), cfg, opt.stop_tol, opt.k_max);
    render_solve(spec, cfg, cert.solve, out);
    if (cert.trajectory) {
      const auto& tr = *cert.trajectory;
      out << "trajectory from s*: " << (tr.converged ? "converged" : "did not converge") << " after " << tr.steps_used
          << " steps (sup-norm " << format_double(tr.final_sup_norm) << ", stop-tol " << format_double(opt.stop_tol)
          << ")\n";
      out << "trajectory nonincreasing: " << (tr.nonincreasing ? "yes" : "no") << '\n';
    }
    if (cert.problem1_satisfied) {
      out << "certificate: the order interval [0, s*] = [0, " << format(*cert.solve.s_star)
          << "] lies in the region of attraction\n";
    } else {
      out << "certificate: none\n";
    }
    out << "RESULT: command=verify kind=" << spec.kind_name() << " n=" << spec.dimension()
        << " r=" << format_double(cfg.radius) << " epsilon=" << format_double(cfg.epsilon)
        << " certified=" << (cert.problem1_satisfied ? 1 : 0) << ' ';
    result_solve(cert.solve, out);
    if (cert.trajectory) {
      out << " trajectory_converged=" << (cert.trajectory->converged ? 1 : 0)
          << " trajectory_steps=" << cert.trajectory->steps_used;
    }
    out << '\n';
    return cert.problem1_satisfied ? kExitSuccess : kExitNoCertificate;
  });
}

int cmd_sweep(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepConfig cfg;
    cfg.family = parse_sweep_family(opt.family);
    cfg.dims = opt.dims;
    cfg.epsilons = opt.epsilons;
    cfg.radius = opt.radius;
    cfg.instances = opt.instances;
    cfg.seed0 = opt.seed;
    cfg.max_iterations = opt.max_iterations;
    cfg.tie_break = opt.tie_break;
    cfg.validate();

    std::ofstream file;
    if (!opt.out_path.empty()) {
      file.open(opt.out_path, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot write '" + opt.out_path + "'");
    }
    const auto rows = run_sweep(cfg);
    std::ostream& csv = opt.out_path.empty() ? out : file;
    std::ostream& summary = opt.out_path.empty() ? err : out;
    write_csv(csv, rows);

    std::size_t ok = 0, total_iterations = 0;
    for (const auto& row : rows) {
      ok += row.success ? 1 : 0;
      total_iterations += row.iterations;
    }
    summary << "sweep " << to_string(cfg.family) << ": " << ok << '/' << rows.size() << " solves succeeded\n";
    summary << "RESULT: command=sweep family=" << to_string(cfg.family) << " rows=" << rows.size()
            << " succeeded=" << ok << " total_iterations=" << total_iterations << '\n';
    return ok == rows.size() ? kExitSuccess : kExitNoCertificate;
  });
}

int cmd_spectral(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto spec = read_spec(opt);
    const auto* linear = std::get_if<LinearSpec>(&spec.kind);
    if (!linear) throw std::invalid_argument("spectral needs a linear map, got kind '" + spec.kind_name() + "'");
    const double rho = spectral_radius(linear->matrix);
    out << "map: linear (n=" << spec.dimension() << ")\n";
    out << "spectral radius: " << format_double(rho) << '\n';
    std::string perron = "none";
    if (rho > 0.0) {
      try {
        const auto v = perron_direction(linear->matrix);
        out << "Perron direction: " << format(v) << '\n';
        perron = csv_vector(v);
      } catch (const std::runtime_error& e) {
        out << "Perron direction: unavailable (" << e.what() << ")\n";
      }
    }
    const bool contractive = rho < 1.0 - kUnitRadiusSlack;
    out << "rho < 1: " << (contractive ? "yes" : "no") << '\n';
    out << "RESULT: command=spectral n=" << spec.dimension() << " rho=" << format_double(rho)
        << " contractive=" << (contractive ? 1 : 0) << " perron=" << perron << '\n';
    return contractive ? kExitSuccess : kExitNoCertificate;
  });
}

}  // namespace decay
