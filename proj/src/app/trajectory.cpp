#include "tcqed/app.hpp"

#include "tcqed/error.hpp"
#include "tcqed/measures.hpp"
#include "tcqed/oracle.hpp"

#include <cmath>
#include <future>
#include <string>

namespace tcqed {

void RunConfig::validate() const {
  params.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error(Errc::InvalidArgument, "t_max must be positive");
  if (steps < 2) throw Error(Errc::InvalidArgument, "steps must be at least 2");
  if (n_max > 0 && n_max < params.n + 2) {
    throw Error(Errc::TruncationTooSmall, "n_max must be at least n+2");
  }
  if (sweep) {
    if (sweep->values.empty()) throw Error(Errc::InvalidArgument, "sweep has no values");
    for (double v : sweep->values) {
      ModelParams probe = params;
      apply_parameter(probe, sweep->name, v);
      probe.validate();
    }
  }
}

void apply_parameter(ModelParams& p, std::string_view name, double value) {
  if (name == "theta") {
    p.theta = value;
  } else if (name == "big_omega") {
    p.big_omega = value;
  } else if (name == "gamma") {
    p.gamma = value;
  } else if (name == "n") {
    if (value < 0.0 || value != std::floor(value) || value > 1e6) {
      throw Error(Errc::InvalidArgument, "photon number must be a non-negative integer");
    }
    p.n = static_cast<int>(value);
  } else {
    throw Error(Errc::InvalidArgument, "unknown sweep parameter '" + std::string(name) +
                                           "' (expected theta, big_omega, gamma or n)");
  }
}

std::vector<TrajectoryRecord> run_trajectory(const RunConfig& cfg) {
  cfg.validate();
  std::optional<OracleSystem> oracle;
  if (cfg.with_oracle) oracle = make_oracle(cfg.params, cfg.n_max);

  std::vector<TrajectoryRecord> out;
  out.reserve(static_cast<std::size_t>(cfg.steps) + 1);
  for (int i = 0; i <= cfg.steps; ++i) {
    const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(cfg.steps);
    const AtomPairState a = atom_pair_state(cfg.params, t);
    TrajectoryRecord r;
    r.t = t;
    r.a1 = a.a1;
    r.a2 = a.a2;
    r.a3_re = a.a3.real();
    r.a3_im = a.a3.imag();
    r.a5 = a.a5;
    r.a6 = a.a6;
    r.negativity = negativity_closed(a);
    r.bell = bell_closed(a);
    if (oracle) {
      const CMatrix rho = partial_trace_field(oracle->full_state(t), oracle->field_dim());
      r.negativity_oracle = negativity_generic(rho);
      r.bell_oracle = bell_generic(rho);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<RunConfig> expand_sweep(const RunConfig& cfg) {
  if (!cfg.sweep) return {cfg};
  std::vector<RunConfig> out;
  for (double v : cfg.sweep->values) {
    RunConfig one = cfg;
    one.sweep.reset();
    apply_parameter(one.params, cfg.sweep->name, v);
    out.push_back(std::move(one));
  }
  return out;
}

std::vector<std::vector<TrajectoryRecord>> run_all(std::span<const RunConfig> cfgs) {
  std::vector<std::future<std::vector<TrajectoryRecord>>> jobs;
  jobs.reserve(cfgs.size());
  for (const auto& cfg : cfgs) jobs.push_back(std::async(std::launch::async, [&cfg] { return run_trajectory(cfg); }));
  std::vector<std::vector<TrajectoryRecord>> out;
  out.reserve(cfgs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace tcqed
