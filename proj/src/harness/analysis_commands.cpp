// Copyright 2026 The pnm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pnm/harness/analysis_commands.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pnm/convergence/empirical_rate.hpp"
#include "pnm/core/error.hpp"
#include "pnm/core/parallel.hpp"
#include "pnm/core/rng.hpp"
#include "pnm/harness/output.hpp"
#include "pnm/harness/training.hpp"
#include "pnm/noise/amplification.hpp"
#include "pnm/noise/covariance.hpp"
#include "pnm/noise/momentum_variance.hpp"
#include "pnm/optim/pnm.hpp"
#include "pnm/pacbayes/pacbayes.hpp"
#include "pnm/posterior/lyapunov.hpp"
#include "pnm/posterior/stationary.hpp"
#include "pnm/problems/dataset_problems.hpp"
#include "pnm/problems/quadratic.hpp"

namespace pnm::harness {
namespace {

Vector linspace(double lo, double hi, std::size_t n) {
  Vector out(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out[static_cast<Eigen::Index>(i)] = lo + frac * (hi - lo);
  }
  return out;
}

Provenance provenance(const ExperimentConfig& config) {
  return {config_digest(config), config.seeds.front()};
}

Json with_header(const ExperimentConfig& config, Json body) {
  body["config"] = to_json(config);
  body["provenance"] = provenance(config).to_json();
  return body;
}

}  // namespace

Json posterior_command(const ExperimentConfig& config, const std::filesystem::path& dir) {
  const auto& spec = config.posterior;
  if (!(spec.eig_min > 0.0 && spec.eig_max >= spec.eig_min)) {
    throw ConfigError("posterior eigenvalues need 0 < eig_min <= eig_max");
  }
  if (!(spec.lr > 0.0)) throw ConfigError("posterior.lr must be > 0");
  RngStream problem_rng = RngStream(config.problem.data_seed).derive(7);
  const auto n = static_cast<Eigen::Index>(spec.dim);
  const auto model = problems::QuadraticModel::random_spd(linspace(spec.eig_min, spec.eig_max, spec.dim),
                                                          problem_rng, Vector::Zero(n));
  const Matrix& h = model.hessian_matrix();
  const bool hessian_noise = spec.noise_variance <= 0.0;
  const Matrix c = hessian_noise ? Matrix(h / static_cast<double>(spec.batch))
                                 : Matrix(Matrix::Identity(n, n) * spec.noise_variance);

  struct Variant {
    std::string label;
    optim::OptimizerSpec optimizer;
    posterior::PosteriorKind kind;
    double gamma;
    double beta0;
  };
  std::vector<Variant> variants{
      {"sgd", optim::HbConfig::sgd(spec.lr), posterior::PosteriorKind::kSgd, 1.0, 0.0},
      {"hb", optim::HbConfig{spec.lr, spec.beta1, 1.0 - spec.beta1, {}}, posterior::PosteriorKind::kHb, 1.0, 0.0}};
  for (double b : spec.beta0) {
    optim::PnmConfig p;
    p.lr = spec.lr * optim::pnm_normalization(b);
    p.beta0 = b;
    p.beta1 = spec.beta1;
    variants.push_back({"pnm_beta0_" + format_number(b), p, posterior::PosteriorKind::kPnm,
                        noise::amplification_factor(b), b});
  }

  posterior::StationaryOptions opts;
  opts.samples = spec.samples;
  opts.thin = spec.thin;
  opts.burn_in = spec.burn_in;
  const std::uint64_t seed = config.seeds.front();
  std::vector<posterior::StationaryEstimate> chains(variants.size() * spec.chains);
  parallel_for(chains.size(), config.threads, [&](std::size_t job) {
    // Chain c of every optimizer sees the same noise stream.
    RngStream rng = RngStream(seed).derive(job % spec.chains);
    chains[job] = posterior::simulate_stationary(model, c, variants[job / spec.chains].optimizer, opts, rng);
  });

  Json results = Json::array();
  CsvTable table;
  table.header = {"optimizer", "trace", "trace_ratio_to_sgd", "lyapunov_residual", "predicted_scalar"};
  double sgd_trace = 0.0;
  for (std::size_t v = 0; v < variants.size(); ++v) {
    std::vector<posterior::StationaryEstimate> parts(
        chains.begin() + static_cast<std::ptrdiff_t>(v * spec.chains),
        chains.begin() + static_cast<std::ptrdiff_t>((v + 1) * spec.chains));
    const auto est = posterior::merge_estimates(parts);
    const double trace = est.covariance.trace();
    if (v == 0) sgd_trace = trace;
    const Matrix target = variants[v].gamma * spec.lr * c;
    const double residual = posterior::lyapunov_residual(est.covariance, h, target);
    Json r = {{"optimizer", variants[v].label},
              {"config", optimizer_to_json(variants[v].optimizer)},
              {"covariance", matrix_to_json(est.covariance)},
              {"mean", vector_to_json(est.mean.values())},
              {"mean_standard_error", vector_to_json(est.mean_standard_error)},
              {"samples", est.samples},
              {"thin", est.thin},
              {"burn_in", est.burn_in},
              {"trace", trace},
              {"trace_ratio_to_sgd", trace / sgd_trace},
              {"amplification", variants[v].gamma},
              {"lyapunov_residual", residual}};
    std::string predicted;
    if (hessian_noise) {
      const double s = posterior::theoretical_posterior_covariance(variants[v].kind, spec.lr, spec.batch,
                                                                   variants[v].beta0);
      r["predicted_scalar"] = s;
      predicted = format_number(s);
    }
    table.add_row({variants[v].label, format_number(trace), format_number(trace / sgd_trace),
                   format_number(residual), predicted});
    results.push_back(r);
  }

  write_csv(dir / "posterior.csv", table, provenance(config));
  Json summary = with_header(config, {{"hessian", matrix_to_json(h)},
                                      {"noise_covariance", matrix_to_json(c)},
                                      {"results", results}});
  write_json(dir / "posterior_summary.json", summary);
  return summary;
}

Json pacbayes_command(const ExperimentConfig& config, const std::filesystem::path& dir) {
  const auto& spec = config.pacbayes;
  pacbayes::PacBayesSetting s;
  s.lr = spec.lr;
  s.batch = spec.batch;
  s.dataset_size = spec.dataset_size;
  s.prior_variance = spec.prior_variance;
  s.dim = spec.dim;
  s.delta = spec.delta;
  s.mean_norm_sq = spec.mean_norm_sq;
  s.validate();

  const auto opt = pacbayes::optimal_gamma(s);
  const double hi = spec.gamma_max > 0.0 ? spec.gamma_max : (opt.improves ? 2.0 * opt.gamma : 2.0);
  if (!(spec.gamma_min > 0.0 && hi > spec.gamma_min)) {
    throw ConfigError("pacbayes gamma range needs 0 < gamma_min < gamma_max");
  }
  CsvTable table;
  table.header = {"gamma", "kl", "kl_grad", "bound"};
  const Vector gammas = linspace(spec.gamma_min, hi, spec.points);
  for (Eigen::Index i = 0; i < gammas.size(); ++i) {
    const double g = gammas[i];
    const double kl = pacbayes::kl_q_gamma(g, s);
    table.add_row({format_number(g), format_number(kl), format_number(pacbayes::kl_q_gamma_grad(g, s)),
                   format_number(pacbayes::pac_bound(kl, s.dataset_size, s.delta))});
  }
  write_csv(dir / "pacbayes.csv", table, provenance(config));

  const double kl1 = pacbayes::kl_q_gamma(1.0, s);
  const double klo = pacbayes::kl_q_gamma(opt.gamma, s);
  Json summary = with_header(
      config, {{"critical_ratio", pacbayes::critical_ratio(s.lr, s.batch, s.prior_variance)},
               {"optimal_gamma", opt.gamma},
               {"improvement_predicted", opt.improves},
               {"prior", "N(0, prior_variance * I)"},
               {"kl_at_gamma_1", kl1},
               {"kl_at_optimal_gamma", klo},
               {"bound_at_gamma_1", pacbayes::pac_bound(kl1, s.dataset_size, s.delta)},
               {"bound_at_optimal_gamma", pacbayes::pac_bound(klo, s.dataset_size, s.delta)}});
  write_json(dir / "pacbayes_summary.json", summary);
  return summary;
}

Json noise_command(const ExperimentConfig& config, const std::filesystem::path& dir) {
  const auto& spec = config.noise;
  const std::uint64_t seed = config.seeds.front();
  std::vector<std::optional<noise::MomentumNoiseReport>> reports(spec.beta0.size() + 1);
  parallel_for(reports.size(), config.threads, [&](std::size_t i) {
    RngStream rng = RngStream(seed).derive(i);
    if (i == 0) {
      reports[i] = noise::stationary_momentum_variance(noise::MomentumKind::kHeavyBall, spec.beta1, 0.0,
                                                       spec.variance, spec.steps, rng);
    } else {
      reports[i] = noise::stationary_momentum_variance(noise::MomentumKind::kPnm, spec.beta1,
                                                       spec.beta0[i - 1], spec.variance, spec.steps, rng);
    }
  });

  auto variance_json = [](const noise::VarianceReport& v) {
    return Json{{"variance", v.variance}, {"samples", v.sample_count}, {"standard_error", v.standard_error}};
  };
  Json momentum = Json::array();
  CsvTable table;
  table.header = {"kind", "beta0", "direction_variance", "buffer_variance", "ratio", "ratio_se",
                  "predicted_ratio", "lag_one_correlation"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = *reports[i];
    const bool hb = i == 0;
    const double predicted = hb ? 1.0 : noise::amplification_factor(r.beta0);
    const double predicted_buffer =
        hb ? noise::momentum_noise_variance(r.beta1, 1.0 - r.beta1, r.sigma2)
           : noise::pnm_buffer_variance(r.beta1, r.sigma2);
    Json j = {{"kind", hb ? "hb" : "pnm"},
              {"beta0", r.beta0},
              {"beta1", r.beta1},
              {"burn_in", r.burn_in},
              {"direction", variance_json(r.direction)},
              {"buffer", variance_json(r.buffer)},
              {"predicted_buffer_variance", predicted_buffer},
              {"ratio", r.ratio},
              {"ratio_standard_error", r.ratio_standard_error},
              {"predicted_ratio", predicted},
              {"lag_one_correlation", r.lag_one_correlation}};
    if (r.warning) j["warning"] = *r.warning;
    momentum.push_back(j);
    table.add_row({hb ? "hb" : "pnm", format_number(r.beta0), format_number(r.direction.variance),
                   format_number(r.buffer.variance), format_number(r.ratio),
                   format_number(r.ratio_standard_error), format_number(predicted),
                   format_number(r.lag_one_correlation)});
  }
  write_csv(dir / "noise_momentum.csv", table, provenance(config));
  Json body = {{"momentum", momentum}};

  if (spec.covariance) {
    const auto& cs = spec.covariance_study;
    ProblemSpec ps;
    ps.name = "least_squares";
    ps.data_seed = config.problem.data_seed;
    ps.dataset.source = "linear";
    ps.dataset.samples = cs.samples;
    ps.dataset.features = cs.features;
    ps.dataset.scale_step = cs.scale_step;
    ps.dataset.noise = 1.0;
    ps.dataset.test_fraction = 0.0;
    const TrainingProblem problem = build_problem(ps, 1);
    const auto& data = *problem.train;
    const Vector theta = problems::LeastSquares::solve(data);
    const Matrix h = problems::LeastSquares::hessian(data);

    Json studies = Json::array();
    CsvTable cov_table;
    cov_table.header = {"batch", "trace", "pearson_diag_vs_hessian", "degenerate"};
    std::optional<double> previous_trace;
    for (std::size_t k = 0; k < cs.batches.size(); ++k) {
      const std::int64_t b = cs.batches[k];
      if (b < 1) throw ConfigError("covariance batch sizes must be >= 1");
      RngStream rng = RngStream(seed).derive(1000 + k);
      const auto est = noise::estimate_gradient_noise_covariance(*problem.model, data, theta,
                                                                 static_cast<std::size_t>(b), cs.draws, rng);
      Json j = {{"batch", b}, {"samples", est.sample_count}, {"degenerate", est.degenerate},
                {"trace", est.matrix.trace()}, {"covariance", matrix_to_json(est.matrix)}};
      double corr = std::nan("");
      if (!est.degenerate) {
        corr = noise::pearson_correlation(est.matrix.diagonal(), h.diagonal() / static_cast<double>(b));
        j["pearson_diag_vs_hessian"] = corr;
      }
      if (previous_trace) j["trace_ratio_to_previous"] = est.matrix.trace() / *previous_trace;
      previous_trace = est.matrix.trace();
      studies.push_back(j);
      cov_table.add_row({std::to_string(b), format_number(est.matrix.trace()), format_number(corr),
                         est.degenerate ? "1" : "0"});
    }
    write_csv(dir / "noise_covariance.csv", cov_table, provenance(config));
    body["covariance"] = {{"hessian", matrix_to_json(h)}, {"studies", studies}};
  }

  Json summary = with_header(config, body);
  write_json(dir / "noise_summary.json", summary);
  return summary;
}

Json convergence_command(const ExperimentConfig& config, const std::filesystem::path& dir) {
  const auto& spec = config.convergence;
  if (config.problem.name != "quadratic" && config.problem.name != "rosenbrock") {
    throw ConfigError("the convergence command needs a quadratic or rosenbrock problem");
  }
  const TrainingProblem problem = build_problem(config.problem, config.batch_size);
  convergence::RateOptions opts;
  opts.horizons = spec.horizons;
  opts.seeds = spec.seeds;
  opts.base_seed = config.seeds.front();
  opts.step_constant = spec.step_constant;
  opts.beta0 = spec.beta0;
  opts.beta1 = spec.beta1;
  opts.loss_lower_bound = spec.loss_lower_bound;
  opts.initial = initial_point(config.problem, problem, config.seeds.front());
  opts.track_hessian = spec.track_hessian;
  opts.threads = config.threads;
  opts.smoothness = spec.smoothness;
  if (opts.smoothness <= 0.0) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(problem.oracle->hessian(opts.initial), Eigen::EigenvaluesOnly);
    opts.smoothness = eig.eigenvalues().maxCoeff();
  }
  const auto result = convergence::empirical_rate(*problem.oracle, opts);

  CsvTable table;
  table.header = {"horizon", "step", "mean_min_grad_sq", "std_min_grad_sq", "bound",
                  "measured_smoothness", "measured_gradient_bound", "measured_noise_variance"};
  Json points = Json::array();
  bool below = true;
  for (const auto& p : result.points) {
    below = below && p.mean_min_grad_sq <= p.bound;
    table.add_row({std::to_string(p.horizon), format_number(p.step), format_number(p.mean_min_grad_sq),
                   format_number(p.std_min_grad_sq), format_number(p.bound),
                   format_number(p.measured_smoothness), format_number(p.measured_gradient_bound),
                   format_number(p.measured_noise_variance)});
    points.push_back({{"horizon", p.horizon},
                      {"step", p.step},
                      {"mean_min_grad_sq", p.mean_min_grad_sq},
                      {"std_min_grad_sq", p.std_min_grad_sq},
                      {"bound", p.bound},
                      {"measured_smoothness", p.measured_smoothness},
                      {"measured_gradient_bound", p.measured_gradient_bound},
                      {"measured_noise_variance", p.measured_noise_variance}});
  }
  write_csv(dir / "convergence.csv", table, provenance(config));
  Json summary = with_header(config, {{"points", points},
                                      {"slope", result.slope},
                                      {"intercept", result.intercept},
                                      {"seeds", result.seeds},
                                      {"step_rule_smoothness", opts.smoothness},
                                      {"all_below_bound", below}});
  write_json(dir / "convergence_summary.json", summary);
  return summary;
}

}  // namespace pnm::harness
