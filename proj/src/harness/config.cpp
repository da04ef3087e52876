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

#include "pnm/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pnm/core/error.hpp"

namespace pnm::harness {
namespace {

std::size_t positive_size(ObjectReader& r, const std::string& key, std::size_t fallback) {
  const std::int64_t v = r.integer(key, static_cast<std::int64_t>(fallback));
  if (v < 1) throw ConfigError(r.path_of(key) + " must be >= 1");
  return static_cast<std::size_t>(v);
}

std::size_t nonneg_size(ObjectReader& r, const std::string& key, std::size_t fallback) {
  const std::int64_t v = r.integer(key, static_cast<std::int64_t>(fallback));
  if (v < 0) throw ConfigError(r.path_of(key) + " must be >= 0");
  return static_cast<std::size_t>(v);
}

optim::WeightDecaySpec parse_weight_decay(const Json& json, const std::string& path) {
  ObjectReader r(json, path);
  optim::WeightDecaySpec wd;
  wd.mode = optim::parse_weight_decay_mode(r.string("mode", "none"));
  wd.lambda = r.number("lambda", 0.0);
  r.finish();
  return wd;
}

Json weight_decay_to_json(const optim::WeightDecaySpec& wd) {
  return {{"mode", std::string(optim::to_string(wd.mode))}, {"lambda", wd.lambda}};
}

void parse_quadratic(ObjectReader& r, QuadraticProblemSpec& q) {
  q.dim = positive_size(r, "dim", q.dim);
  q.eig_min = r.number("eig_min", q.eig_min);
  q.eig_max = r.number("eig_max", q.eig_max);
  q.noise_variance = r.number("noise_variance", q.noise_variance);
  q.initial_distance = r.number("initial_distance", q.initial_distance);
}

void parse_rosenbrock(ObjectReader& r, RosenbrockProblemSpec& rb) {
  const auto init = r.numbers("initial", {rb.x0, rb.y0});
  if (init.size() != 2) throw ConfigError(r.path_of("initial") + " must have two entries");
  rb.x0 = init[0];
  rb.y0 = init[1];
  rb.noise_half_width = r.number("noise_half_width", rb.noise_half_width);
}

DatasetSpec parse_dataset(const Json& json, const std::string& path) {
  ObjectReader r(json, path);
  DatasetSpec d;
  d.source = r.string("source", d.source);
  d.samples = positive_size(r, "samples", d.samples);
  d.noise = r.number("noise", d.noise);
  d.path = r.string("path", d.path);
  d.features = positive_size(r, "features", d.features);
  d.scale_step = r.number("scale_step", d.scale_step);
  d.test_fraction = r.number("test_fraction", d.test_fraction);
  if (r.has("label_noise")) {
    ObjectReader ln(r.raw("label_noise"), r.path_of("label_noise"));
    d.label_noise.kind = problems::parse_label_noise_kind(ln.string("kind", "symmetric"));
    d.label_noise.rate = ln.number("rate", 0.0);
    ln.finish();
  }
  r.finish();
  return d;
}

Json dataset_to_json(const DatasetSpec& d) {
  return {{"source", d.source},
          {"samples", d.samples},
          {"noise", d.noise},
          {"path", d.path},
          {"features", d.features},
          {"scale_step", d.scale_step},
          {"test_fraction", d.test_fraction},
          {"label_noise",
           {{"kind", std::string(problems::to_string(d.label_noise.kind))},
            {"rate", d.label_noise.rate}}}};
}

ProblemSpec parse_problem(const Json& json, const std::string& path) {
  ObjectReader r(json, path);
  ProblemSpec p;
  p.name = r.string("name", p.name);
  p.data_seed = r.unsigned_integer("data_seed", p.data_seed);
  if (p.name == "quadratic") {
    parse_quadratic(r, p.quadratic);
  } else if (p.name == "rosenbrock") {
    parse_rosenbrock(r, p.rosenbrock);
  } else if (p.name == "least_squares" || p.name == "logistic" || p.name == "mlp") {
    if (r.has("dataset")) p.dataset = parse_dataset(r.raw("dataset"), r.path_of("dataset"));
    if (p.name == "mlp") p.hidden = positive_size(r, "hidden", p.hidden);
  } else {
    throw ConfigError("unknown problem '" + p.name +
                      "' (expected quadratic, rosenbrock, least_squares, logistic or mlp)");
  }
  r.finish();
  return p;
}

Json problem_to_json(const ProblemSpec& p) {
  Json j = {{"name", p.name}, {"data_seed", p.data_seed}};
  if (p.name == "quadratic") {
    j["dim"] = p.quadratic.dim;
    j["eig_min"] = p.quadratic.eig_min;
    j["eig_max"] = p.quadratic.eig_max;
    j["noise_variance"] = p.quadratic.noise_variance;
    j["initial_distance"] = p.quadratic.initial_distance;
  } else if (p.name == "rosenbrock") {
    j["initial"] = {p.rosenbrock.x0, p.rosenbrock.y0};
    j["noise_half_width"] = p.rosenbrock.noise_half_width;
  } else {
    j["dataset"] = dataset_to_json(p.dataset);
    if (p.name == "mlp") j["hidden"] = p.hidden;
  }
  return j;
}

std::vector<std::uint64_t> parse_seeds(ObjectReader& r) {
  if (!r.has("seeds")) {
    r.integers("seeds", {});
    return {1};
  }
  const Json& v = r.raw("seeds");
  if (!v.is_array() || v.empty()) throw ConfigError(r.path_of("seeds") + " must be a non-empty array");
  std::vector<std::uint64_t> out;
  for (const auto& e : v) {
    if (e.is_number_unsigned()) {
      out.push_back(e.get<std::uint64_t>());
    } else if (e.is_number_integer() && e.get<std::int64_t>() >= 0) {
      out.push_back(static_cast<std::uint64_t>(e.get<std::int64_t>()));
    } else {
      throw ConfigError(r.path_of("seeds") + " must hold non-negative integers");
    }
  }
  return out;
}

Json sizes_to_json(const std::vector<std::int64_t>& v) { return Json(v); }

}  // namespace

bool ProblemSpec::uses_dataset() const {
  return name == "least_squares" || name == "logistic" || name == "mlp";
}

double LrSchedule::multiplier(std::int64_t step) const {
  double m = 1.0;
  for (auto milestone : milestones) {
    if (step >= milestone) m *= factor;
  }
  return m;
}

optim::OptimizerSpec parse_optimizer(const Json& json, const std::string& path) {
  ObjectReader r(json, path);
  const std::string name = r.string("name", "pnm");
  optim::WeightDecaySpec wd;
  if (r.has("weight_decay")) wd = parse_weight_decay(r.raw("weight_decay"), r.path_of("weight_decay"));

  optim::OptimizerSpec spec;
  if (name == "sgd") {
    spec = optim::HbConfig{r.number("lr", 0.1), 0.0, 1.0, wd};
  } else if (name == "hb") {
    optim::HbConfig c;
    c.lr = r.number("lr", c.lr);
    c.beta1 = r.number("beta1", c.beta1);
    c.beta3 = r.number("beta3", c.beta3);
    c.weight_decay = wd;
    spec = c;
  } else if (name == "pnm") {
    optim::PnmConfig c;
    c.lr = r.number("lr", c.lr);
    c.beta0 = r.number("beta0", c.beta0);
    c.beta1 = r.number("beta1", c.beta1);
    c.weight_decay = wd;
    spec = c;
  } else if (name == "adapnm") {
    optim::AdaPnmConfig c;
    c.lr = r.number("lr", c.lr);
    c.beta0 = r.number("beta0", c.beta0);
    c.beta1 = r.number("beta1", c.beta1);
    c.beta2 = r.number("beta2", c.beta2);
    c.eps = r.number("eps", c.eps);
    c.amsgrad = r.boolean("amsgrad", c.amsgrad);
    c.weight_decay = wd;
    spec = c;
  } else if (name == "adam" || name == "amsgrad") {
    optim::AdamConfig c;
    c.lr = r.number("lr", c.lr);
    c.beta1 = r.number("beta1", c.beta1);
    c.beta2 = r.number("beta2", c.beta2);
    c.eps = r.number("eps", c.eps);
    c.amsgrad = name == "amsgrad";
    c.weight_decay = wd;
    spec = c;
  } else {
    throw ConfigError("unknown optimizer '" + name + "' at " + path +
                      " (expected sgd, hb, pnm, adapnm, adam or amsgrad)");
  }
  r.finish();
  try {
    optim::validate(spec);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return spec;
}

Json optimizer_to_json(const optim::OptimizerSpec& spec) {
  const std::string name = optim::optimizer_name(spec);
  Json j = {{"name", name}, {"weight_decay", weight_decay_to_json(optim::weight_decay(spec))}};
  std::visit(
      [&j, &name](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        j["lr"] = c.lr;
        if constexpr (std::is_same_v<T, optim::HbConfig>) {
          if (name == "hb") {
            j["beta1"] = c.beta1;
            j["beta3"] = c.beta3;
          }
        } else if constexpr (std::is_same_v<T, optim::PnmConfig>) {
          j["beta0"] = c.beta0;
          j["beta1"] = c.beta1;
        } else if constexpr (std::is_same_v<T, optim::AdaPnmConfig>) {
          j["beta0"] = c.beta0;
          j["beta1"] = c.beta1;
          j["beta2"] = c.beta2;
          j["eps"] = c.eps;
          j["amsgrad"] = c.amsgrad;
        } else {
          j["beta1"] = c.beta1;
          j["beta2"] = c.beta2;
          j["eps"] = c.eps;
        }
      },
      spec);
  return j;
}

void ExperimentConfig::validate() const {
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (seeds.empty()) throw ConfigError("seeds must not be empty");
  if (eval_every < 0) throw ConfigError("eval_every must be >= 0");
  if (!(lr_schedule.factor > 0.0)) throw ConfigError("lr_schedule.factor must be > 0");
  optim::validate(optimizer);
  if (problem.name == "quadratic") {
    const auto& q = problem.quadratic;
    if (!(q.eig_min > 0.0 && q.eig_max >= q.eig_min)) {
      throw ConfigError("problem eigenvalues need 0 < eig_min <= eig_max");
    }
    if (q.noise_variance < 0.0) throw ConfigError("problem.noise_variance must be >= 0");
  }
  if (problem.name == "rosenbrock" && problem.rosenbrock.noise_half_width < 0.0) {
    throw ConfigError("problem.noise_half_width must be >= 0");
  }
  if (problem.uses_dataset()) {
    const auto& d = problem.dataset;
    if (d.source != "two_moons" && d.source != "linear" && d.source != "csv") {
      throw ConfigError("problem.dataset.source must be two_moons, linear or csv");
    }
    if (d.source == "csv" && d.path.empty()) throw ConfigError("problem.dataset.path is required for csv");
    if (!(d.test_fraction >= 0.0 && d.test_fraction < 1.0)) {
      throw ConfigError("problem.dataset.test_fraction must lie in [0, 1)");
    }
    if (d.noise < 0.0) throw ConfigError("problem.dataset.noise must be >= 0");
    d.label_noise.validate();
    if (problem.name == "least_squares" && d.source == "two_moons") {
      throw ConfigError("least_squares needs a regression dataset (linear or csv)");
    }
    if (problem.name != "least_squares" && d.source == "linear") {
      throw ConfigError("the linear dataset is for least_squares only");
    }
  }
  if (grid.lr.empty() || grid.weight_decay.empty()) throw ConfigError("grid.lr and grid.weight_decay must be non-empty");
  if (sweep.beta0.empty()) throw ConfigError("sweep_beta0.values must be non-empty");
  optim::validate(label_noise.baseline);
  if (posterior.samples < 10000) throw ConfigError("posterior.samples must be >= 10000");
  if (posterior.chains < 1) throw ConfigError("posterior.chains must be >= 1");
  if (noise.steps < 10000) throw ConfigError("noise.steps must be >= 10000");
  if (convergence.horizons.size() < 2) throw ConfigError("convergence.horizons needs two or more entries");
}

ExperimentConfig parse_config(const Json& json) {
  ObjectReader r(json, "config");
  ExperimentConfig c;
  c.name = r.string("name", c.name);
  if (r.has("problem")) c.problem = parse_problem(r.raw("problem"), "config.problem");
  if (r.has("optimizer")) c.optimizer = parse_optimizer(r.raw("optimizer"), "config.optimizer");
  c.steps = r.integer("steps", c.steps);
  c.batch_size = positive_size(r, "batch_size", c.batch_size);
  c.seeds = parse_seeds(r);
  c.output_dir = r.string("output_dir", c.output_dir);
  c.snapshots = r.boolean("snapshots", c.snapshots);
  c.eval_every = r.integer("eval_every", c.eval_every);
  c.threads = positive_size(r, "threads", c.threads);

  if (r.has("lr_schedule")) {
    ObjectReader s(r.raw("lr_schedule"), "config.lr_schedule");
    c.lr_schedule.milestones = s.integers("milestones", {});
    c.lr_schedule.factor = s.number("factor", c.lr_schedule.factor);
    s.finish();
  }
  if (r.has("sweep_beta0")) {
    ObjectReader s(r.raw("sweep_beta0"), "config.sweep_beta0");
    c.sweep.beta0 = s.numbers("values", c.sweep.beta0);
    s.finish();
  }
  if (r.has("grid")) {
    ObjectReader s(r.raw("grid"), "config.grid");
    c.grid.lr = s.numbers("lr", c.grid.lr);
    c.grid.weight_decay = s.numbers("weight_decay", c.grid.weight_decay);
    c.grid.mode = optim::parse_weight_decay_mode(s.string("mode", "l2"));
    s.finish();
  }
  if (r.has("label_noise")) {
    ObjectReader s(r.raw("label_noise"), "config.label_noise");
    if (s.has("baseline")) {
      c.label_noise.baseline = parse_optimizer(s.raw("baseline"), "config.label_noise.baseline");
    }
    s.finish();
  }
  if (r.has("posterior")) {
    ObjectReader s(r.raw("posterior"), "config.posterior");
    auto& p = c.posterior;
    p.dim = positive_size(s, "dim", p.dim);
    p.eig_min = s.number("eig_min", p.eig_min);
    p.eig_max = s.number("eig_max", p.eig_max);
    p.lr = s.number("lr", p.lr);
    p.batch = positive_size(s, "batch", p.batch);
    p.noise_variance = s.number("noise_variance", p.noise_variance);
    p.beta0 = s.numbers("beta0", p.beta0);
    p.beta1 = s.number("beta1", p.beta1);
    p.samples = positive_size(s, "samples", p.samples);
    p.thin = nonneg_size(s, "thin", p.thin);
    p.burn_in = nonneg_size(s, "burn_in", p.burn_in);
    p.chains = positive_size(s, "chains", p.chains);
    s.finish();
  }
  if (r.has("pacbayes")) {
    ObjectReader s(r.raw("pacbayes"), "config.pacbayes");
    auto& p = c.pacbayes;
    p.lr = s.number("lr", p.lr);
    p.batch = positive_size(s, "batch", p.batch);
    p.dataset_size = positive_size(s, "dataset_size", p.dataset_size);
    p.prior_variance = s.number("prior_variance", p.prior_variance);
    p.dim = positive_size(s, "dim", p.dim);
    p.delta = s.number("delta", p.delta);
    p.mean_norm_sq = s.number("mean_norm_sq", p.mean_norm_sq);
    p.gamma_min = s.number("gamma_min", p.gamma_min);
    p.gamma_max = s.number("gamma_max", p.gamma_max);
    p.points = positive_size(s, "points", p.points);
    s.finish();
  }
  if (r.has("noise")) {
    ObjectReader s(r.raw("noise"), "config.noise");
    auto& n = c.noise;
    n.beta1 = s.number("beta1", n.beta1);
    n.beta0 = s.numbers("beta0", n.beta0);
    n.variance = s.number("variance", n.variance);
    n.steps = positive_size(s, "steps", n.steps);
    n.covariance = s.boolean("covariance", n.covariance);
    if (s.has("covariance_study")) {
      ObjectReader cs(s.raw("covariance_study"), "config.noise.covariance_study");
      auto& k = n.covariance_study;
      k.samples = positive_size(cs, "samples", k.samples);
      k.features = positive_size(cs, "features", k.features);
      k.scale_step = cs.number("scale_step", k.scale_step);
      k.batches = cs.integers("batches", k.batches);
      k.draws = positive_size(cs, "draws", k.draws);
      cs.finish();
    }
    s.finish();
  }
  if (r.has("convergence")) {
    ObjectReader s(r.raw("convergence"), "config.convergence");
    auto& k = c.convergence;
    k.horizons = s.integers("horizons", k.horizons);
    k.seeds = positive_size(s, "seeds", k.seeds);
    k.step_constant = s.number("step_constant", k.step_constant);
    k.smoothness = s.number("smoothness", k.smoothness);
    k.beta0 = s.number("beta0", k.beta0);
    k.beta1 = s.number("beta1", k.beta1);
    k.loss_lower_bound = s.number("loss_lower_bound", k.loss_lower_bound);
    k.track_hessian = s.boolean("track_hessian", k.track_hessian);
    s.finish();
  }
  r.finish();
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json json;
  try {
    json = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(json);
}

Json to_json(const ExperimentConfig& c) {
  Json j;
  j["name"] = c.name;
  j["problem"] = problem_to_json(c.problem);
  j["optimizer"] = optimizer_to_json(c.optimizer);
  j["steps"] = c.steps;
  j["batch_size"] = c.batch_size;
  j["seeds"] = c.seeds;
  j["snapshots"] = c.snapshots;
  j["eval_every"] = c.eval_every;
  j["lr_schedule"] = {{"milestones", sizes_to_json(c.lr_schedule.milestones)},
                      {"factor", c.lr_schedule.factor}};
  j["sweep_beta0"] = {{"values", c.sweep.beta0}};
  j["grid"] = {{"lr", c.grid.lr},
               {"weight_decay", c.grid.weight_decay},
               {"mode", std::string(optim::to_string(c.grid.mode))}};
  j["label_noise"] = {{"baseline", optimizer_to_json(c.label_noise.baseline)}};
  const auto& p = c.posterior;
  j["posterior"] = {{"dim", p.dim},       {"eig_min", p.eig_min},   {"eig_max", p.eig_max},
                    {"lr", p.lr},         {"batch", p.batch},       {"noise_variance", p.noise_variance},
                    {"beta0", p.beta0},   {"beta1", p.beta1},       {"samples", p.samples},
                    {"thin", p.thin},     {"burn_in", p.burn_in},   {"chains", p.chains}};
  const auto& b = c.pacbayes;
  j["pacbayes"] = {{"lr", b.lr},
                   {"batch", b.batch},
                   {"dataset_size", b.dataset_size},
                   {"prior_variance", b.prior_variance},
                   {"dim", b.dim},
                   {"delta", b.delta},
                   {"mean_norm_sq", b.mean_norm_sq},
                   {"gamma_min", b.gamma_min},
                   {"gamma_max", b.gamma_max},
                   {"points", b.points}};
  const auto& n = c.noise;
  const auto& k = n.covariance_study;
  j["noise"] = {{"beta1", n.beta1},
                {"beta0", n.beta0},
                {"variance", n.variance},
                {"steps", n.steps},
                {"covariance", n.covariance},
                {"covariance_study",
                 {{"samples", k.samples},
                  {"features", k.features},
                  {"scale_step", k.scale_step},
                  {"batches", sizes_to_json(k.batches)},
                  {"draws", k.draws}}}};
  const auto& v = c.convergence;
  j["convergence"] = {{"horizons", sizes_to_json(v.horizons)},
                      {"seeds", v.seeds},
                      {"step_constant", v.step_constant},
                      {"smoothness", v.smoothness},
                      {"beta0", v.beta0},
                      {"beta1", v.beta1},
                      {"loss_lower_bound", v.loss_lower_bound},
                      {"track_hessian", v.track_hessian}};
  return j;
}

std::string config_digest(const ExperimentConfig& config) {
  return hex64(fnv1a64(to_json(config).dump()));
}

}  // namespace pnm::harness
