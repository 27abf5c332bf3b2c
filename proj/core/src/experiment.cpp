#include "ogplab/experiment.hpp"

#include <cstdio>
#include <cmath>
#include <filesystem>
#include <string>

#include "ogplab/discrepancy.hpp"
#include "ogplab/errors.hpp"
#include "ogplab/landscape.hpp"
#include "ogplab/online.hpp"

namespace ogplab {

namespace {

std::uint64_t parse_u64(std::string_view text) {
  if (text.empty()) throw ParameterError("empty seed");
  std::uint64_t v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw ParameterError("seed '" + std::string(text) + "' is not a number");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

Json run_task(const ExperimentConfig& c, std::uint64_t seed) {
  Json j;
  j["kind"] = c.kind;
  j["seed"] = seed;
  j["rows"] = c.rows;
  j["cols"] = c.cols;
  j["disorder"] = to_string(c.disorder.kind);
  if (c.disorder.kind == DisorderKind::kBernoulli) j["p"] = c.disorder.p;
  if (c.kind == "online") {
    const Instance inst = generate(c.rows, c.cols, c.disorder, seed);
    auto alg = make_online_algorithm(c.algorithm, c.lambda, seed);
    j["result"] = online_run_json(c.algorithm, seed, run_online(*alg, inst));
  } else if (c.kind == "exact") {
    j["result"] = to_json(exact_discrepancy(generate(c.rows, c.cols, c.disorder, seed)));
  } else if (c.kind == "sbp") {
    const auto sols = enumerate_solutions(generate(c.rows, c.cols, c.disorder, seed), c.kappa);
    j["kappa"] = c.kappa;
    j["num_solutions"] = sols.size();
  } else if (c.kind == "xi") {
    const auto ens = make_suffix_ensemble(c.rows, c.cols, c.disorder, seed, c.k, c.m);
    j["kappa"] = c.kappa;
    j["k"] = c.k;
    j["m"] = c.m;
    j["xi_count"] = count_xi(ens, c.kappa * std::sqrt(static_cast<double>(c.cols)));
  }
  return j;
}

}  // namespace

SeedRange parse_seed_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_u64(text);
    return {v, v};
  }
  return {parse_u64(text.substr(0, dots)), parse_u64(text.substr(dots + 2))};
}

void ExperimentConfig::validate() const {
  if (rows == 0 || cols == 0) throw ParameterError("rows and cols must be positive");
  if (disorder.kind == DisorderKind::kBernoulli && !(disorder.p > 0.0 && disorder.p < 1.0)) {
    throw ParameterError("bernoulli p must lie in (0,1)");
  }
  if (out_dir.empty()) throw ParameterError("out_dir must not be empty");
  if (kind == "online") {
    (void)make_online_algorithm(algorithm, lambda, 0);
  } else if (kind == "exact") {
    if (cols > kDefaultExactMaxN) throw CapacityError("exact experiments need cols <= 30");
  } else if (kind == "sbp") {
    if (disorder.kind != DisorderKind::kGaussian) throw UnsupportedDisorder("sbp needs gaussian disorder");
    if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
    if (cols > kDefaultEnumerateMaxN) throw CapacityError("sbp experiments need cols <= 26");
  } else if (kind == "xi") {
    if (disorder.kind != DisorderKind::kGaussian) throw UnsupportedDisorder("xi needs gaussian disorder");
    if (!(kappa > 0.0)) throw ParameterError("kappa must be positive");
    if (k < 1 || k > cols) throw ParameterError("k must lie in [1, cols]");
    if (m < 2) throw ParameterError("xi needs m >= 2");
    if (cols > kDefaultXiMaxN) throw CapacityError("xi experiments need cols <= 22");
  } else {
    throw ParameterError("unknown experiment kind '" + kind + "'");
  }
}

Json to_json(const ExperimentConfig& c) {
  Json j;
  j["kind"] = c.kind;
  j["rows"] = c.rows;
  j["cols"] = c.cols;
  j["disorder"] = to_string(c.disorder.kind);
  j["p"] = c.disorder.p;
  j["algorithm"] = c.algorithm;
  j["lambda"] = c.lambda;
  j["kappa"] = c.kappa;
  j["k"] = c.k;
  j["m"] = c.m;
  j["seeds"] = {{"first", c.seeds.first}, {"last", c.seeds.last}};
  j["out_dir"] = c.out_dir;
  return j;
}

ExperimentConfig experiment_config_from_json(const Json& j) {
  ExperimentConfig c;
  try {
    c.kind = j.value("kind", c.kind);
    c.rows = j.value("rows", c.rows);
    c.cols = j.value("cols", c.cols);
    c.disorder.kind = parse_disorder_kind(j.value("disorder", std::string("gaussian")));
    c.disorder.p = j.value("p", 0.5);
    c.algorithm = j.value("algorithm", c.algorithm);
    c.lambda = j.value("lambda", c.lambda);
    c.kappa = j.value("kappa", c.kappa);
    c.k = j.value("k", c.k);
    c.m = j.value("m", c.m);
    if (j.contains("seeds")) {
      const auto& s = j.at("seeds");
      if (s.is_string()) {
        c.seeds = parse_seed_range(s.get<std::string>());
      } else {
        c.seeds.first = s.at("first").get<std::uint64_t>();
        c.seeds.last = s.at("last").get<std::uint64_t>();
      }
    }
    c.out_dir = j.value("out_dir", c.out_dir);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("invalid experiment config: ") + e.what());
  }
  return c;
}

Json to_json(const Manifest& m) {
  Json j;
  j["config"] = to_json(m.config);
  Json tasks = Json::array();
  for (const auto& t : m.tasks) {
    Json r;
    r["seed"] = t.seed;
    r["file"] = t.file;
    r["status"] = t.status;
    r["fnv1a64"] = t.fnv1a64;
    if (!t.error.empty()) r["error"] = t.error;
    tasks.push_back(r);
  }
  j["tasks"] = tasks;
  return j;
}

Manifest manifest_from_json(const Json& j) {
  Manifest m;
  m.config = experiment_config_from_json(j.at("config"));
  for (const auto& r : j.at("tasks")) {
    TaskRecord t;
    t.seed = r.at("seed").get<std::uint64_t>();
    t.file = r.at("file").get<std::string>();
    t.status = r.at("status").get<std::string>();
    t.fnv1a64 = r.at("fnv1a64").get<std::string>();
    t.error = r.value("error", std::string());
    m.tasks.push_back(t);
  }
  return m;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Manifest run_experiment(const ExperimentConfig& config) {
  config.validate();
  Manifest manifest;
  manifest.config = config;
  const std::filesystem::path dir(config.out_dir);
  for (std::uint64_t i = 0; i < config.seeds.size(); ++i) {
    const std::uint64_t seed = config.seeds.first + i;
    TaskRecord task;
    task.seed = seed;
    task.file = config.kind + "_seed" + std::to_string(seed) + ".json";
    try {
      const std::string body = dump(run_task(config, seed));
      write_text_file((dir / task.file).string(), body);
      task.status = "ok";
      task.fnv1a64 = fnv1a64_hex(body);
    } catch (const std::exception& e) {
      task.status = "failed";
      task.error = e.what();
    }
    manifest.tasks.push_back(std::move(task));
  }
  write_text_file((dir / "manifest.json").string(), dump(to_json(manifest)));
  return manifest;
}

}  // namespace ogplab
