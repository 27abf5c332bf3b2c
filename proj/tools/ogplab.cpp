// ogplab command-line front end. Every subcommand prints JSON (or CSV for
// histograms) to stdout, or to --out. Relative --out paths are resolved
// against $OGPLAB_OUT_DIR when it is set.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ogplab/ogplab.hpp"

using namespace ogplab;
namespace fs = std::filesystem;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
  std::string out;
};

struct InstanceArgs {
  std::size_t rows = 4;
  std::size_t cols = 16;
  std::string disorder = "gaussian";
  double p = 0.5;
};

std::string resolve_out(const std::string& out) {
  if (out.empty() || out == "-") return out;
  const char* base = std::getenv("OGPLAB_OUT_DIR");
  fs::path p(out);
  if (base != nullptr && *base != '\0' && p.is_relative()) p = fs::path(base) / p;
  return p.string();
}

void emit_text(const Common& c, const std::string& text) {
  const auto path = resolve_out(c.out);
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

void emit(const Common& c, const Json& j) { emit_text(c, dump(j)); }

Disorder make_disorder(const InstanceArgs& a) {
  const auto kind = parse_disorder_kind(a.disorder);
  return kind == DisorderKind::kBernoulli ? Disorder::bernoulli(a.p) : Disorder{kind, 0.5};
}

void add_common(CLI::App* app, Common& c, bool samples = false) {
  app->add_option("--seed", c.seed, "Random seed");
  if (samples) app->add_option("--samples", c.samples, "Monte Carlo samples");
  app->add_option("--out", c.out, "Output file (default stdout)");
}

void add_instance(CLI::App* app, InstanceArgs& a) {
  app->add_option("--rows,-M", a.rows, "Rows M");
  app->add_option("--cols,-n", a.cols, "Columns n");
  app->add_option("--disorder", a.disorder, "gaussian | rademacher | bernoulli")
      ->check(CLI::IsMember({"gaussian", "rademacher", "bernoulli"}));
  app->add_option("--p", a.p, "Bernoulli mean");
}

Instance load_or_generate(const std::string& in, const InstanceArgs& a, std::uint64_t seed) {
  if (!in.empty()) return load_instance(in);
  return generate(a.rows, a.cols, make_disorder(a), seed);
}

Json exponent_json(const ExponentReport& r) { return to_json(r); }

CovarianceSpec cov_spec(std::size_t m, double beta, double eta, const std::vector<double>& eta_vec) {
  CovarianceSpec s{m, beta, eta, eta_vec};
  if (!eta_vec.empty() && eta == 0.0) {
    for (double e : eta_vec) s.eta = std::max(s.eta, e);
  }
  return s;
}

BoxOptions box_options(const std::string& method, const Common& c) {
  BoxOptions o;
  o.method = method == "mc" ? BoxMethod::kMonteCarlo : BoxMethod::kQuadrature;
  o.samples = c.samples;
  o.seed = c.seed;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ogplab: discrepancy, online balancing and overlap-gap experiments"};
  app.require_subcommand(1);

  // gen
  Common gen_c;
  InstanceArgs gen_i;
  std::string gen_enc = "csv";
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  add_common(gen, gen_c);
  add_instance(gen, gen_i);
  gen->add_option("--encoding", gen_enc, "csv | f64le")->check(CLI::IsMember({"csv", "f64le"}));
  gen->callback([&] {
    const auto inst = generate(gen_i.rows, gen_i.cols, make_disorder(gen_i), gen_c.seed);
    const auto enc = gen_enc == "csv" ? BodyEncoding::kCsv : BodyEncoding::kFloat64LE;
    const auto path = resolve_out(gen_c.out);
    if (path.empty() || path == "-") {
      write_instance(std::cout, inst, enc);
    } else {
      save_instance(path, inst, enc);
    }
  });

  // disc
  Common disc_c;
  InstanceArgs disc_i;
  std::string disc_in, disc_sigma;
  bool disc_exact = false;
  std::size_t disc_max_n = kDefaultExactMaxN;
  auto* disc = app.add_subcommand("disc", "Discrepancy of a given sign vector, or the exact minimum");
  add_common(disc, disc_c);
  add_instance(disc, disc_i);
  disc->add_option("--in", disc_in, "Instance file (otherwise generated from --seed)");
  disc->add_option("--sigma", disc_sigma, "Sign vector over {+,-}");
  disc->add_flag("--exact", disc_exact, "Exhaustive minimum (default when --sigma is absent)");
  disc->add_option("--max-n", disc_max_n, "Refuse exhaustive search above this n");
  disc->callback([&] {
    const auto inst = load_or_generate(disc_in, disc_i, disc_c.seed);
    if (!disc_sigma.empty() && !disc_exact) {
      emit(disc_c, to_json(disc_value(inst, SignVector::parse(disc_sigma))));
    } else {
      emit(disc_c, to_json(exact_discrepancy(inst, disc_max_n)));
    }
  });

  // sbp
  Common sbp_c;
  InstanceArgs sbp_i;
  std::string sbp_in, sbp_sigma;
  double sbp_kappa = 1.0;
  std::size_t sbp_max_n = kDefaultEnumerateMaxN;
  bool sbp_list = false;
  auto* sbp = app.add_subcommand("sbp", "Perceptron membership or solution-set enumeration");
  add_common(sbp, sbp_c);
  add_instance(sbp, sbp_i);
  sbp->add_option("--in", sbp_in, "Instance file (otherwise generated from --seed)");
  sbp->add_option("--kappa", sbp_kappa, "Margin kappa");
  sbp->add_option("--sigma", sbp_sigma, "Test membership of this sign vector");
  sbp->add_option("--max-n", sbp_max_n, "Refuse enumeration above this n");
  sbp->add_flag("--list", sbp_list, "Include every solution in the output");
  sbp->callback([&] {
    const auto inst = load_or_generate(sbp_in, sbp_i, sbp_c.seed);
    Json j;
    j["kappa"] = sbp_kappa;
    j["threshold"] = sbp_kappa * std::sqrt(static_cast<double>(inst.cols()));
    if (!sbp_sigma.empty()) {
      const auto sigma = SignVector::parse(sbp_sigma);
      j["sigma"] = sigma.str();
      j["member"] = sbp_membership(inst, sigma, sbp_kappa);
      j["disc"] = disc_value(inst, sigma).value;
    } else {
      const auto sols = enumerate_solutions(inst, sbp_kappa, sbp_max_n);
      j["num_solutions"] = sols.size();
      if (sbp_list) {
        Json arr = Json::array();
        for (const auto& s : sols) arr.push_back(s.str());
        j["solutions"] = arr;
      }
    }
    emit(sbp_c, j);
  });

  // online
  Common on_c;
  InstanceArgs on_i;
  on_i.rows = 32;
  on_i.cols = 1024;
  std::string on_alg = "potential", on_seeds, on_in;
  double on_lambda = 0.0;
  auto* online = app.add_subcommand("online", "Run an online signing algorithm over a seed range");
  add_common(online, on_c);
  add_instance(online, on_i);
  online->add_option("--alg", on_alg, "greedy | potential | random")
      ->check(CLI::IsMember(online_algorithm_names()));
  online->add_option("--lambda", on_lambda, "Potential parameter (default 1/sqrt(M))");
  online->add_option("--seeds", on_seeds, "Seed range A..B (overrides --seed)");
  online->add_option("--in", on_in, "Instance file instead of generated instances");
  online->callback([&] {
    Json runs = Json::array();
    if (!on_in.empty()) {
      const auto inst = load_instance(on_in);
      auto alg = make_online_algorithm(on_alg, on_lambda, on_c.seed);
      runs.push_back(online_run_json(on_alg, on_c.seed, run_online(*alg, inst)));
    } else {
      const auto range = on_seeds.empty() ? SeedRange{on_c.seed, on_c.seed} : parse_seed_range(on_seeds);
      for (std::uint64_t s = range.first; !range.empty() && s <= range.last; ++s) {
        const auto inst = generate(on_i.rows, on_i.cols, make_disorder(on_i), s);
        auto alg = make_online_algorithm(on_alg, on_lambda, s);
        runs.push_back(online_run_json(on_alg, s, run_online(*alg, inst)));
        if (s == range.last) break;
      }
    }
    emit(on_c, runs);
  });

  // landscape
  auto* land = app.add_subcommand("landscape", "Solution-space geometry");
  land->require_subcommand(1);

  Common hist_c;
  InstanceArgs hist_i;
  hist_i.rows = 2;
  hist_i.cols = 14;
  double hist_kappa = 1.0;
  std::size_t hist_bins = 20;
  auto* hist = land->add_subcommand("histogram", "Pairwise overlap histogram of S(kappa) as CSV");
  add_common(hist, hist_c);
  add_instance(hist, hist_i);
  hist->add_option("--kappa", hist_kappa, "Margin kappa");
  hist->add_option("--bins", hist_bins, "Number of bins on [-1, 1]");
  hist->callback([&] {
    const auto inst = generate(hist_i.rows, hist_i.cols, make_disorder(hist_i), hist_c.seed);
    const auto sols = enumerate_solutions(inst, hist_kappa);
    emit_text(hist_c, histogram_to_csv(overlap_histogram(sols, hist_bins)));
  });

  Common xs_c;
  InstanceArgs xs_i;
  xs_i.rows = 4;
  xs_i.cols = 14;
  std::size_t xs_k = 4, xs_m = 2;
  double xs_kappa = 1.0;
  bool xs_count = false;
  auto* xi_sbp = land->add_subcommand("xi-sbp", "Search the suffix-resampled perceptron ensemble");
  add_common(xi_sbp, xs_c);
  add_instance(xi_sbp, xs_i);
  xi_sbp->add_option("--k", xs_k, "Resampled columns");
  xi_sbp->add_option("--m", xs_m, "Ensemble members");
  xi_sbp->add_option("--kappa", xs_kappa, "Margin kappa");
  xi_sbp->add_flag("--count", xs_count, "Also count every tuple");
  xi_sbp->callback([&] {
    const auto ens = make_suffix_ensemble(xs_i.rows, xs_i.cols, Disorder::gaussian(), xs_c.seed, xs_k, xs_m);
    const auto cert = search_xi_sbp(ens, xs_kappa);
    Json j;
    j["exists"] = cert.has_value();
    if (cert) j["certificate"] = to_json(*cert);
    if (xs_count) j["count"] = count_xi(ens, xs_kappa * std::sqrt(static_cast<double>(xs_i.cols)));
    emit(xs_c, j);
  });

  Common xd_c;
  InstanceArgs xd_i;
  xd_i.rows = 4;
  xd_i.cols = 14;
  xd_i.disorder = "rademacher";
  std::size_t xd_m = 2;
  double xd_cu = kCu;
  auto* xi_disc = land->add_subcommand("xi-disc", "Search the suffix-resampled discrepancy ensemble (k = M)");
  add_common(xi_disc, xd_c);
  add_instance(xi_disc, xd_i);
  xi_disc->add_option("--m", xd_m, "Ensemble members");
  xi_disc->add_option("--c-u", xd_cu, "Threshold constant: disc <= c_u sqrt(M)");
  xi_disc->callback([&] {
    const auto ens = make_suffix_ensemble(xd_i.rows, xd_i.cols, make_disorder(xd_i), xd_c.seed, xd_i.rows, xd_m);
    const auto cert = search_xi_disc(ens, xd_cu);
    Json j;
    j["exists"] = cert.has_value();
    if (cert) j["certificate"] = to_json(*cert);
    emit(xd_c, j);
  });

  Common ogp_c;
  InstanceArgs ogp_i;
  ogp_i.rows = 3;
  ogp_i.cols = 12;
  OgpWindow ogp_w;
  std::size_t ogp_q = 4;
  std::vector<double> ogp_angles;
  std::size_t ogp_max_n = 0;
  auto* ogp = land->add_subcommand("ogp", "Search an interpolated ensemble for forbidden m-tuples");
  add_common(ogp, ogp_c);
  add_instance(ogp, ogp_i);
  ogp->add_option("--m", ogp_w.m, "Tuple size");
  ogp->add_option("--beta", ogp_w.beta, "Upper overlap");
  ogp->add_option("--eta", ogp_w.eta, "Window width");
  ogp->add_option("--K", ogp_w.K, "Discrepancy bound");
  ogp->add_option("--q", ogp_q, "Angle grid size Q (grid j pi / 2Q)");
  ogp->add_option("--angles", ogp_angles, "Explicit angle list (overrides --q)");
  ogp->add_option("--max-n", ogp_max_n, "Capacity override");
  ogp->callback([&] {
    auto angles = ogp_angles.empty() ? default_angle_grid(ogp_q) : ogp_angles;
    const auto ens = make_interpolated_ensemble(ogp_i.rows, ogp_i.cols, ogp_c.seed, ogp_w.m, angles);
    const auto cert = search_ogp_tuples(ens, ogp_w, ogp_max_n);
    Json j;
    j["exists"] = cert.has_value();
    if (cert) j["certificate"] = to_json(*cert);
    emit(ogp_c, j);
  });

  Common st_c;
  StabilityConfig st_cfg;
  std::string st_alg = "greedy", st_omega = "shared";
  double st_lambda = 0.0;
  auto* stab = land->add_subcommand("stability", "Hamming distance of outputs on correlated instances");
  add_common(stab, st_c);
  stab->add_option("--alg", st_alg, "greedy | potential | random")->check(CLI::IsMember(online_algorithm_names()));
  stab->add_option("--lambda", st_lambda, "Potential parameter");
  stab->add_option("--rows,-M", st_cfg.rows, "Rows M");
  stab->add_option("--cols,-n", st_cfg.cols, "Columns n");
  stab->add_option("--rho", st_cfg.rho, "Entrywise correlation in [0, 1]");
  stab->add_option("--K", st_cfg.K, "Success threshold");
  stab->add_option("--trials", st_cfg.trials, "Number of correlated pairs");
  stab->add_option("--omega", st_omega, "shared | independent")->check(CLI::IsMember({"shared", "independent"}));
  stab->callback([&] {
    st_cfg.seed = st_c.seed;
    st_cfg.omega = st_omega == "shared" ? OmegaMode::kShared : OmegaMode::kIndependent;
    emit(st_c, to_json(stability_probe(signing_algorithm(st_alg, st_lambda), st_cfg)));
  });

  // theory
  auto* theory = app.add_subcommand("theory", "First-moment exponents and constants");
  theory->require_subcommand(1);

  Common ac_c;
  double ac_kappa = 1.0;
  auto* ac = theory->add_subcommand("alpha-c", "Perceptron storage capacity");
  add_common(ac, ac_c);
  ac->add_option("--kappa", ac_kappa, "Margin kappa")->required();
  ac->callback([&] {
    const double a = alpha_c(ac_kappa);
    Json j;
    j["kappa"] = ac_kappa;
    j["p_interval"] = normal_interval_probability(ac_kappa);
    j["alpha_c"] = a;
    emit(ac_c, j);
  });

  Common ps_c;
  double ps_delta = 0.04, ps_alpha = 0.04, ps_kappa = 0.1;
  std::size_t ps_m = 100;
  bool ps_upsilon = false;
  auto* ps = theory->add_subcommand("psi-sbp", "Suffix-ensemble exponent (per unit n)");
  add_common(ps, ps_c);
  ps->add_option("--delta", ps_delta, "Resampled fraction Delta");
  ps->add_option("--m", ps_m, "Ensemble members");
  ps->add_option("--alpha", ps_alpha, "Density M/n");
  ps->add_option("--kappa", ps_kappa, "Margin kappa");
  ps->add_flag("--upsilon", ps_upsilon, "Report the large-m per-member rate instead");
  ps->callback([&] {
    emit(ps_c, exponent_json(ps_upsilon ? upsilon_report(ps_delta, ps_alpha, ps_kappa)
                                        : psi_sbp(ps_delta, ps_m, ps_alpha, ps_kappa)));
  });

  Common pd_c;
  std::size_t pd_m = 16;
  double pd_beta = 0.96, pd_eta = 0.001, pd_c_ = 1.0 / 16, pd_n = 1000, pd_M = 100, pd_K = 1.0;
  std::string pd_form = "free-energy";
  auto* pd = theory->add_subcommand("psi-disc", "Ensemble m-OGP exponent (base-2, absolute)");
  add_common(pd, pd_c);
  pd->add_option("--m", pd_m, "Tuple size");
  pd->add_option("--beta", pd_beta, "Upper overlap");
  pd->add_option("--eta", pd_eta, "Window width");
  pd->add_option("--c", pd_c_, "Angle-grid exponent c (|I| = 2^{cn})");
  pd->add_option("--n", pd_n, "Columns n");
  pd->add_option("--M", pd_M, "Rows M");
  pd->add_option("--K", pd_K, "Discrepancy constant");
  pd->add_option("--form", pd_form, "free-energy | counting-lemma")
      ->check(CLI::IsMember({"free-energy", "counting-lemma"}));
  pd->callback([&] {
    const auto form = pd_form == "free-energy" ? CountingForm::kFreeEnergy : CountingForm::kCountingLemma;
    emit(pd_c, exponent_json(psi_disc(pd_m, pd_beta, pd_eta, pd_c_, pd_n, pd_M, pd_K, form)));
  });

  Common op_c;
  double op_C1 = 1.0, op_c2 = 0.5, op_K = 1.0;
  auto* op = theory->add_subcommand("ogp-params", "Parameters (m, beta, eta, c) for the OGP exponent");
  add_common(op, op_c);
  op->add_option("--C1", op_C1, "Upper density constant");
  op->add_option("--c2", op_c2, "Lower density constant");
  op->add_option("--K", op_K, "Discrepancy constant");
  op->callback([&] { emit(op_c, to_json(find_ogp_params(op_C1, op_c2, op_K))); });

  Common cv_c;
  std::size_t cv_m = 3;
  double cv_beta = 0.8, cv_eta = 0.0;
  std::vector<double> cv_vec;
  auto* cv = theory->add_subcommand("cov", "Determinant and eigenvalues of Sigma(eta)");
  add_common(cv, cv_c);
  cv->add_option("--m", cv_m, "Dimension");
  cv->add_option("--beta", cv_beta, "Base overlap");
  cv->add_option("--eta", cv_eta, "Bound on perturbations");
  cv->add_option("--eta-vec", cv_vec, "Per-pair perturbations (m(m-1)/2 values)");
  cv->callback([&] { emit(cv_c, to_json(covariance_analysis(cov_spec(cv_m, cv_beta, cv_eta, cv_vec)))); });

  Common bb_c;
  std::size_t bb_m = 3;
  double bb_beta = 0.8, bb_eta = 0.0, bb_K = 1.0, bb_n = 25;
  std::vector<double> bb_vec;
  bool bb_mc = false;
  auto* bb = theory->add_subcommand("box-bound", "Density bound on the Gaussian box probability");
  add_common(bb, bb_c, true);
  bb->add_option("--m", bb_m, "Dimension");
  bb->add_option("--beta", bb_beta, "Base overlap");
  bb->add_option("--eta", bb_eta, "Bound on perturbations");
  bb->add_option("--eta-vec", bb_vec, "Per-pair perturbations");
  bb->add_option("--K", bb_K, "Box half-width is K / sqrt(n)");
  bb->add_option("--n", bb_n, "n");
  bb->add_flag("--mc", bb_mc, "Also estimate the probability by Monte Carlo");
  bb->callback([&] {
    const auto spec = cov_spec(bb_m, bb_beta, bb_eta, bb_vec);
    Json j;
    j["m"] = bb_m;
    j["half_width"] = bb_K / std::sqrt(bb_n);
    j["bound"] = gaussian_box_bound(spec, bb_K, bb_n);
    if (bb_mc) j["monte_carlo"] = to_json(mc_box_probability(spec.materialize(), bb_K / std::sqrt(bb_n), bb_c.samples, bb_c.seed));
    emit(bb_c, j);
  });

  Common be_c;
  double be_len = 1.0;
  std::size_t be_M = 100;
  std::optional<double> be_p;
  auto* be = theory->add_subcommand("be-bound", "Anti-concentration bound 3|I|/sqrt(M)");
  add_common(be, be_c);
  be->add_option("--length", be_len, "Interval length |I|");
  be->add_option("--M", be_M, "Number of summands");
  be->add_option("--p", be_p, "Bernoulli mean (Rademacher when absent)");
  be->callback([&] {
    Json j;
    j["length"] = be_len;
    j["M"] = be_M;
    if (be_p) j["p"] = *be_p;
    j["bound"] = be_p ? berry_esseen_bound(be_len, be_M, *be_p) : berry_esseen_bound(be_len, be_M);
    emit(be_c, j);
  });

  Common ec_c;
  std::string ec_kind = "xi", ec_method = "quadrature";
  std::size_t ec_n = 14, ec_M = 4, ec_k = 4, ec_m = 2, ec_delta = 0;
  double ec_kappa = 1.0, ec_K = 1.0;
  auto* ec = theory->add_subcommand("expected-count", "First-moment count of tuple sets");
  add_common(ec, ec_c, true);
  ec->add_option("--kind", ec_kind, "xi | tuple")->check(CLI::IsMember({"xi", "tuple"}));
  ec->add_option("--n", ec_n, "Columns n");
  ec->add_option("--M", ec_M, "Rows M");
  ec->add_option("--k", ec_k, "Resampled columns (xi)");
  ec->add_option("--m", ec_m, "Tuple size");
  ec->add_option("--kappa", ec_kappa, "Margin kappa (xi)");
  ec->add_option("--delta", ec_delta, "Pairwise Hamming distance (tuple)");
  ec->add_option("--K", ec_K, "Discrepancy bound (tuple)");
  ec->add_option("--method", ec_method, "quadrature | mc")->check(CLI::IsMember({"quadrature", "mc"}));
  ec->callback([&] {
    const auto opts = box_options(ec_method, ec_c);
    emit(ec_c, to_json(ec_kind == "xi" ? expected_xi_count(ec_n, ec_M, ec_k, ec_m, ec_kappa, opts)
                                       : expected_tuple_count_general(ec_n, ec_M, ec_m, ec_delta, ec_K, opts)));
  });

  Common sc_c;
  double sc_eta = 0.4, sc_L = 1.0;
  std::size_t sc_m = 2;
  auto* sc = theory->add_subcommand("stable-constants", "C, Q and log2 log2 T");
  add_common(sc, sc_c);
  sc->add_option("--eta", sc_eta, "Window width");
  sc->add_option("--L", sc_L, "Stability constant");
  sc->add_option("--m", sc_m, "Tuple size");
  sc->callback([&] { emit(sc_c, to_json(stable_constants(sc_eta, sc_L, sc_m))); });

  // experiment
  Common ex_c;
  std::string ex_config, ex_manifest, ex_seeds;
  bool ex_verify = false;
  auto* ex = app.add_subcommand("experiment", "Run a declarative sweep, or replay a manifest");
  add_common(ex, ex_c);
  ex->add_option("--config", ex_config, "Experiment JSON");
  ex->add_option("--manifest", ex_manifest, "Replay the configuration stored in a manifest");
  ex->add_option("--seeds", ex_seeds, "Override the seed range A..B");
  ex->add_flag("--verify", ex_verify, "With --manifest: fail unless every hash matches");
  ex->callback([&] {
    if (ex_config.empty() == ex_manifest.empty()) throw ParameterError("give exactly one of --config or --manifest");
    std::optional<Manifest> previous;
    ExperimentConfig cfg;
    if (!ex_config.empty()) {
      cfg = experiment_config_from_json(Json::parse(read_text_file(ex_config)));
    } else {
      previous = manifest_from_json(Json::parse(read_text_file(ex_manifest)));
      cfg = previous->config;
    }
    if (!ex_seeds.empty()) cfg.seeds = parse_seed_range(ex_seeds);
    if (!ex_c.out.empty()) cfg.out_dir = resolve_out(ex_c.out);
    else if (!ex_config.empty()) cfg.out_dir = resolve_out(cfg.out_dir);
    const auto manifest = run_experiment(cfg);
    std::size_t failed = 0;
    for (const auto& t : manifest.tasks) failed += t.status != "ok";
    std::cerr << manifest.tasks.size() << " tasks, " << failed << " failed; manifest at "
              << (fs::path(cfg.out_dir) / "manifest.json").string() << "\n";
    if (ex_verify && previous) {
      std::size_t mismatched = 0;
      for (std::size_t i = 0; i < manifest.tasks.size(); ++i) {
        if (i >= previous->tasks.size() || previous->tasks[i].fnv1a64 != manifest.tasks[i].fnv1a64) ++mismatched;
      }
      if (mismatched != 0 || previous->tasks.size() != manifest.tasks.size()) {
        throw IoError(std::to_string(mismatched) + " task hashes differ from the manifest");
      }
      std::cerr << "all hashes match\n";
    }
    if (failed != 0) throw IoError(std::to_string(failed) + " tasks failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
