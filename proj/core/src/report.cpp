#include "ogplab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ogplab/box_probability.hpp"
#include "ogplab/errors.hpp"

namespace ogplab {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json pairs_to_object(const std::vector<std::pair<std::string, double>>& pairs) {
  Json obj = Json::object();
  for (const auto& [name, v] : pairs) obj[name] = v;
  return obj;
}

std::vector<std::pair<std::string, double>> object_to_pairs(const Json& obj) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, v] : obj.items()) out.emplace_back(name, v.get<double>());
  return out;
}

}  // namespace

Json to_json(const DiscrepancyResult& r) {
  Json j;
  j["value"] = r.value;
  j["argmin"] = r.argmin.str();
  j["row_sums"] = r.row_sums;
  return j;
}

DiscrepancyResult discrepancy_result_from_json(const Json& j) {
  DiscrepancyResult r;
  r.value = j.at("value").get<double>();
  r.argmin = SignVector::parse(j.at("argmin").get<std::string>());
  r.row_sums = j.at("row_sums").get<std::vector<double>>();
  return r;
}

Json to_json(const ExponentReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["value"] = r.value;
  j["per_unit_n"] = r.per_unit_n;
  j["verdict"] = r.verdict();
  j["terms"] = pairs_to_object(r.terms);
  j["params"] = pairs_to_object(r.params);
  return j;
}

ExponentReport exponent_report_from_json(const Json& j) {
  ExponentReport r;
  r.kind = j.at("kind").get<std::string>();
  r.value = j.at("value").get<double>();
  r.per_unit_n = j.at("per_unit_n").get<bool>();
  r.terms = object_to_pairs(j.at("terms"));
  r.params = object_to_pairs(j.at("params"));
  return r;
}

Json to_json(const TupleCertificate& c) {
  Json j;
  Json members = Json::array();
  for (const auto& s : c.members) members.push_back(s.str());
  j["members"] = members;
  j["overlaps"] = c.overlaps;
  j["disc_values"] = c.disc_values;
  j["threshold"] = c.threshold;
  j["shared_prefix"] = c.shared_prefix;
  j["taus"] = c.taus;
  return j;
}

TupleCertificate tuple_certificate_from_json(const Json& j) {
  TupleCertificate c;
  for (const auto& s : j.at("members")) c.members.push_back(SignVector::parse(s.get<std::string>()));
  c.overlaps = j.at("overlaps").get<std::vector<double>>();
  c.disc_values = j.at("disc_values").get<std::vector<double>>();
  c.threshold = j.at("threshold").get<double>();
  c.shared_prefix = j.at("shared_prefix").get<std::size_t>();
  c.taus = j.at("taus").get<std::vector<double>>();
  return c;
}

Json to_json(const StabilityReport& r) {
  Json j;
  j["rows"] = r.config.rows;
  j["cols"] = r.config.cols;
  j["rho"] = r.config.rho;
  j["K"] = r.config.K;
  j["trials"] = r.config.trials;
  j["seed"] = r.config.seed;
  j["omega"] = r.config.omega == OmegaMode::kShared ? "shared" : "independent";
  j["mean_hamming"] = r.mean_hamming;
  j["se_hamming"] = r.se_hamming;
  j["success_rate"] = r.success_rate;
  Json q = Json::object();
  for (std::size_t i = 0; i < r.quantiles.size(); ++i) q[g17(r.quantile_levels[i])] = r.quantiles[i];
  j["hamming_quantiles"] = q;
  j["fit_f"] = r.fit_f;
  j["fit_L"] = r.fit_L;
  j["hamming"] = r.hamming;
  j["frobenius"] = r.frobenius;
  return j;
}

Json to_json(const CountExpectation& e) {
  Json j;
  j["value"] = e.value;
  j["log2_value"] = e.log2_value;
  j["counting_log2"] = e.counting_log2;
  j["p_box"] = e.p_box;
  j["p_box_std_error"] = e.p_box_std_error;
  j["upper_bound_style"] = e.upper_bound_style;
  j["method"] = e.method;
  return j;
}

Json to_json(const OgpParams& p) {
  Json j;
  j["m"] = p.m;
  j["beta"] = p.beta;
  j["eta"] = p.eta;
  j["c"] = p.c;
  return j;
}

Json to_json(const StableConstants& s) {
  Json j;
  j["C"] = s.C;
  j["Q"] = s.Q;
  j["log2_log2_T"] = s.log2_log2_T;
  return j;
}

Json to_json(const CovarianceAnalysis& a) {
  Json j;
  j["pd"] = a.positive_definite;
  j["det"] = a.determinant;
  j["det_lower_bound"] = a.det_lower_bound;
  j["eigenvalues"] = a.eigenvalues;
  j["eta_admissible"] = a.eta_admissible;
  return j;
}

Json to_json(const BoxEstimate& b) {
  Json j;
  j["estimate"] = b.estimate;
  j["std_error"] = b.std_error;
  j["samples"] = b.samples;
  return j;
}

Json online_run_json(const std::string& algorithm, std::uint64_t seed, const OnlineRun& run) {
  Json j;
  j["algorithm"] = algorithm;
  j["seed"] = seed;
  j["sigma"] = run.sigma.str();
  j["discrepancy"] = run.disc.value;
  j["row_sums"] = run.disc.row_sums;
  return j;
}

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out += g17(h.bin_lo[b]) + "," + g17(h.bin_hi[b]) + "," + std::to_string(h.counts[b]) + "\n";
  }
  return out;
}

Histogram histogram_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "bin_lo,bin_hi,count") {
    throw IoError("histogram CSV must start with header bin_lo,bin_hi,count");
  }
  Histogram h;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string lo, hi, count;
    if (!std::getline(fields, lo, ',') || !std::getline(fields, hi, ',') ||
        !std::getline(fields, count)) {
      throw IoError("malformed histogram row '" + line + "'");
    }
    h.bin_lo.push_back(std::stod(lo));
    h.bin_hi.push_back(std::stod(hi));
    h.counts.push_back(std::stoull(count));
  }
  return h;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ogplab
