#pragma once

// JSON and CSV forms of every result type. Object keys keep a fixed order and
// doubles survive a write/parse round trip bit-for-bit.

#include <string>

#include <nlohmann/json.hpp>

#include "ogplab/box_probability.hpp"
#include "ogplab/covariance.hpp"
#include "ogplab/discrepancy.hpp"
#include "ogplab/landscape.hpp"
#include "ogplab/online.hpp"
#include "ogplab/theory.hpp"

namespace ogplab {

using Json = nlohmann::ordered_json;

Json to_json(const DiscrepancyResult& r);
DiscrepancyResult discrepancy_result_from_json(const Json& j);

Json to_json(const ExponentReport& r);
ExponentReport exponent_report_from_json(const Json& j);

Json to_json(const TupleCertificate& c);
TupleCertificate tuple_certificate_from_json(const Json& j);

Json to_json(const StabilityReport& r);
Json to_json(const CountExpectation& e);
Json to_json(const OgpParams& p);
Json to_json(const StableConstants& s);
Json to_json(const CovarianceAnalysis& a);
Json to_json(const BoxEstimate& b);

/// One online run: algorithm, seed, signs, and the discrepancy it achieved.
Json online_run_json(const std::string& algorithm, std::uint64_t seed, const OnlineRun& run);

/// CSV with header "bin_lo,bin_hi,count"; reals printed with 17 significant digits.
std::string histogram_to_csv(const Histogram& h);
Histogram histogram_from_csv(const std::string& csv);

std::string dump(const Json& j);
/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ogplab
