#include "ogplab/instance_io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ogplab/errors.hpp"

namespace ogplab {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void put_le(std::ostream& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

double get_le(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw IoError("truncated binary instance body");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t{bytes[i]} << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_instance(std::ostream& out, const Instance& inst, BodyEncoding encoding) {
  ordered_json header;
  header["rows"] = inst.rows();
  header["cols"] = inst.cols();
  header["disorder"] = to_string(inst.disorder().kind);
  if (inst.disorder().kind == DisorderKind::kBernoulli) header["p"] = inst.disorder().p;
  header["seed"] = inst.seed();
  header["encoding"] = encoding == BodyEncoding::kCsv ? "csv" : "f64le";
  out << header.dump() << '\n';

  const bool integral = inst.disorder().integral();
  for (std::size_t r = 0; r < inst.rows(); ++r) {
    for (std::size_t c = 0; c < inst.cols(); ++c) {
      const double v = inst.at(r, c);
      if (encoding == BodyEncoding::kFloat64LE) {
        put_le(out, v);
        continue;
      }
      if (c > 0) out << ',';
      if (integral) {
        out << static_cast<long long>(v);
      } else {
        out << format_double(v);
      }
    }
    if (encoding == BodyEncoding::kCsv) out << '\n';
  }
  if (!out) throw IoError("failed writing instance");
}

Instance read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing instance header");
  ordered_json header;
  try {
    header = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed instance header: ") + e.what());
  }
  try {
    const auto rows = header.at("rows").get<std::size_t>();
    const auto cols = header.at("cols").get<std::size_t>();
    Disorder disorder{parse_disorder_kind(header.at("disorder").get<std::string>()), 0.5};
    if (disorder.kind == DisorderKind::kBernoulli) disorder.p = header.at("p").get<double>();
    const auto seed = header.at("seed").get<std::uint64_t>();
    const auto encoding = header.value("encoding", std::string("csv"));

    std::vector<double> data(rows * cols);
    if (encoding == "f64le") {
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) data[c * rows + r] = get_le(in);
      }
    } else if (encoding == "csv") {
      for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line)) throw IoError("instance body has too few rows");
        std::istringstream fields(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(fields, cell, ',')) {
          if (c >= cols) throw IoError("instance row " + std::to_string(r) + " has too many fields");
          data[c * rows + r] = std::stod(cell);
          ++c;
        }
        if (c != cols) throw IoError("instance row " + std::to_string(r) + " has too few fields");
      }
    } else {
      throw IoError("unknown instance encoding '" + encoding + "'");
    }
    return Instance(rows, cols, disorder, seed, std::move(data));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid instance header: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const ParameterError*>(&e) != nullptr) throw;
    throw IoError(std::string("invalid instance body: ") + e.what());
  }
}

void save_instance(const std::string& path, const Instance& inst, BodyEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_instance(out, inst, encoding);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_instance(in);
}

}  // namespace ogplab
