#pragma once

#include <iosfwd>
#include <string>

#include "ogplab/instance.hpp"

namespace ogplab {

/// Body encoding of an instance file. The file is a single-line JSON header
/// {"rows","cols","disorder","p"?,"seed","encoding"} terminated by '\n',
/// followed by the row-major body: CSV text (integers for integer disorders,
/// 17 significant digits otherwise) or raw little-endian IEEE-754 doubles.
enum class BodyEncoding { kCsv, kFloat64LE };

void write_instance(std::ostream& out, const Instance& inst, BodyEncoding encoding);
Instance read_instance(std::istream& in);

void save_instance(const std::string& path, const Instance& inst, BodyEncoding encoding);
Instance load_instance(const std::string& path);

}  // namespace ogplab
