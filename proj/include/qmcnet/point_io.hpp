#pragma once

#include <filesystem>
#include <iosfwd>

#include "qmcnet/point_set.hpp"

namespace qmcnet {

// Point-file format:
//
//   # provenance family=<name> params=<key=value;...>
//   <base> <m> <s> <precision> <count>
//   <coord> <coord> ... (s tokens per point line)
//
// A coordinate on a digital axis is its `precision` base-b digits, most
// significant first: single characters for b <= 10, comma-separated
// integers otherwise. A coordinate on a non-digital axis is written as
// `numerator/denominator`. Lines starting with '#' before the header are
// comments; the provenance comment is optional.
void write_point_file(std::ostream& os, const PointSet& points);
void write_point_file(const std::filesystem::path& path, const PointSet& points);

// ParseError (with line number) on malformed input.
PointSet read_point_file(std::istream& is);
PointSet read_point_file(const std::filesystem::path& path);

}  // namespace qmcnet
