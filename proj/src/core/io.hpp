#pragma once

#include "feynkac.hpp"
#include "klfield.hpp"
#include "wiener.hpp"

#include <string>

namespace cw {

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

/// 17 significant digits; round-trip exact for doubles.
std::string format_double(double v);

std::string paths_to_csv(std::span<const PathSample> paths);
std::string fields_to_csv(std::span<const FieldSample> fields);

/// (i, j, re, im) rows; pair with grid_to_json_header for geometry.
std::string grid_to_csv(const GridFunction2D& grid);
std::string grid_to_json_header(const GridFunction2D& grid);
GridFunction2D grid_from_csv(const std::string& csv, double half_extent,
                             int points_per_axis);

} // namespace cw
