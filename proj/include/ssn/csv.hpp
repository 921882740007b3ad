#pragma once

#include <string>

#include "ssn/series.hpp"

namespace ssn {

// Rectangular numeric CSV, rows = time. `has_header` skips one header row.
Series load_series(const std::string& path, Geometry geometry, bool has_header = false);

// 17 significant digits so load_series(write_series(s)) round-trips exactly.
void write_series(const Series& s, const std::string& path);

} // namespace ssn
