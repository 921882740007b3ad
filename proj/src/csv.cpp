#include "ssn/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ssn {

namespace {

bool parse_cell(const std::string& cell, double& out) {
    const char* s = cell.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    return *end == '\0';
}

} // namespace

Series load_series(const std::string& path, Geometry geometry, bool has_header) {
    std::ifstream in(path);
    if (!in) fail(Errc::missing_file, path);

    std::vector<double> values;
    std::size_t rows = 0, cols = 0;
    std::string line;
    bool skip = has_header;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (skip) {
            skip = false;
            continue;
        }
        std::stringstream ls(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            double x;
            if (!parse_cell(cell, x))
                fail(Errc::non_numeric, path + ": row " + std::to_string(rows + 1) + ", cell '" + cell + "'");
            if (!std::isfinite(x))
                fail(Errc::non_finite, path + ": row " + std::to_string(rows + 1));
            values.push_back(x);
            ++c;
        }
        if (rows == 0)
            cols = c;
        else if (c != cols)
            fail(Errc::ragged_rows, path + ": row " + std::to_string(rows + 1) + " has " + std::to_string(c) +
                                        " cells, expected " + std::to_string(cols));
        ++rows;
    }
    if (rows == 0) fail(Errc::empty_input, path);

    Matrix m(rows, cols);
    m.v = std::move(values);
    return Series(std::move(m), geometry);
}

void write_series(const Series& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::missing_file, "cannot open for writing: " + path);
    char buf[64];
    for (std::size_t i = 0; i < s.n(); ++i) {
        for (std::size_t j = 0; j < s.p(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", s.values(i, j));
            out << buf << (j + 1 == s.p() ? "" : ",");
        }
        out << '\n';
    }
}

} // namespace ssn
