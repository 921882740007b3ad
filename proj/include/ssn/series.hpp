#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssn/error.hpp"

namespace ssn {

// Dense row-major matrix. Rows are time points, columns coordinates.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }

    std::span<const double> row(std::size_t i) const { return {v.data() + i * cols, cols}; }
    std::span<double> row(std::size_t i) { return {v.data() + i * cols, cols}; }
};

enum class Geometry { euclidean, functional_grid };

// n x p multivariate series; functional_grid means column j samples a curve
// at grid point j/p on [0,1].
struct Series {
    Matrix values;
    Geometry geometry = Geometry::euclidean;

    Series() = default;
    Series(Matrix m, Geometry g);

    std::size_t n() const { return values.rows; }
    std::size_t p() const { return values.cols; }
    std::span<const double> point(std::size_t i) const { return values.row(i); }
};

struct IndexRange {
    std::size_t begin = 0; // 0-based, inclusive
    std::size_t end = 0;   // exclusive

    std::size_t len() const { return end - begin; }
};

enum class SplitScheme { two_way, three_way };

struct SplitConfig {
    double eta;

    // eta in (0,1) for two_way, (0,1/2) for three_way.
    void validate(SplitScheme scheme) const;
};

// two_way: [0..m1), [m1..n); three_way: [0..m1), [m1..n-m1), [n-m1..n)
// with m1 = floor(n*eta). Every block must be nonempty.
std::vector<IndexRange> split_indices(std::size_t n, double eta, SplitScheme scheme);

struct TestOutcome {
    std::string test;
    double statistic = 0.0;
    double scaled_statistic = 0.0;
    double alpha = 0.0;
    double critical_value = 0.0;
    double p_value = 0.0;
    bool reject = false;
    SplitConfig split{0.0};
    std::size_t m1 = 0;          // training block length
    std::size_t m2 = 0;          // projected sequence length (m2, N or m2')
    std::optional<std::size_t> location; // change point only, 1-based original index
    std::map<std::string, std::string> metadata;
};

} // namespace ssn
