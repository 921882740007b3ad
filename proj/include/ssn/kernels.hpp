#pragma once

#include <span>

#include "ssn/series.hpp"

namespace ssn {

enum class KernelFamily { gaussian, laplacian, student, inverse_multiquadric };

enum class KernelGeometry { euclidean, functional_grid, precomputed_distance };

const char* kernel_family_name(KernelFamily f);
KernelFamily kernel_family_from_name(const std::string& name);

// Translation-invariant kernel with bandwidth sigma:
//   gaussian  exp(-sigma*d2)        laplacian  exp(-sigma*d1)
//   student   1/(1+sigma*d2)        imq        (sigma^2+d2)^(-c)
// where d2 is the squared L2 distance (averaged over the grid, (1/p)*sum,
// for functional_grid) and d1 the L1 distance.
struct KernelSpec {
    KernelFamily family = KernelFamily::gaussian;
    double sigma = 1.0;
    double c = 1.0; // inverse multiquadric exponent
    KernelGeometry geometry = KernelGeometry::euclidean;

    void validate() const;
};

inline KernelGeometry kernel_geometry(Geometry g) {
    return g == Geometry::functional_grid ? KernelGeometry::functional_grid : KernelGeometry::euclidean;
}

// Contiguous block of `count` points of dimension `dim` (rows of a Series).
struct PointsView {
    const double* data = nullptr;
    std::size_t count = 0;
    std::size_t dim = 0;

    std::span<const double> point(std::size_t i) const { return {data + i * dim, dim}; }
};

inline PointsView points_of(const Series& s) { return {s.values.v.data(), s.n(), s.p()}; }
inline PointsView points_of(const Series& s, std::size_t row_begin, std::size_t row_end) {
    return {s.values.v.data() + row_begin * s.p(), row_end - row_begin, s.p()};
}

struct GramMatrix {
    Matrix values;
    KernelSpec spec;
};

double eval_kernel(const KernelSpec& spec, std::span<const double> x, std::span<const double> y);

// Applies the family transform to a precomputed distance: squared L2 for
// gaussian/student/imq, plain L1 for laplacian.
double eval_kernel_from_dist(const KernelSpec& spec, double dist);

// values[i][j] = K(A_i, B_j)
GramMatrix gram(const KernelSpec& spec, PointsView A, PointsView B);

GramMatrix gram_from_dist(const KernelSpec& spec, const Matrix& dist);

// sigma = median over ordered pairs i != j of 1/(2*d2(Y_i,Y_j)); zero-distance
// pairs contribute +inf, and an infinite median means all points coincide.
double median_heuristic(PointsView points, KernelGeometry geometry);

// Same rule on a precomputed unordered-pair multiset of squared distances.
double median_heuristic_from_sqdists(std::span<const double> pair_sqdists);

} // namespace ssn
