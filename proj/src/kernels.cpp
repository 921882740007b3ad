#include "ssn/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssn/simd/kernels.hpp"

namespace ssn {

const char* kernel_family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::gaussian: return "gaussian";
        case KernelFamily::laplacian: return "laplacian";
        case KernelFamily::student: return "student";
        case KernelFamily::inverse_multiquadric: return "imq";
    }
    return "?";
}

KernelFamily kernel_family_from_name(const std::string& name) {
    if (name == "gaussian") return KernelFamily::gaussian;
    if (name == "laplacian") return KernelFamily::laplacian;
    if (name == "student") return KernelFamily::student;
    if (name == "imq" || name == "inverse_multiquadric") return KernelFamily::inverse_multiquadric;
    fail(Errc::invalid_argument, "unknown kernel family '" + name + "'");
}

void KernelSpec::validate() const {
    if (!(sigma > 0.0)) fail(Errc::invalid_argument, "kernel sigma must be > 0");
    if (family == KernelFamily::inverse_multiquadric && !(c > 0.0))
        fail(Errc::invalid_argument, "imq exponent c must be > 0");
    if (family == KernelFamily::laplacian && geometry == KernelGeometry::functional_grid)
        fail(Errc::invalid_argument, "laplacian kernel is defined for euclidean geometry only");
}

namespace {

inline double transform(const KernelSpec& spec, double d) {
    switch (spec.family) {
        case KernelFamily::gaussian: return std::exp(-spec.sigma * d);
        case KernelFamily::laplacian: return std::exp(-spec.sigma * d);
        case KernelFamily::student: return 1.0 / (1.0 + spec.sigma * d);
        case KernelFamily::inverse_multiquadric:
            return spec.c == 1.0 ? 1.0 / (spec.sigma * spec.sigma + d)
                                 : std::pow(spec.sigma * spec.sigma + d, -spec.c);
    }
    return 0.0;
}

inline bool uses_l1(const KernelSpec& spec) { return spec.family == KernelFamily::laplacian; }

} // namespace

double eval_kernel_from_dist(const KernelSpec& spec, double dist) {
    spec.validate();
    return transform(spec, dist);
}

double eval_kernel(const KernelSpec& spec, std::span<const double> x, std::span<const double> y) {
    spec.validate();
    if (spec.geometry == KernelGeometry::precomputed_distance)
        fail(Errc::invalid_argument, "precomputed_distance geometry needs eval_kernel_from_dist");
    if (x.size() != y.size()) fail(Errc::dimension_mismatch, "points of unequal dimension");
    double d;
    if (uses_l1(spec)) {
        simd::ops().l1dist_many(x.data(), y.data(), 1, x.size(), &d);
    } else {
        simd::ops().sqdist_many(x.data(), y.data(), 1, x.size(), &d);
        if (spec.geometry == KernelGeometry::functional_grid) d /= static_cast<double>(x.size());
    }
    return transform(spec, d);
}

GramMatrix gram(const KernelSpec& spec, PointsView A, PointsView B) {
    spec.validate();
    if (spec.geometry == KernelGeometry::precomputed_distance)
        fail(Errc::invalid_argument, "precomputed_distance geometry needs gram_from_dist");
    if (A.dim != B.dim) fail(Errc::dimension_mismatch, "point sets of unequal dimension");

    const auto& ops = simd::ops();
    GramMatrix g{Matrix(A.count, B.count), spec};
    const bool l1 = uses_l1(spec);
    const double scale =
        spec.geometry == KernelGeometry::functional_grid ? 1.0 / static_cast<double>(A.dim) : 1.0;
    for (std::size_t i = 0; i < A.count; ++i) {
        double* row = g.values.v.data() + i * B.count;
        if (l1)
            ops.l1dist_many(A.data + i * A.dim, B.data, B.count, B.dim, row);
        else
            ops.sqdist_many(A.data + i * A.dim, B.data, B.count, B.dim, row);
        for (std::size_t j = 0; j < B.count; ++j) row[j] = transform(spec, row[j] * scale);
    }
    return g;
}

GramMatrix gram_from_dist(const KernelSpec& spec, const Matrix& dist) {
    spec.validate();
    GramMatrix g{Matrix(dist.rows, dist.cols), spec};
    for (std::size_t i = 0; i < dist.v.size(); ++i) g.values.v[i] = transform(spec, dist.v[i]);
    return g;
}

double median_heuristic_from_sqdists(std::span<const double> pair_sqdists) {
    if (pair_sqdists.empty()) fail(Errc::invalid_argument, "median heuristic needs at least one pair");
    std::vector<double> vals(pair_sqdists.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = 1.0 / (2.0 * pair_sqdists[i]);

    // Ordered-pair median == unordered-pair median (each value appears twice);
    // for even counts, average the two central order statistics.
    const std::size_t m = vals.size();
    double med;
    if (m % 2 == 1) {
        std::nth_element(vals.begin(), vals.begin() + m / 2, vals.end());
        med = vals[m / 2];
    } else {
        std::nth_element(vals.begin(), vals.begin() + m / 2, vals.end());
        const double hi = vals[m / 2];
        const double lo = *std::max_element(vals.begin(), vals.begin() + m / 2);
        med = 0.5 * (lo + hi);
    }
    if (!std::isfinite(med) || !(med > 0.0))
        fail(Errc::all_points_identical, "median pairwise distance is zero");
    return med;
}

double median_heuristic(PointsView points, KernelGeometry geometry) {
    if (points.count < 2) fail(Errc::invalid_argument, "median heuristic needs >= 2 points");
    const auto& ops = simd::ops();
    const double scale =
        geometry == KernelGeometry::functional_grid ? 1.0 / static_cast<double>(points.dim) : 1.0;

    const std::size_t n = points.count;
    std::vector<double> sq;
    sq.reserve(n * (n - 1) / 2);
    std::vector<double> row(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t nb = n - i - 1;
        ops.sqdist_many(points.data + i * points.dim, points.data + (i + 1) * points.dim, nb,
                        points.dim, row.data());
        for (std::size_t j = 0; j < nb; ++j) sq.push_back(row[j] * scale);
    }
    return median_heuristic_from_sqdists(sq);
}

} // namespace ssn
