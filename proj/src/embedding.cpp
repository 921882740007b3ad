#include "ssn/embedding.hpp"

#include <cmath>
#include <memory>

#include "ssn/simd/kernels.hpp"

namespace ssn {

MeanEmbedding gaussian_null_embedding(double sigma, double variance, std::size_t dim) {
    if (!(sigma > 0.0)) fail(Errc::invalid_argument, "sigma must be > 0");
    if (!(variance > 0.0)) fail(Errc::invalid_argument, "variance must be > 0");
    if (dim < 1) fail(Errc::invalid_argument, "dim must be >= 1");

    const double d = static_cast<double>(dim);
    const double denom = 1.0 + 2.0 * sigma * variance;
    const double front = std::pow(denom, -d / 2.0);

    MeanEmbedding e;
    e.descriptor = "closed_form_gaussian";
    e.squared_norm = std::pow(1.0 + 4.0 * sigma * variance, -d / 2.0);
    e.evaluate = [sigma, denom, front, dim](std::span<const double> x) {
        if (x.size() != dim) fail(Errc::dimension_mismatch, "embedding evaluated at wrong dimension");
        double xx = 0.0;
        for (double v : x) xx += v * v;
        return front * std::exp(-sigma * xx / denom);
    };
    return e;
}

MeanEmbedding point_mass_embedding(const KernelSpec& kernel, std::vector<double> c) {
    kernel.validate();
    MeanEmbedding e;
    e.descriptor = "point_mass";
    e.squared_norm = eval_kernel(kernel, c, c);
    e.evaluate = [kernel, c = std::move(c)](std::span<const double> y) {
        return eval_kernel(kernel, c, y);
    };
    return e;
}

MeanEmbedding zero_embedding() {
    MeanEmbedding e;
    e.descriptor = "zero";
    e.squared_norm = 0.0;
    e.evaluate = [](std::span<const double>) { return 0.0; };
    return e;
}

MeanEmbedding mc_embedding(const KernelSpec& kernel, const Sampler& sampler, std::size_t reps,
                           std::uint64_t seed) {
    kernel.validate();
    if (reps < 1) fail(Errc::invalid_argument, "mc_embedding needs reps >= 1");

    // Batch 0 backs evaluate(); batches 1 and 2 form the cross-pair norm
    // estimate so no within-batch dependence biases it. The norm batches are
    // capped: the cross-pair mean is quadratic in the batch size and already
    // has ~1e-2 relative error at 1e4 points.
    constexpr std::size_t norm_cap = 10000;
    const std::size_t norm_reps = reps < norm_cap ? reps : norm_cap;

    auto draw_batch = [&](std::uint64_t stream, std::size_t count) {
        auto pts = std::make_shared<Matrix>();
        std::vector<double> x;
        for (std::size_t r = 0; r < count; ++r) {
            sampler(seed, stream * reps + r, x);
            if (x.empty()) fail(Errc::invalid_argument, "sampler produced an empty point");
            if (pts->cols == 0) pts->cols = x.size();
            if (x.size() != pts->cols) fail(Errc::dimension_mismatch, "sampler changed dimension");
            pts->v.insert(pts->v.end(), x.begin(), x.end());
            ++pts->rows;
        }
        return pts;
    };

    auto main_batch = draw_batch(0, reps);
    auto batch_a = draw_batch(1, norm_reps);
    auto batch_b = draw_batch(2, norm_reps);

    const std::size_t dim = main_batch->cols;
    const bool l1 = kernel.family == KernelFamily::laplacian;
    const double scale =
        kernel.geometry == KernelGeometry::functional_grid ? 1.0 / static_cast<double>(dim) : 1.0;
    const auto& ops = simd::ops();

    double cross = 0.0;
    std::vector<double> row(norm_reps);
    for (std::size_t r = 0; r < norm_reps; ++r) {
        const double* ar = batch_a->v.data() + r * dim;
        if (l1)
            ops.l1dist_many(ar, batch_b->v.data(), norm_reps, dim, row.data());
        else
            ops.sqdist_many(ar, batch_b->v.data(), norm_reps, dim, row.data());
        for (std::size_t s = 0; s < norm_reps; ++s)
            cross += eval_kernel_from_dist(kernel, row[s] * scale);
    }
    cross /= static_cast<double>(norm_reps) * static_cast<double>(norm_reps);

    MeanEmbedding e;
    e.descriptor = "monte_carlo";
    e.squared_norm = cross;
    e.evaluate = [kernel, main_batch, reps, dim](std::span<const double> y) {
        if (y.size() != dim) fail(Errc::dimension_mismatch, "embedding evaluated at wrong dimension");
        std::vector<double> vals(reps);
        const KernelSpec spec = kernel;
        const auto& ops = simd::ops();
        if (spec.family == KernelFamily::laplacian)
            ops.l1dist_many(y.data(), main_batch->v.data(), reps, dim, vals.data());
        else
            ops.sqdist_many(y.data(), main_batch->v.data(), reps, dim, vals.data());
        const double scale =
            spec.geometry == KernelGeometry::functional_grid ? 1.0 / static_cast<double>(dim) : 1.0;
        double s = 0.0;
        for (std::size_t r = 0; r < reps; ++r) s += eval_kernel_from_dist(spec, vals[r] * scale);
        return s / static_cast<double>(reps);
    };
    return e;
}

} // namespace ssn
