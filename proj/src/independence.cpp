#include "ssn/independence.hpp"

#include <cmath>

#include "ssn/simd/kernels.hpp"

namespace ssn {

Series lag_embed(const Series& series, std::size_t m) {
    const std::size_t n = series.n(), p = series.p();
    if (2 * m >= n) fail(Errc::lag_too_large, "need 2m < n");
    const std::size_t rows = n - 2 * m;
    const std::size_t width = (2 * m + 1) * p;
    Matrix out(rows, width);
    for (std::size_t k = 0; k < rows; ++k)
        for (std::size_t t = 0; t <= 2 * m; ++t)
            for (std::size_t j = 0; j < p; ++j) out(k, t * p + j) = series.values(k + t, j);
    return Series(std::move(out), series.geometry);
}

CenteredGram centered_gram(const KernelSpec& kernel, PointsView points) {
    if (points.count < 2) fail(Errc::invalid_argument, "centered_gram needs >= 2 points");
    GramMatrix g = gram(kernel, points, points);
    const std::size_t n = points.count;
    const auto& ops = simd::ops();

    std::vector<double> row_mean(n);
    for (std::size_t i = 0; i < n; ++i)
        row_mean[i] = ops.sum(g.values.v.data() + i * n, n) / static_cast<double>(n);
    const double grand = ops.sum(row_mean.data(), n) / static_cast<double>(n);

    // (row_mean[a] + row_mean[b]) first: addition commutes bitwise, so the
    // centered matrix stays exactly symmetric.
    for (std::size_t a = 0; a < n; ++a) {
        double* row = g.values.v.data() + a * n;
        for (std::size_t b = 0; b < n; ++b) row[b] = (row[b] - (row_mean[a] + row_mean[b])) + grand;
    }
    return CenteredGram{std::move(g.values)};
}

IndepKernels indep_median_kernels(const Series& x, const Series& y, std::size_t lag,
                                  std::size_t lag_x, KernelFamily family_x, KernelFamily family_y) {
    if (x.n() != y.n()) fail(Errc::dimension_mismatch, "series lengths differ");
    const Series xw = lag_embed(x, lag_x);
    const Series yw = lag_embed(y, lag);

    auto make = [](const Series& s, KernelFamily fam) {
        KernelSpec k;
        k.family = fam;
        k.geometry = kernel_geometry(s.geometry);
        k.sigma = median_heuristic(points_of(s), k.geometry);
        return k;
    };
    IndepKernels ks;
    ks.x = make(x, family_x);
    ks.y = make(y, family_y);
    ks.x_lag = make(xw, family_x);
    ks.y_lag = make(yw, family_y);
    return ks;
}

IndepGrams indep_grams(const Series& x, const Series& y, const IndepKernels& kernels,
                       std::size_t lag, std::size_t lag_x) {
    if (x.n() != y.n()) fail(Errc::dimension_mismatch, "series lengths differ");
    const std::size_t n = x.n();
    const std::size_t w = lag_x > lag ? lag_x : lag;
    if (2 * w >= n) fail(Errc::lag_too_large, "need 2*max(lag, lag_x) < n");
    const std::size_t n_prime = n - 2 * w;

    const Series xw = lag_embed(x, lag_x);
    const Series yw = lag_embed(y, lag);
    const PointsView x_windows{xw.values.v.data(), n_prime, xw.p()};
    const PointsView y_windows{yw.values.v.data(), n_prime, yw.p()};

    IndepGrams g;
    g.n_prime = n_prime;
    if (lag_x == lag) {
        g.two_block = true;
        g.x = centered_gram(kernels.x, points_of(x, lag, lag + n_prime));
        g.y = centered_gram(kernels.y, points_of(y, lag, lag + n_prime));
        g.x_lag = centered_gram(kernels.x_lag, x_windows);
        g.y_lag = centered_gram(kernels.y_lag, y_windows);
    } else {
        g.two_block = false;
        g.x = centered_gram(kernels.x_lag, x_windows);
        g.y_lag = centered_gram(kernels.y_lag, y_windows);
    }
    return g;
}

double e_inner(const IndepGrams& grams, std::size_t i, std::size_t j) {
    const std::size_t n = grams.n_prime;
    if (i >= n || j >= n) fail(Errc::invalid_argument, "e_inner index out of range");
    double v = grams.x.values(i, j) * grams.y_lag.values(i, j);
    if (grams.two_block) v += grams.y.values(i, j) * grams.x_lag.values(i, j);
    return v;
}

ProjectedSequence indep_projected_sequence(const IndepGrams& grams, const SplitConfig& split) {
    split.validate(SplitScheme::two_way);
    const std::size_t n_prime = grams.n_prime;
    const auto m1 = static_cast<std::size_t>(std::floor(static_cast<double>(n_prime) * split.eta));
    if (m1 < 1) fail(Errc::split_too_small, "training block is empty");
    const std::size_t m2 = n_prime - m1;
    if (m2 < 2) fail(Errc::split_too_small, "held-out block needs length >= 2");

    const auto& ops = simd::ops();
    ProjectedSequence seq;
    seq.origin = ProjOrigin::independence;
    seq.z.resize(m2);
    // The centered Grams are symmetric, so the column sum over the training
    // block equals a contiguous prefix dot along row q.
    const std::size_t n = n_prime;
    for (std::size_t j = 0; j < m2; ++j) {
        const std::size_t q = m1 + j;
        double acc;
        if (grams.two_block) {
            acc = ops.dot2(grams.x.values.v.data() + q * n, grams.y_lag.values.v.data() + q * n,
                           grams.y.values.v.data() + q * n, grams.x_lag.values.v.data() + q * n, m1);
        } else {
            acc = ops.dot(grams.x.values.v.data() + q * n, grams.y_lag.values.v.data() + q * n, m1);
        }
        seq.z[j] = acc / static_cast<double>(m1);
    }
    return seq;
}

TestOutcome indep_test(const Series& x, const Series& y, const IndepKernels& kernels,
                       std::size_t lag, std::size_t lag_x, const SplitConfig& split, double alpha,
                       const QuantileTable& table_u) {
    if (table_u.law != LimitLaw::U) fail(Errc::invalid_argument, "indep_test needs a U-law table");
    if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::invalid_argument, "alpha must lie in (0,1)");

    const IndepGrams grams = indep_grams(x, y, kernels, lag, lag_x);
    const ProjectedSequence seq = indep_projected_sequence(grams, split);
    const SnMeanResult sn = sn_mean_stat(seq);

    TestOutcome out;
    out.test = "indep";
    out.statistic = sn.u;
    out.scaled_statistic = sn.scaled;
    out.alpha = alpha;
    out.critical_value = quantile(table_u, 1.0 - alpha);
    out.p_value = pvalue(table_u, sn.scaled);
    out.reject = sn.scaled > out.critical_value;
    out.split = split;
    out.m1 = grams.n_prime - seq.z.size();
    out.m2 = seq.z.size();
    out.metadata["kernel_x"] = kernel_family_name(kernels.x.family);
    out.metadata["kernel_y"] = kernel_family_name(kernels.y.family);
    out.metadata["lag"] = std::to_string(lag);
    if (lag_x != lag) out.metadata["lag_x"] = std::to_string(lag_x);
    return out;
}

} // namespace ssn
