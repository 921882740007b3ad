#include "ssn/changepoint.hpp"

#include "ssn/simd/kernels.hpp"

namespace ssn {

ProjectedSequence cp_projected_sequence(const Series& data, const KernelSpec& kernel,
                                        const SplitConfig& split) {
    const auto blocks = split_indices(data.n(), split.eta, SplitScheme::three_way);
    const std::size_t m1 = blocks[0].len();
    const std::size_t N = blocks[1].len();
    if (N < 3) fail(Errc::split_too_small, "middle block needs length >= 3");

    const PointsView head = points_of(data, blocks[0].begin, blocks[0].end);
    const PointsView mid = points_of(data, blocks[1].begin, blocks[1].end);
    const PointsView tail = points_of(data, blocks[2].begin, blocks[2].end);

    const GramMatrix head_block = gram(kernel, head, mid);
    const GramMatrix tail_block = gram(kernel, tail, mid);

    const auto& ops = simd::ops();
    std::vector<double> head_sum(N, 0.0), tail_sum(N, 0.0);
    for (std::size_t i = 0; i < m1; ++i) {
        ops.add_inplace(head_sum.data(), head_block.values.v.data() + i * N, N);
        ops.add_inplace(tail_sum.data(), tail_block.values.v.data() + i * N, N);
    }

    ProjectedSequence seq;
    seq.origin = ProjOrigin::changepoint;
    seq.z.resize(N);
    for (std::size_t k = 0; k < N; ++k)
        seq.z[k] = (head_sum[k] - tail_sum[k]) / static_cast<double>(m1);
    return seq;
}

TestOutcome cp_test(const Series& data, const KernelSpec& kernel, const SplitConfig& split,
                    double alpha, const QuantileTable& table_g) {
    if (table_g.law != LimitLaw::G) fail(Errc::invalid_argument, "cp_test needs a G-law table");
    if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::invalid_argument, "alpha must lie in (0,1)");

    const ProjectedSequence seq = cp_projected_sequence(data, kernel, split);
    const CusumResult cusum = cusum_stat(seq);

    const std::size_t m1 = (data.n() - seq.z.size()) / 2;

    TestOutcome out;
    out.test = "cpt";
    out.statistic = cusum.g;
    out.scaled_statistic = cusum.g; // G_n is compared to G quantiles unscaled
    out.alpha = alpha;
    out.critical_value = quantile(table_g, 1.0 - alpha);
    out.p_value = pvalue(table_g, cusum.g);
    out.reject = cusum.g > out.critical_value;
    out.split = split;
    out.m1 = m1;
    out.m2 = seq.z.size();
    out.location = m1 + cusum.khat;
    out.metadata["kernel"] = kernel_family_name(kernel.family);
    out.metadata["sigma"] = std::to_string(kernel.sigma);
    return out;
}

} // namespace ssn
