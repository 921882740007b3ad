#include "ssn/gof.hpp"

#include <cmath>

#include "ssn/simd/kernels.hpp"

namespace ssn {

ProjectedSequence gof_projected_sequence(const GofProblem& problem) {
    const auto blocks = split_indices(problem.data.n(), problem.split.eta, SplitScheme::two_way);
    const std::size_t m1 = blocks[0].len(), m2 = blocks[1].len();
    if (m2 < 2) fail(Errc::split_too_small, "held-out block needs length >= 2");

    const PointsView train = points_of(problem.data, blocks[0].begin, blocks[0].end);
    const PointsView held = points_of(problem.data, blocks[1].begin, blocks[1].end);

    const auto& mu0 = problem.null_embedding;
    double train_mu_sum = 0.0;
    for (std::size_t j = 0; j < m1; ++j) train_mu_sum += mu0(train.point(j));
    const double train_mu_mean = train_mu_sum / static_cast<double>(m1);

    // Column means of the m1 x m2 cross Gram block; the full n x n matrix is
    // never formed.
    const GramMatrix block = gram(problem.kernel, train, held);
    std::vector<double> col_mean(m2, 0.0);
    const auto& ops = simd::ops();
    for (std::size_t j = 0; j < m1; ++j)
        ops.add_inplace(col_mean.data(), block.values.v.data() + j * m2, m2);

    ProjectedSequence seq;
    seq.origin = ProjOrigin::gof;
    seq.z.resize(m2);
    for (std::size_t i = 0; i < m2; ++i) {
        seq.z[i] = col_mean[i] / static_cast<double>(m1) - train_mu_mean - mu0(held.point(i)) +
                   mu0.squared_norm;
    }
    return seq;
}

TestOutcome gof_test(const GofProblem& problem, const QuantileTable& table_u) {
    if (table_u.law != LimitLaw::U) fail(Errc::invalid_argument, "gof_test needs a U-law table");
    if (!(problem.alpha > 0.0 && problem.alpha < 1.0))
        fail(Errc::invalid_argument, "alpha must lie in (0,1)");

    const ProjectedSequence seq = gof_projected_sequence(problem);
    const SnMeanResult sn = sn_mean_stat(seq);

    TestOutcome out;
    out.test = "gof";
    out.statistic = sn.u;
    out.scaled_statistic = sn.scaled;
    out.alpha = problem.alpha;
    out.critical_value = quantile(table_u, 1.0 - problem.alpha);
    out.p_value = pvalue(table_u, sn.scaled);
    out.reject = sn.scaled > out.critical_value;
    out.split = problem.split;
    out.m1 = problem.data.n() - seq.z.size();
    out.m2 = seq.z.size();
    out.metadata["kernel"] = kernel_family_name(problem.kernel.family);
    out.metadata["sigma"] = std::to_string(problem.kernel.sigma);
    out.metadata["null"] = problem.null_embedding.descriptor;
    if (problem.data.p() > 1 && problem.null_embedding.descriptor == "closed_form_gaussian")
        out.metadata["note"] = "dim>1 closed form is the product-structure extension";
    return out;
}

} // namespace ssn
