#pragma once

#include "ssn/embedding.hpp"
#include "ssn/kernels.hpp"
#include "ssn/limitdist.hpp"
#include "ssn/selfnorm.hpp"
#include "ssn/series.hpp"

namespace ssn {

// Goodness-of-fit problem H0: marginal of `data` equals the distribution
// behind `null_embedding`, tested with kernel K after an eta-split.
struct GofProblem {
    Series data;
    MeanEmbedding null_embedding;
    KernelSpec kernel;
    SplitConfig split{0.35};
    double alpha = 0.05;
};

// Z_i = (1/m1) sum_{j<=m1} [K(Y_j, Y_{m1+i}) - mu0(Y_j) - mu0(Y_{m1+i}) + ||mu0||^2],
// i = 1..m2, from one m1 x m2 Gram block and two embedding-value vectors.
ProjectedSequence gof_projected_sequence(const GofProblem& problem);

// One-sided test: reject iff sqrt(m2) U_n exceeds the (1-alpha) quantile of U.
TestOutcome gof_test(const GofProblem& problem, const QuantileTable& table_u);

} // namespace ssn
