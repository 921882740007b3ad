#pragma once

#include "ssn/kernels.hpp"
#include "ssn/limitdist.hpp"
#include "ssn/selfnorm.hpp"
#include "ssn/series.hpp"

namespace ssn {

// Row k (k = 1..n-2m) is the window (X_k, ..., X_{k+2m}) of dimension (2m+1)p.
Series lag_embed(const Series& series, std::size_t m);

// Double-centered Gram: values[a][b] = K(a,b) - rowmean_a - colmean_b + grandmean,
// the matrix of inner products <K(A_a,.)-muhat, K(A_b,.)-muhat> with muhat the
// sample-mean embedding over the full index set.
struct CenteredGram {
    Matrix values;
};

CenteredGram centered_gram(const KernelSpec& kernel, PointsView points);

// One kernel per point set: base series X/Y and their lag embeddings.
struct IndepKernels {
    KernelSpec x, y, x_lag, y_lag;
};

// Median-heuristic bandwidths, each computed on its own point set.
IndepKernels indep_median_kernels(const Series& x, const Series& y, std::size_t lag,
                                  std::size_t lag_x, KernelFamily family_x, KernelFamily family_y);

// The centered Grams behind <E_i, E_j>. With equal windows (lag_x == lag) the
// paper's two stacked tensor blocks contribute
//   <E_i,E_j> = CG_X[i][j] CG_Ylag[i][j] + CG_Y[i][j] CG_Xlag[i][j];
// with distinct windows a single block CG_Xwin[i][j] CG_Ywin[i][j] is used.
struct IndepGrams {
    bool two_block = true;
    std::size_t n_prime = 0;
    CenteredGram x, y_lag; // two-block: K1 on X centers / L_{2m+1} on Y windows;
                           // single-block: K_{2s+1} on X windows / L_{2m+1} on Y windows
    CenteredGram y, x_lag; // two-block only
};

// lag = m (Y window), lag_x = s (X window); lag_x == lag gives the paper's
// symmetric construction. Requires 2*max(lag, lag_x) < n.
IndepGrams indep_grams(const Series& x, const Series& y, const IndepKernels& kernels,
                       std::size_t lag, std::size_t lag_x);

double e_inner(const IndepGrams& grams, std::size_t i, std::size_t j);

// F_j = (1/m1') sum_{i<=m1'} <E_i, E_{j+m1'}>, j = 1..m2'.
ProjectedSequence indep_projected_sequence(const IndepGrams& grams, const SplitConfig& split);

TestOutcome indep_test(const Series& x, const Series& y, const IndepKernels& kernels,
                       std::size_t lag, std::size_t lag_x, const SplitConfig& split, double alpha,
                       const QuantileTable& table_u);

} // namespace ssn
