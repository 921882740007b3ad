#pragma once

#include <cstddef>
#include <vector>

#include "ssn/error.hpp"

namespace ssn {

enum class ProjOrigin { gof, changepoint, independence };

// Univariate projected sequence Z_1..Z_m fed to the self-normalized statistics.
struct ProjectedSequence {
    std::vector<double> z;
    ProjOrigin origin = ProjOrigin::gof;
};

struct SnMeanResult {
    double t;      // sample mean
    double w;      // self-normalizer (>= 0)
    double u;      // t / w
    double scaled; // sqrt(m) * u
};

// T = mean(Z), W^2 = m^-2 sum_t (Z_{1:t} - t T)^2, U = T/W.
// Throws DegenerateNormalizer when W == 0 (constant sequence).
SnMeanResult sn_mean_stat(const ProjectedSequence& seq);

struct CusumResult {
    double g;                   // sup over k of T(k)/sqrt(V(k))
    std::size_t khat;           // smallest argmax, 1-based in 1..N-1
    std::vector<double> ratios; // length N-1; NaN where V(k) = 0 (skipped)
};

// CUSUM statistic with recursive self-normalizer:
//   T(k) = N^-1/2 sum_{t<=k} (Z_t - Z_{1:N}/N)
//   V(k) = N^-2 [ sum_{t<=k} (Z_{1:t} - (t/k) Z_{1:k})^2
//               + sum_{t>k}  (Z_{t:N} - (N-t+1)/(N-k) Z_{k+1:N})^2 ]
// evaluated for all k in O(N) from prefix/suffix tables.
// Throws AllNormalizersZero when every V(k) vanishes.
CusumResult cusum_stat(const ProjectedSequence& seq);

} // namespace ssn
