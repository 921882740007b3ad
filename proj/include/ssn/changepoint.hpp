#pragma once

#include "ssn/kernels.hpp"
#include "ssn/limitdist.hpp"
#include "ssn/selfnorm.hpp"
#include "ssn/series.hpp"

namespace ssn {

// Z_k = (1/m1) sum_{i<=m1} K(Y_i, Y_{m1+k}) - (1/m1) sum_{j>n-m1} K(Y_j, Y_{m1+k}),
// k = 1..N with N = n-2m1: the middle block projected along the difference of
// the head- and tail-block embedding estimates.
ProjectedSequence cp_projected_sequence(const Series& data, const KernelSpec& kernel,
                                        const SplitConfig& split);

// One-sided CUSUM test; location is reported as m1 + khat in original time.
TestOutcome cp_test(const Series& data, const KernelSpec& kernel, const SplitConfig& split,
                    double alpha, const QuantileTable& table_g);

} // namespace ssn
