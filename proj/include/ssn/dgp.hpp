#pragma once

#include <cstdint>
#include <utility>

#include "ssn/series.hpp"

namespace ssn {
namespace dgp {

// Y_t = kappa Y_{t-1} + e_t, e_t iid N(0,1), exact stationary start
// Y_0 ~ N(0, 1/(1-kappa^2)).
Series ar1(std::size_t n, double kappa, std::uint64_t seed);

// X_t = (1-d_t) Y_t + d_t eps_t with eps_t iid Exp(1)-1, d_t iid Bern(lambda);
// the Y/eps/d streams are disjoint substreams of `seed`, so lambda = 0
// reproduces ar1(n, kappa, seed) exactly.
Series gof_power_mixture(std::size_t n, double kappa, double lambda, std::uint64_t seed);

// X_t = (1-d_t) Y_t + d_t Y_t 1{t <= n/2} + d_t eps_t 1{t > n/2}: marginal
// change in the middle of the sequence.
Series cp_mixture(std::size_t n, double kappa, double lambda, std::uint64_t seed);

enum class Innovation { gaussian, t2 };

// Functional AR(1) on a d-point grid with Brownian-motion innovations
// (cumulative sums of iid draws / sqrt(d)), Phi_{i,j} = min(i,j)/d^2,
// burn-in from t = -50. t2 uses Student-t(2) draws in place of N(0,1).
Series far1(std::size_t n, std::size_t d, Innovation innovation, std::uint64_t seed);

// far1 with lambda added to every curve coordinate for t > n/2.
Series far1_mean_shift(std::size_t n, std::size_t d, double lambda, std::uint64_t seed);

// Two functional AR(1) series driven by psi_q(t,u) = q min(t,u) with
// innovation paths W1 = B1 and W2 = lambda B1 + sqrt(1-lambda^2) B2; lambda=0
// is the independence null.
std::pair<Series, Series> far1_pair(std::size_t n, std::size_t d, double q, double lambda,
                                    std::uint64_t seed);

} // namespace dgp
} // namespace ssn
