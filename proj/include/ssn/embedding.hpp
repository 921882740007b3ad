#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssn/kernels.hpp"

namespace ssn {

// RKHS mean embedding of the null distribution: a pointwise evaluator
// mu0(y) together with the squared RKHS norm ||mu0||^2.
struct MeanEmbedding {
    std::function<double(std::span<const double>)> evaluate;
    double squared_norm = 0.0;
    std::string descriptor; // closed_form_gaussian | point_mass | monte_carlo | zero

    double operator()(std::span<const double> y) const { return evaluate(y); }
};

// Closed form for a gaussian kernel and P0 = N(0, variance * I_dim):
//   mu0(x) = (1+2*sigma*variance)^(-dim/2) * exp(-sigma*x'x/(1+2*sigma*variance))
//   ||mu0||^2 = (1+4*sigma*variance)^(-dim/2)
// The dim>1 form is the per-coordinate product extension of the dim=1 formula.
MeanEmbedding gaussian_null_embedding(double sigma, double variance, std::size_t dim);

// Embedding of the point mass at c: mu0(y) = K(c,y), ||mu0||^2 = K(c,c).
MeanEmbedding point_mass_embedding(const KernelSpec& kernel, std::vector<double> c);

// The exact zero element (projects the raw Gram block means).
MeanEmbedding zero_embedding();

// Monte Carlo embedding of an arbitrary sampler X ~ Q:
//   mu0(y) = (1/reps) sum_r K(X_r, y), with ||mu0||^2 estimated by the
// cross-pair mean of K(A_r, B_s) over two independent batches (no diagonal
// bias). Deterministic given the seed.
using Sampler = std::function<void(std::uint64_t seed, std::uint64_t stream, std::vector<double>& out)>;
MeanEmbedding mc_embedding(const KernelSpec& kernel, const Sampler& sampler, std::size_t reps,
                           std::uint64_t seed);

} // namespace ssn
