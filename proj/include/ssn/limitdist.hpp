#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssn/error.hpp"

namespace ssn {

enum class LimitLaw { U, G };

const char* limit_law_name(LimitLaw law);
LimitLaw limit_law_from_name(const std::string& name);

// Monte Carlo sample of a pivotal limit law on a Brownian grid of L steps.
struct QuantileTable {
    LimitLaw law = LimitLaw::U;
    std::vector<double> samples; // sorted ascending
    std::uint32_t grid_steps = 0;
    std::uint32_t reps = 0;
    std::uint64_t seed = 0;
    std::uint32_t version = 1;
};

// Defaults: stable to <1% relative at the 95% quantile; see README.
inline constexpr std::uint32_t kDefaultUL = 2000;
inline constexpr std::uint32_t kDefaultUR = 200000;
inline constexpr std::uint32_t kDefaultGL = 1000;
inline constexpr std::uint32_t kDefaultGR = 50000;

// U = B(1)/sqrt(int_0^1 (B(s)-sB(1))^2 ds), B on the grid {j/L} with
// N(0,1/L) increments, left-endpoint Riemann sum. Deterministic in
// (L,R,seed) and independent of worker count.
QuantileTable simulate_U(std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed);

// G = sup_r (B(r)-rB(1)) / sqrt(int_0^r (B(s)-(s/r)B(r))^2 ds
//          + int_r^1 (B(1)-B(s)-(1-s)/(1-r)(B(1)-B(r)))^2 ds),
// r on {k/L : k=1..L-1}, both integrals in O(L) via prefix/suffix tables.
QuantileTable simulate_G(std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed);

QuantileTable simulate(LimitLaw law, std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed);

// Type-7 empirical quantile (linear interpolation between order statistics).
double quantile(const QuantileTable& table, double prob);

// Upper-tail add-one p-value: (1 + #{samples >= observed}) / (R + 1).
double pvalue(const QuantileTable& table, double observed);

// Cache files named <law>_L<L>_R<R>_S<seed>.qt under `dir`.
std::string cache_path(const std::string& dir, LimitLaw law, std::uint32_t grid_steps,
                       std::uint32_t reps, std::uint64_t seed);
void cache_store(const QuantileTable& table, const std::string& dir);
QuantileTable cache_load(const std::string& dir, LimitLaw law, std::uint32_t grid_steps,
                         std::uint32_t reps, std::uint64_t seed);

// Loads from cache when present, otherwise simulates and stores. `notice`
// (when non-null) receives a one-line message if a simulation was needed.
QuantileTable table_for(LimitLaw law, std::uint32_t grid_steps, std::uint32_t reps,
                        std::uint64_t seed, const std::string& cache_dir,
                        std::string* notice = nullptr);

} // namespace ssn
