#include "ssn/limitdist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "ssn/parallel.hpp"
#include "ssn/rng.hpp"

namespace ssn {

const char* limit_law_name(LimitLaw law) { return law == LimitLaw::U ? "U" : "G"; }

LimitLaw limit_law_from_name(const std::string& name) {
    if (name == "U" || name == "u") return LimitLaw::U;
    if (name == "G" || name == "g") return LimitLaw::G;
    fail(Errc::invalid_argument, "unknown limit law '" + name + "' (want U or G)");
}

namespace {

// One Brownian path on {j/L}, j=1..L, increments N(0, 1/L).
void brownian_path(std::mt19937_64& eng, std::uint32_t L, std::vector<double>& b) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double step = 1.0 / std::sqrt(static_cast<double>(L));
    b.resize(L + 1);
    b[0] = 0.0;
    for (std::uint32_t j = 1; j <= L; ++j) b[j] = b[j - 1] + step * gauss(eng);
}

double u_from_path(const std::vector<double>& b, std::uint32_t L) {
    const double b1 = b[L];
    double integral = 0.0;
    for (std::uint32_t j = 1; j < L; ++j) {
        const double s = static_cast<double>(j) / static_cast<double>(L);
        const double dev = b[j] - s * b1;
        integral += dev * dev;
    }
    integral /= static_cast<double>(L);
    return b1 / std::sqrt(integral);
}

double g_from_path(const std::vector<double>& b, std::uint32_t L) {
    const double Ld = static_cast<double>(L);
    const double b1 = b[L];

    // Left-endpoint prefix tables over s = j/L, j = 0..L-1:
    //   pre2[k]  = (1/L) sum_{j<k} B(j/L)^2
    //   preSB[k] = (1/L) sum_{j<k} (j/L) B(j/L)
    // and suffix tables of C(s) = B(1)-B(s) over j = k..L-1:
    //   suf2[k]  = (1/L) sum_{j>=k} C^2
    //   sufSC[k] = (1/L) sum_{j>=k} (1-j/L) C
    //   sufS2[k] = (1/L) sum_{j>=k} (1-j/L)^2
    std::vector<double> pre2(L + 1), preSB(L + 1), suf2(L + 1), sufSC(L + 1), sufS2(L + 1);
    pre2[0] = preSB[0] = 0.0;
    for (std::uint32_t j = 0; j < L; ++j) {
        const double s = static_cast<double>(j) / Ld;
        pre2[j + 1] = pre2[j] + b[j] * b[j] / Ld;
        preSB[j + 1] = preSB[j] + s * b[j] / Ld;
    }
    suf2[L] = sufSC[L] = sufS2[L] = 0.0;
    for (std::uint32_t j = L; j-- > 0;) {
        const double s = static_cast<double>(j) / Ld;
        const double c = b1 - b[j];
        suf2[j] = suf2[j + 1] + c * c / Ld;
        sufSC[j] = sufSC[j + 1] + (1.0 - s) * c / Ld;
        sufS2[j] = sufS2[j + 1] + (1.0 - s) * (1.0 - s) / Ld;
    }
    // (1/L) sum_{j<k} (j/L)^2, cheap closed form
    auto pre_ss = [Ld](std::uint32_t k) {
        const double km = static_cast<double>(k) - 1.0;
        return km * (km + 1.0) * (2.0 * km + 1.0) / 6.0 / (Ld * Ld * Ld);
    };

    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t k = 1; k < L; ++k) {
        const double r = static_cast<double>(k) / Ld;
        const double br = b[k];
        const double cr = b1 - br;
        const double head = pre2[k] - (2.0 * br / r) * preSB[k] + (br * br / (r * r)) * pre_ss(k);
        const double tail =
            suf2[k] - (2.0 * cr / (1.0 - r)) * sufSC[k] + (cr * cr / ((1.0 - r) * (1.0 - r))) * sufS2[k];
        const double denom = head + tail;
        if (!(denom > 0.0)) continue;
        const double val = (br - r * b1) / std::sqrt(denom);
        if (val > best) best = val;
    }
    // L=2 leaves a single grid point whose quadrature denominator is exactly
    // zero; emit 0 so degenerate grids still produce finite samples.
    return std::isfinite(best) ? best : 0.0;
}

QuantileTable run(LimitLaw law, std::uint32_t L, std::uint32_t R, std::uint64_t seed) {
    QuantileTable t;
    t.law = law;
    t.grid_steps = L;
    t.reps = R;
    t.seed = seed;
    t.samples.resize(R);
    parallel_for(0, R, [&](std::size_t r) {
        thread_local std::vector<double> path;
        auto eng = make_engine(seed, r);
        brownian_path(eng, L, path);
        t.samples[r] = law == LimitLaw::U ? u_from_path(path, L) : g_from_path(path, L);
    });
    std::sort(t.samples.begin(), t.samples.end());
    return t;
}

} // namespace

QuantileTable simulate_U(std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed) {
    if (grid_steps < 100) fail(Errc::invalid_argument, "simulate_U needs L >= 100");
    if (reps < 1) fail(Errc::invalid_argument, "simulate_U needs R >= 1");
    return run(LimitLaw::U, grid_steps, reps, seed);
}

QuantileTable simulate_G(std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed) {
    if (grid_steps < 2) fail(Errc::invalid_argument, "simulate_G needs L >= 2");
    if (reps < 1) fail(Errc::invalid_argument, "simulate_G needs R >= 1");
    return run(LimitLaw::G, grid_steps, reps, seed);
}

QuantileTable simulate(LimitLaw law, std::uint32_t grid_steps, std::uint32_t reps, std::uint64_t seed) {
    return law == LimitLaw::U ? simulate_U(grid_steps, reps, seed) : simulate_G(grid_steps, reps, seed);
}

double quantile(const QuantileTable& table, double prob) {
    if (table.samples.empty()) fail(Errc::invalid_argument, "empty quantile table");
    if (!(prob > 0.0 && prob < 1.0)) fail(Errc::invalid_argument, "quantile prob must lie in (0,1)");
    const std::size_t n = table.samples.size();
    if (n == 1) return table.samples[0];
    const double h = (static_cast<double>(n) - 1.0) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= n) return table.samples[n - 1];
    return table.samples[lo] + frac * (table.samples[lo + 1] - table.samples[lo]);
}

double pvalue(const QuantileTable& table, double observed) {
    if (table.samples.empty()) fail(Errc::invalid_argument, "empty quantile table");
    if (!std::isfinite(observed)) fail(Errc::invalid_argument, "observed statistic must be finite");
    const auto it = std::lower_bound(table.samples.begin(), table.samples.end(), observed);
    const auto ge = static_cast<double>(table.samples.end() - it);
    return (1.0 + ge) / (static_cast<double>(table.samples.size()) + 1.0);
}

namespace {

std::uint64_t fnv1a(const std::vector<double>& xs) {
    std::uint64_t h = 1469598103934665603ull;
    for (double x : xs) {
        std::uint64_t bits;
        static_assert(sizeof bits == sizeof x);
        std::memcpy(&bits, &x, sizeof bits);
        for (int b = 0; b < 8; ++b) {
            h ^= (bits >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

} // namespace

std::string cache_path(const std::string& dir, LimitLaw law, std::uint32_t L, std::uint32_t R,
                       std::uint64_t seed) {
    std::ostringstream name;
    name << limit_law_name(law) << "_L" << L << "_R" << R << "_S" << seed << ".qt";
    return (std::filesystem::path(dir) / name.str()).string();
}

void cache_store(const QuantileTable& table, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::string path = cache_path(dir, table.law, table.grid_steps, table.reps, table.seed);
    std::ofstream out(path);
    if (!out) fail(Errc::missing_file, "cannot write cache file " + path);
    char buf[64];
    out << "law,L,R,seed,version,checksum\n";
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(table.samples)));
    out << limit_law_name(table.law) << ',' << table.grid_steps << ',' << table.reps << ','
        << table.seed << ',' << table.version << ',' << buf << '\n';
    for (double x : table.samples) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out << buf << '\n';
    }
}

QuantileTable cache_load(const std::string& dir, LimitLaw law, std::uint32_t L, std::uint32_t R,
                         std::uint64_t seed) {
    const std::string path = cache_path(dir, law, L, R, seed);
    std::ifstream in(path);
    if (!in) fail(Errc::not_found, "no cache file " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind("law,L,R,seed,version,checksum", 0) != 0)
        fail(Errc::version_mismatch, path + ": unrecognized header");
    if (!std::getline(in, line)) fail(Errc::checksum_mismatch, path + ": truncated metadata");

    QuantileTable t;
    char law_buf[8] = {0};
    unsigned long long lv = 0, rv = 0, sv = 0, ver = 0, sum = 0;
    if (std::sscanf(line.c_str(), "%7[^,],%llu,%llu,%llu,%llu,%llx", law_buf, &lv, &rv, &sv, &ver,
                    &sum) != 6)
        fail(Errc::checksum_mismatch, path + ": bad metadata line");
    t.law = limit_law_from_name(law_buf);
    t.grid_steps = static_cast<std::uint32_t>(lv);
    t.reps = static_cast<std::uint32_t>(rv);
    t.seed = sv;
    t.version = static_cast<std::uint32_t>(ver);
    if (t.version != 1) fail(Errc::version_mismatch, path + ": unsupported version");
    if (t.law != law || t.grid_steps != L || t.reps != R || t.seed != seed)
        fail(Errc::checksum_mismatch, path + ": metadata does not match file name");

    t.samples.reserve(t.reps);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        t.samples.push_back(std::strtod(line.c_str(), nullptr));
    }
    if (t.samples.size() != t.reps) fail(Errc::checksum_mismatch, path + ": truncated samples");
    if (fnv1a(t.samples) != sum) fail(Errc::checksum_mismatch, path + ": checksum mismatch");
    return t;
}

QuantileTable table_for(LimitLaw law, std::uint32_t L, std::uint32_t R, std::uint64_t seed,
                        const std::string& cache_dir, std::string* notice) {
    try {
        return cache_load(cache_dir, law, L, R, seed);
    } catch (const Error& e) {
        if (e.code() != Errc::not_found) throw;
    }
    if (notice) {
        std::ostringstream msg;
        msg << "simulating " << limit_law_name(law) << " limit law (L=" << L << ", R=" << R
            << "); cached under " << cache_dir << " for reuse";
        *notice = msg.str();
    }
    QuantileTable t = simulate(law, L, R, seed);
    cache_store(t, cache_dir);
    return t;
}

} // namespace ssn
