#include "ssn/selfnorm.hpp"

#include <cmath>
#include <limits>

namespace ssn {

SnMeanResult sn_mean_stat(const ProjectedSequence& seq) {
    const std::size_t m = seq.z.size();
    if (m < 2) fail(Errc::invalid_argument, "sn_mean_stat needs m >= 2");

    double sum = 0.0;
    for (double v : seq.z) sum += v;
    const double t = sum / static_cast<double>(m);

    double w2 = 0.0, partial = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        partial += seq.z[i];
        const double dev = partial - static_cast<double>(i + 1) * t;
        w2 += dev * dev;
    }
    w2 /= static_cast<double>(m) * static_cast<double>(m);

    const double w = std::sqrt(w2);
    if (w == 0.0) fail(Errc::degenerate_normalizer, "self-normalizer is zero (constant sequence)");
    const double u = t / w;
    return {t, w, u, std::sqrt(static_cast<double>(m)) * u};
}

namespace {
// sum of squares 1^2 + ... + k^2
inline double sum_sq(std::size_t k) {
    const double x = static_cast<double>(k);
    return x * (x + 1.0) * (2.0 * x + 1.0) / 6.0;
}
} // namespace

CusumResult cusum_stat(const ProjectedSequence& seq) {
    const std::size_t N = seq.z.size();
    if (N < 3) fail(Errc::invalid_argument, "cusum_stat needs N >= 3");
    const double Nd = static_cast<double>(N);
    const double* z = seq.z.data();

    // Prefix tables over t = 1..N (index 0 unused):
    //   P[t] = Z_{1:t},  cumP2[t] = sum_{u<=t} P[u]^2,  cumTP[t] = sum_{u<=t} u P[u]
    std::vector<double> P(N + 1, 0.0), cumP2(N + 1, 0.0), cumTP(N + 1, 0.0);
    for (std::size_t t = 1; t <= N; ++t) {
        P[t] = P[t - 1] + z[t - 1];
        cumP2[t] = cumP2[t - 1] + P[t] * P[t];
        cumTP[t] = cumTP[t - 1] + static_cast<double>(t) * P[t];
    }
    // Suffix tables: S[t] = Z_{t:N}, sufS2[t] = sum_{u>=t} S[u]^2,
    //   sufUS[t] = sum_{u>=t} (N-u+1) S[u]
    std::vector<double> S(N + 2, 0.0), sufS2(N + 2, 0.0), sufUS(N + 2, 0.0);
    for (std::size_t t = N; t >= 1; --t) {
        S[t] = S[t + 1] + z[t - 1];
        sufS2[t] = sufS2[t + 1] + S[t] * S[t];
        sufUS[t] = sufUS[t + 1] + static_cast<double>(N - t + 1) * S[t];
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CusumResult res{-std::numeric_limits<double>::infinity(), 0, std::vector<double>(N - 1, nan)};
    for (std::size_t k = 1; k <= N - 1; ++k) {
        const double kd = static_cast<double>(k);
        const double tail = Nd - kd;

        const double head_ss = cumP2[k] - (2.0 * P[k] / kd) * cumTP[k] + (P[k] * P[k] / (kd * kd)) * sum_sq(k);
        const double tail_ss = sufS2[k + 1] - (2.0 * S[k + 1] / tail) * sufUS[k + 1] +
                               (S[k + 1] * S[k + 1] / (tail * tail)) * sum_sq(N - k);
        const double v = (head_ss + tail_ss) / (Nd * Nd);
        if (!(v > 0.0)) continue; // exact-math V(k) >= 0; cancellation noise counts as zero
        const double t_k = (P[k] - kd / Nd * P[N]) / std::sqrt(Nd);
        const double ratio = t_k / std::sqrt(v);
        res.ratios[k - 1] = ratio;
        if (ratio > res.g) {
            res.g = ratio;
            res.khat = k;
        }
    }
    if (res.khat == 0) fail(Errc::all_normalizers_zero, "every V(k) is zero (degenerate sequence)");
    return res;
}

} // namespace ssn
