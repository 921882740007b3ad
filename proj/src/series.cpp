#include "ssn/series.hpp"

#include <cmath>

namespace ssn {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::missing_file: return "MissingFile";
        case Errc::empty_input: return "EmptyInput";
        case Errc::ragged_rows: return "RaggedRows";
        case Errc::non_numeric: return "NonNumeric";
        case Errc::non_finite: return "NonFinite";
        case Errc::split_too_small: return "SplitTooSmall";
        case Errc::invalid_eta: return "InvalidEta";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::all_points_identical: return "AllPointsIdentical";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::degenerate_normalizer: return "DegenerateNormalizer";
        case Errc::all_normalizers_zero: return "AllNormalizersZero";
        case Errc::lag_too_large: return "LagTooLarge";
        case Errc::not_found: return "NotFound";
        case Errc::checksum_mismatch: return "ChecksumMismatch";
        case Errc::version_mismatch: return "VersionMismatch";
    }
    return "UnknownError";
}

Series::Series(Matrix m, Geometry g) : values(std::move(m)), geometry(g) {
    if (values.rows < 1 || values.cols < 1)
        fail(Errc::empty_input, "series must be at least 1x1");
    for (double x : values.v)
        if (!std::isfinite(x)) fail(Errc::non_finite, "series contains NaN/Inf");
}

void SplitConfig::validate(SplitScheme scheme) const {
    const double hi = scheme == SplitScheme::two_way ? 1.0 : 0.5;
    if (!(eta > 0.0 && eta < hi))
        fail(Errc::invalid_eta, "eta must lie in (0," + std::string(scheme == SplitScheme::two_way ? "1" : "0.5") + ")");
}

std::vector<IndexRange> split_indices(std::size_t n, double eta, SplitScheme scheme) {
    SplitConfig{eta}.validate(scheme);
    if (n < 4) fail(Errc::split_too_small, "need n >= 4");
    const auto m1 = static_cast<std::size_t>(std::floor(static_cast<double>(n) * eta));
    std::vector<IndexRange> blocks;
    if (scheme == SplitScheme::two_way) {
        blocks = {{0, m1}, {m1, n}};
    } else {
        if (2 * m1 >= n) fail(Errc::split_too_small, "middle block is empty");
        blocks = {{0, m1}, {m1, n - m1}, {n - m1, n}};
    }
    for (const auto& b : blocks)
        if (b.len() == 0) fail(Errc::split_too_small, "split block of length 0");
    return blocks;
}

} // namespace ssn
