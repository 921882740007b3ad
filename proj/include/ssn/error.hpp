#pragma once

#include <stdexcept>
#include <string>

namespace ssn {

enum class Errc {
    missing_file,
    empty_input,
    ragged_rows,
    non_numeric,
    non_finite,
    split_too_small,
    invalid_eta,
    dimension_mismatch,
    all_points_identical,
    invalid_argument,
    degenerate_normalizer,
    all_normalizers_zero,
    lag_too_large,
    not_found,
    checksum_mismatch,
    version_mismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace ssn
