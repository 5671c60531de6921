#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lmlab {

enum class ErrorKind {
    invalid_parameter,
    cap_exceeded,
    dimension_mismatch,
    too_few_codewords,
    singular_matrix,
    hypotheses_unmet,
    invalid_s,
    parameter_out_of_range,
    precondition_violated,
    parse_error,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Enumeration and brute-force guardrails. All counts are in cells/vectors/pairs.
struct Limits {
    unsigned long long enumeration = 10'000'000;
    unsigned long long disjointness_cells = 1'000'000;
    unsigned long long equivalence_pairs = 1'000'000;
    unsigned long long sublattice_index = 10'000;
};

inline const Limits kDefaultLimits{};

}  // namespace lmlab
