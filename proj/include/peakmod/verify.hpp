#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "peakmod/enumeration.hpp"

namespace peakmod {

struct VerifyFailure {
    std::string check;
    std::string inputs;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    long checks_run = 0;
    std::vector<VerifyFailure> failures;

    bool ok() const { return failures.empty(); }

    /// Records one comparison; returns whether it held.
    bool expect(bool holds, std::string check, std::string inputs, std::string expected, std::string got);
    bool expect_eq(const std::string& check, const std::string& inputs, const std::string& expected,
                   const std::string& got) {
        return expect(expected == got, check, inputs, expected, got);
    }

    std::string to_text() const;
    std::string to_json() const;
};

/// Unset bounds fall back to per-suite defaults.
struct VerifyOptions {
    std::optional<int> k;
    std::optional<int> max_n;
    std::optional<int> max_m;
    std::optional<int> max_length;
    EnumerationLimits limits;
    int jobs = 1;
};

/// equidistribution, bijection, closed-forms, series, ballot, figures, deutsch.
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidArgument) for an unknown suite and lets
/// Error(ResourceLimit) escape from enumeration.
VerifyReport run_suite(std::string_view name, const VerifyOptions& options);

VerifyReport verify_equidistribution(const VerifyOptions& options);
VerifyReport verify_bijection(const VerifyOptions& options);
VerifyReport verify_closed_forms(const VerifyOptions& options);
VerifyReport verify_series(const VerifyOptions& options);
VerifyReport verify_ballot(const VerifyOptions& options);
VerifyReport verify_figures(const VerifyOptions& options);
VerifyReport verify_deutsch(const VerifyOptions& options);

}  // namespace peakmod
