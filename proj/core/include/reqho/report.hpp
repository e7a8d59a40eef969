#pragma once

#include <optional>
#include <string>

#include "reqho/numeric.hpp"
#include "reqho/spectral.hpp"

namespace reqho::cli {

// Machine-readable run report. Serialization is deterministic: fixed key
// order, no timestamps, rationals as "num/den" strings.
struct Report {
    std::string command;  // "build" or "verify"
    std::string scheme;
    bool admissible = true;
    int witness_roots = 0;

    std::optional<dckat::ExtendedSystem> system;
    std::optional<spectral::SpectrumModel> spectrum;
    std::string complement;  // derived complementary scheme, when used

    struct IdentityResult {
        std::string name;
        bool verified = false;
        std::string note;
    };
    std::vector<IdentityResult> identities;

    std::vector<spectral::KernelReport> kernels;

    struct SpectrumRow {
        int level;
        exact::Rat predicted;
        double computed = 0.0;
        double error = 0.0;
    };
    std::vector<SpectrumRow> spectrum_table;
    double spectrum_tolerance = 1e-3;

    struct TildeCheck {
        bool ran = false;
        double max_relative_error = 0.0;
        double tolerance = 1e-5;
        double window = 3.0;
    } tilde;

    std::vector<std::string> walks;  // rendered walk descriptors

    bool passed = true;
    std::vector<std::string> failures;  // human-readable reasons

    std::string to_json() const;  // pretty, stable
};

// Atomic write (tmp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace reqho::cli
