#pragma once

#include <iosfwd>
#include <string>

#include "reqho/report.hpp"
#include "reqho/scheme_file.hpp"

namespace reqho::cli {

// exit codes shared by every command
inline constexpr int exit_ok = 0;
inline constexpr int exit_defect = 1;  // an exact identity the theory asserts failed
inline constexpr int exit_user = 2;    // parse error / inadmissible scheme

struct DriverOptions {
    std::string report_dir = ".";  // overridden by REQHO_REPORT_DIR
    std::optional<double> grid_half_width;
    std::optional<int> grid_points;
    std::vector<std::string> checks;  // overrides the scheme file when non-empty
};

// Construction-only run: admissibility, potential, spectrum prediction.
int run_build(const std::string& scheme_path, const DriverOptions& opts, std::ostream& log);

// Full verification: identity catalog, kernel classification, numeric
// spectrum cross-check; requires a minimal single-family scheme (the
// complement is derived automatically).
int run_verify(const std::string& scheme_path, const DriverOptions& opts, std::ostream& log);

// Deterministic data exports. what: "potential" | "spectrum" | "states".
int run_export(const std::string& scheme_path, const std::string& what,
               const DriverOptions& opts, std::ostream& log);

std::string report_dir_from_env(const std::string& fallback = ".");

}  // namespace reqho::cli
