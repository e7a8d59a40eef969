#pragma once

#include <string>
#include <vector>

#include "reqho/scheme.hpp"

namespace reqho::cli {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// On-disk description of a run: seed list plus options. Strictly validated;
// unknown keys anywhere are rejected.
//
//   {
//     "seeds": [{"kind": "phys" | "nonphys", "n": 2}, ...],
//     "options": {
//       "gauge": "ground-zero",
//       "grid": {"L": 10.0, "N": 4000},
//       "checks": ["identities", "kernels", "spectrum", "tilde"]
//     }
//   }
struct SchemeFile {
    dckat::Scheme scheme;
    std::string gauge = "ground-zero";
    double grid_half_width = 10.0;
    int grid_points = 4000;
    std::vector<std::string> checks;  // empty = default set
};

SchemeFile parse_scheme_file(const std::string& path);
SchemeFile parse_scheme_json(const std::string& text);

}  // namespace reqho::cli
