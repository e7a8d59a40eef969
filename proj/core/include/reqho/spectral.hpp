#pragma once

#include "reqho/ladder.hpp"

namespace reqho::spectral {

using dckat::Scheme;
using exact::QuasiRational;
using exact::Rat;
using ladder::LadderOp;
using ladder::Trinity;

// Predicted level structure in the ground-zero gauge. The levels are even
// integers; above 2*delta the spectrum is the unbroken ladder
// 2*delta, 2*delta + 2, ...
struct SpectrumModel {
    std::vector<Rat> levels;        // separated levels plus the first few tail levels
    int n_plus = 0;                 // separated states
    int n_minus = 0;                // half the missing levels
    std::vector<int> n_gaps;        // per-gap missing-level half-counts, top gap first
    int g_plus_1 = 0;               // valence band count
    Rat delta;                      // n_plus + 2 n_minus
    std::vector<std::pair<Rat, int>> bands;  // (start energy, state count), ascending
    int tail_levels_listed = 4;

    // energy of the k-th physical level (0-based), exact
    Rat level(int k) const;
};

SpectrumModel predict_spectrum(const Scheme& s);

// Complementary minimal scheme: for an all-non-physical scheme with indices
// J and j+ = max J, the physical index set {0..j+} \ { j+ - j : j in J },
// and the inverse map for an all-physical input. Round trip is the
// identity. Throws std::invalid_argument for mixed or non-minimal input.
Scheme complementary_scheme(const Scheme& s);

enum class KernelClass { PhysicalClosedForm, NonPhysicalClosedForm, NonElementary };

struct KernelMember {
    std::string descriptor;  // e.g. "A- psi-_1" or "tilde @ E=4"
    Rat energy;
    KernelClass cls;
    QuasiRational state;  // empty for NonElementary placeholders
};

struct KernelReport {
    std::string operator_name;
    std::vector<KernelMember> members;       // ascending energy
    std::vector<Rat> polynomial_roots;       // ascending, with multiplicity
};

// Enumerates the closed-form eigenstates at each root of the operator's
// product polynomial, applies the operator exactly, and records the
// annihilated ones; leftover root multiplicity is attributed to
// non-elementary partner states.
KernelReport kernel_classify(const LadderOp& op, const Trinity& t);

struct Walk {
    bool found = false;
    std::vector<std::string> word;  // applied right-to-left, e.g. {"C-"}
    int from_level = 0, to_level = 0;
};

// Breadth-first search for a word in the trinity mapping the from-th
// physical eigenstate to a nonzero multiple of the to-th, each edge checked
// by exact operator application. Throws std::runtime_error when nothing is
// found within the documented bound (a defect, not an expected outcome).
Walk spectrum_generating_walk(const Trinity& t, int from_level, int to_level);

// Exact closed-form representative of the k-th physical level.
QuasiRational physical_state(const Trinity& t, int level);

}  // namespace reqho::spectral
