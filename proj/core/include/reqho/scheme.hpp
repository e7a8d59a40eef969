#pragma once

#include <compare>
#include <string>
#include <vector>

#include "reqho/oscillator.hpp"

namespace reqho::dckat {

using osc::Kind;

struct SeedId {
    Kind kind;
    int index;
    friend auto operator<=>(const SeedId&, const SeedId&) = default;
};

enum class SchemeLabel { Alpha, Beta, Gamma };

// An ordered, duplicate-free set of transformation seeds. Alpha schemes use
// only non-physical states, beta schemes only physical ones, gamma both.
class Scheme {
public:
    Scheme() = default;
    explicit Scheme(std::vector<SeedId> seeds);

    static Scheme alpha(std::vector<int> nonphysical_indices);
    static Scheme beta(std::vector<int> physical_indices);

    const std::vector<SeedId>& seeds() const { return seeds_; }
    bool empty() const { return seeds_.empty(); }
    int size() const { return static_cast<int>(seeds_.size()); }
    SchemeLabel label() const;

    std::vector<int> indices(Kind kind) const;  // sorted
    bool is_pure(Kind kind) const;
    // minimal pure scheme: single-kind set not containing index 0
    bool is_minimal(Kind kind) const;

    std::vector<osc::SeedState> materialize() const;

    std::string str() const;
    friend bool operator==(const Scheme& a, const Scheme& b) { return a.seeds_ == b.seeds_; }

private:
    std::vector<SeedId> seeds_;
};

// Spectrum bookkeeping shared by the system builder and the spectral
// predictor: levels are quoted against the unshifted oscillator. Physical
// seeds delete their levels, non-physical seeds insert theirs.
struct LevelLayout {
    // re-gauged even levels strictly below the equidistant tail, ascending
    std::vector<long> separated;
    long tail_start = 0;            // first level of the unbroken tail (= 2*Delta)
    long raw_ground = 1;            // lowest predicted level before re-gauge
    long delta = 0;                 // tail_start / 2
    int n_plus = 0;                 // separated level count
    int n_minus2 = 0;               // total missing levels below the tail (= 2 n_-)
    std::vector<long> gap_sizes;    // missing levels per gap, top gap first
    std::vector<std::pair<long, int>> bands;  // (start level, size), ascending
    bool parity_ok = true;          // every gap holds an even number of levels
};

LevelLayout predict_levels(const Scheme& s);

}  // namespace reqho::dckat
