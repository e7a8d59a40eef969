#include "reqho/scheme.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reqho::dckat {

Scheme::Scheme(std::vector<SeedId> seeds) : seeds_(std::move(seeds)) {
    std::set<SeedId> seen;
    for (const auto& s : seeds_) {
        if (s.index < 0) throw std::invalid_argument("Scheme: negative seed index");
        if (!seen.insert(s).second) throw std::invalid_argument("Scheme: repeated seed state");
    }
}

Scheme Scheme::alpha(std::vector<int> idx) {
    std::vector<SeedId> s;
    s.reserve(idx.size());
    for (int i : idx) s.push_back({Kind::NonPhysical, i});
    return Scheme(std::move(s));
}

Scheme Scheme::beta(std::vector<int> idx) {
    std::vector<SeedId> s;
    s.reserve(idx.size());
    for (int i : idx) s.push_back({Kind::Physical, i});
    return Scheme(std::move(s));
}

SchemeLabel Scheme::label() const {
    bool any_phys = false, any_non = false;
    for (const auto& s : seeds_) (s.kind == Kind::Physical ? any_phys : any_non) = true;
    if (any_phys && any_non) return SchemeLabel::Gamma;
    return any_phys ? SchemeLabel::Beta : SchemeLabel::Alpha;
}

std::vector<int> Scheme::indices(Kind kind) const {
    std::vector<int> r;
    for (const auto& s : seeds_)
        if (s.kind == kind) r.push_back(s.index);
    std::sort(r.begin(), r.end());
    return r;
}

bool Scheme::is_pure(Kind kind) const {
    if (seeds_.empty()) return false;
    return std::all_of(seeds_.begin(), seeds_.end(),
                       [&](const SeedId& s) { return s.kind == kind; });
}

bool Scheme::is_minimal(Kind kind) const {
    if (!is_pure(kind)) return false;
    return std::none_of(seeds_.begin(), seeds_.end(),
                        [](const SeedId& s) { return s.index == 0; });
}

std::vector<osc::SeedState> Scheme::materialize() const {
    std::vector<osc::SeedState> r;
    r.reserve(seeds_.size());
    for (const auto& s : seeds_) r.push_back(osc::seed(s.kind, s.index));
    return r;
}

std::string Scheme::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < seeds_.size(); ++i) {
        if (i) os << ", ";
        os << (seeds_[i].kind == Kind::Physical ? "psi_" : "psi-_") << seeds_[i].index;
    }
    os << "}";
    return os.str();
}

LevelLayout predict_levels(const Scheme& s) {
    LevelLayout out;
    std::set<long> deleted;
    std::set<long> levels;
    for (int i : s.indices(Kind::Physical)) deleted.insert(2L * i + 1);
    for (int j : s.indices(Kind::NonPhysical)) levels.insert(-(2L * j + 1));
    long max_needed = 1;
    if (!levels.empty()) max_needed = std::max(max_needed, -*levels.begin());
    if (!deleted.empty()) max_needed = std::max(max_needed, *deleted.rbegin());
    // enough oscillator ladder to expose the unbroken tail
    for (long e = 1; e <= max_needed + 3; e += 2)
        if (!deleted.count(e)) levels.insert(e);

    out.raw_ground = *levels.begin();
    std::vector<long> shifted;
    for (long e : levels) shifted.push_back(e - out.raw_ground);

    // the tail starts after the last hole
    long tail = 0;
    for (size_t i = 0; i + 1 < shifted.size(); ++i)
        if (shifted[i + 1] != shifted[i] + 2) tail = shifted[i + 1];
    out.tail_start = tail;
    out.delta = tail / 2;
    for (long e : shifted)
        if (e < tail) out.separated.push_back(e);
    out.n_plus = static_cast<int>(out.separated.size());
    out.n_minus2 = static_cast<int>(tail / 2) - out.n_plus;

    // bands and gaps below the tail
    for (long e : out.separated) {
        if (!out.bands.empty() &&
            out.bands.back().first + 2L * out.bands.back().second == e) {
            ++out.bands.back().second;
        } else {
            out.bands.push_back({e, 1});
        }
    }
    std::vector<long> edges;  // band tops plus tail start, ascending
    for (const auto& b : out.bands) edges.push_back(b.first + 2L * (b.second - 1));
    edges.push_back(tail);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        long next_band_start = (i + 1 < out.bands.size()) ? out.bands[i + 1].first : tail;
        long missing = (next_band_start - (edges[i] + 2)) / 2;
        out.gap_sizes.push_back(missing);
        if (missing % 2 != 0) out.parity_ok = false;
    }
    // top gap first, per the usual indexing of internal gaps
    std::reverse(out.gap_sizes.begin(), out.gap_sizes.end());
    return out;
}

}  // namespace reqho::dckat
