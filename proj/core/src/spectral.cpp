#include "reqho/spectral.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reqho::spectral {

using dckat::Kind;
using exact::rat;

Rat SpectrumModel::level(int k) const {
    if (k < 0) throw std::invalid_argument("SpectrumModel::level: negative index");
    if (k < static_cast<int>(levels.size()) && Rat(levels[k]) < delta * 2) return levels[k];
    return 2 * delta + Rat(2 * (k - n_plus));
}

SpectrumModel predict_spectrum(const Scheme& s) {
    if (!s.empty()) {
        auto adm = dckat::check_admissible(s);
        if (!adm.admissible)
            throw dckat::inadmissible_error("predict_spectrum: inadmissible scheme " + s.str(),
                                            adm.witness_roots);
    }
    auto layout = dckat::predict_levels(s);
    SpectrumModel m;
    m.n_plus = layout.n_plus;
    m.n_minus = layout.n_minus2 / 2;
    m.delta = rat(layout.delta);
    m.g_plus_1 = static_cast<int>(layout.bands.size());
    for (long g : layout.gap_sizes) m.n_gaps.push_back(static_cast<int>(g / 2));
    for (const auto& [start, count] : layout.bands) m.bands.push_back({rat(start), count});
    for (long e : layout.separated) m.levels.push_back(rat(e));
    for (int i = 0; i < m.tail_levels_listed; ++i)
        m.levels.push_back(rat(layout.tail_start + 2L * i));
    return m;
}

Scheme complementary_scheme(const Scheme& s) {
    bool alpha = s.is_minimal(Kind::NonPhysical);
    bool beta = s.is_minimal(Kind::Physical);
    if (!alpha && !beta)
        throw std::invalid_argument(
            "complementary_scheme: input must be a minimal single-family scheme");
    auto idx = s.indices(alpha ? Kind::NonPhysical : Kind::Physical);
    int top = idx.back();
    std::set<int> removed;
    for (int j : idx) removed.insert(top - j);
    std::vector<int> out;
    for (int i = 0; i <= top; ++i)
        if (!removed.count(i)) out.push_back(i);
    return alpha ? Scheme::beta(out) : Scheme::alpha(out);
}

QuasiRational physical_state(const Trinity& t, int level) {
    if (level < 0) throw std::invalid_argument("physical_state: negative level");
    const auto& layout = t.alpha.layout;
    long energy = level < layout.n_plus ? layout.separated[static_cast<size_t>(level)]
                                        : layout.tail_start + 2L * (level - layout.n_plus);
    if (energy >= 2 * t.delta) {
        int n = static_cast<int>((energy - 2 * t.delta) / 2);
        return t.alpha.intertwiner_down.apply(osc::hermite_physical(n).state);
    }
    // separated states come from the surviving low oscillator states via the
    // beta-scheme intertwiner
    int n = static_cast<int>(energy / 2);
    QuasiRational v = t.beta.intertwiner_down.apply(osc::hermite_physical(n).state);
    if (v.is_zero()) throw std::logic_error("physical_state: representative vanished");
    return v;
}

namespace {

struct Candidate {
    std::string descriptor;
    QuasiRational state;
};

std::vector<Candidate> closed_form_candidates(const Trinity& t, const Rat& energy) {
    std::vector<Candidate> out;
    const Rat two_delta = rat(2 * t.delta);
    auto try_add = [&](const std::string& desc, const QuasiRational& v) {
        if (v.is_zero()) return;
        for (const auto& c : out)
            if (exact::proportionality(c.state, v)) return;
        out.push_back({desc, v});
    };
    auto as_index = [](const Rat& q) -> std::optional<int> {
        if (!exact::is_integer(q)) return std::nullopt;
        long v = exact::to_long(q);
        if (v < 0 || v > 1000) return std::nullopt;
        return static_cast<int>(v);
    };

    // physical images through the alpha intertwiner sit at E = 2n + 2*delta
    if (auto n = as_index((energy - two_delta) / 2)) {
        std::ostringstream d;
        d << "Psi_" << t.n_plus + *n;
        try_add(d.str(), t.alpha.intertwiner_down.apply(osc::hermite_physical(*n).state));
    }
    // non-physical images through alpha: E = 2*delta - 2n - 2
    if (auto n = as_index((two_delta - energy - 2) / 2)) {
        std::ostringstream d;
        d << "A- psi-_" << *n;
        try_add(d.str(), t.alpha.intertwiner_down.apply(osc::hermite_nonphysical(*n).state));
    }
    // physical images through beta: E = 2n
    if (auto n = as_index(energy / 2)) {
        QuasiRational v = t.beta.intertwiner_down.apply(osc::hermite_physical(*n).state);
        if (!v.is_zero()) {
            const auto& sep = t.alpha.layout.separated;
            auto here = std::find(sep.begin(), sep.end(), exact::to_long(energy));
            std::ostringstream d;
            if (here != sep.end()) {
                d << "Psi_" << (here - sep.begin());
            } else if (energy >= two_delta) {
                d << "Psi_" << t.n_plus + exact::to_long((energy - two_delta) / 2);
            } else {
                d << "B- psi_" << *n;
            }
            try_add(d.str(), v);
        }
    }
    // non-physical images through beta: E = -2n - 2
    if (auto n = as_index((-energy - 2) / 2)) {
        std::ostringstream d;
        d << "B- psi-_" << *n;
        try_add(d.str(), t.beta.intertwiner_down.apply(osc::hermite_nonphysical(*n).state));
    }
    return out;
}

}  // namespace

KernelReport kernel_classify(const LadderOp& op, const Trinity& t) {
    KernelReport report;
    report.operator_name = op.name;
    exact::DiffOp composed = op.op.adjoint() * op.op;
    auto poly = exact::as_poly_in_op(composed, t.h);
    if (!poly)
        throw std::runtime_error("kernel_classify: " + op.name +
                                 "^+ " + op.name + " is not a polynomial in the Hamiltonian");
    ladder::HPolynomial hp =
        ladder::factor_integer_roots(*poly, 2 * t.delta + 2L * poly->degree() + 64);
    report.polynomial_roots = hp.root_multiset();

    for (const auto& [root, mult] : hp.roots) {
        int found = 0;
        for (const auto& cand : closed_form_candidates(t, root)) {
            if (!op.op.apply(cand.state).is_zero()) continue;
            if (found == mult)
                throw std::logic_error("kernel_classify: more closed-form kernel members than "
                                       "root multiplicity at E=" + exact::rat_str(root));
            KernelMember m;
            m.descriptor = cand.descriptor;
            m.energy = root;
            m.cls = cand.state.gexp() < 0 ? KernelClass::PhysicalClosedForm
                                          : KernelClass::NonPhysicalClosedForm;
            m.state = cand.state;
            report.members.push_back(std::move(m));
            ++found;
        }
        for (int i = found; i < mult; ++i) {
            KernelMember m;
            m.descriptor = "tilde @ E=" + exact::rat_str(root);
            m.energy = root;
            m.cls = KernelClass::NonElementary;
            report.members.push_back(std::move(m));
        }
    }
    std::stable_sort(report.members.begin(), report.members.end(),
                     [](const KernelMember& a, const KernelMember& b) { return a.energy < b.energy; });
    return report;
}

Walk spectrum_generating_walk(const Trinity& t, int from_level, int to_level) {
    Walk walk;
    walk.from_level = from_level;
    walk.to_level = to_level;

    const long tail = t.alpha.layout.tail_start;
    auto energy_of = [&](int k) {
        return k < t.n_plus ? t.alpha.layout.separated[static_cast<size_t>(k)]
                            : tail + 2L * (k - t.n_plus);
    };
    std::map<long, int> level_of_energy;
    const long energy_cap =
        std::max(energy_of(from_level), energy_of(to_level)) + 8 * t.delta + 8;
    for (int k = 0;; ++k) {
        long e = energy_of(k);
        if (e > energy_cap) break;
        level_of_energy[e] = k;
    }

    const LadderOp* ops[] = {&t.a_minus, &t.a_plus, &t.b_minus, &t.b_plus, &t.c_minus, &t.c_plus};
    std::map<int, QuasiRational> reps;
    auto rep = [&](int k) -> const QuasiRational& {
        auto it = reps.find(k);
        if (it == reps.end()) it = reps.emplace(k, physical_state(t, k)).first;
        return it->second;
    };
    // edge cache: (op, level) -> destination level, -1 when annihilated
    std::map<std::pair<int, int>, int> edges;
    auto step = [&](int oi, int k) -> int {
        auto key = std::make_pair(oi, k);
        auto it = edges.find(key);
        if (it != edges.end()) return it->second;
        const LadderOp& L = *ops[oi];
        long target_energy = energy_of(k) + L.direction * L.step;
        int dest = -1;
        auto te = level_of_energy.find(target_energy);
        if (te != level_of_energy.end()) {
            QuasiRational image = L.op.apply(rep(k));
            if (!image.is_zero()) {
                if (!exact::proportionality(rep(te->second), image))
                    throw std::logic_error("spectrum_generating_walk: image of a physical state "
                                           "is not the expected eigenstate");
                dest = te->second;
            }
        }
        edges[key] = dest;
        return dest;
    };

    const int max_word = static_cast<int>(2 * (t.delta + t.n_plus) + 4);
    std::queue<int> frontier;
    std::map<int, std::pair<int, int>> parent;  // level -> (previous level, op index)
    std::set<int> seen{from_level};
    frontier.push(from_level);
    int depth = 0;
    while (!frontier.empty() && depth <= max_word && !walk.found) {
        std::queue<int> next;
        while (!frontier.empty()) {
            int k = frontier.front();
            frontier.pop();
            if (k == to_level) {
                walk.found = true;
                break;
            }
            for (int oi = 0; oi < 6; ++oi) {
                int dest = step(oi, k);
                if (dest < 0 || seen.count(dest)) continue;
                if (energy_of(dest) > energy_cap) continue;
                seen.insert(dest);
                parent[dest] = {k, oi};
                next.push(dest);
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    if (!walk.found)
        throw std::runtime_error("spectrum_generating_walk: no word found within bound (defect)");
    for (int k = to_level; k != from_level;) {
        auto [prev, oi] = parent.at(k);
        walk.word.push_back(ops[oi]->name);
        k = prev;
    }
    std::reverse(walk.word.begin(), walk.word.end());
    return walk;
}

}  // namespace reqho::spectral
