#include "reqho/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace reqho::cli {

using nlohmann::ordered_json;

namespace {

ordered_json coeff_list(const exact::Poly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(exact::rat_str(c));
    return a;
}

ordered_json rational_fn_json(const exact::RationalFn& f) {
    ordered_json j;
    j["num"] = coeff_list(f.num());
    j["den"] = coeff_list(f.den());
    j["rendered"] = f.str();
    return j;
}

const char* class_name(spectral::KernelClass c) {
    switch (c) {
        case spectral::KernelClass::PhysicalClosedForm: return "physical";
        case spectral::KernelClass::NonPhysicalClosedForm: return "non-physical";
        case spectral::KernelClass::NonElementary: return "non-elementary";
    }
    return "?";
}

}  // namespace

std::string Report::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["scheme"] = scheme;
    j["admissible"] = admissible;
    if (!admissible) j["witness_roots"] = witness_roots;

    if (system) {
        ordered_json s;
        s["potential"] = rational_fn_json(system->potential);
        s["base_shift"] = exact::rat_str(system->base_shift);
        s["displacement"] = exact::rat_str(system->displacement);
        s["wronskian"] = {{"poly", coeff_list(system->wronskian.value.poly())},
                          {"gexp", system->wronskian.value.gexp()},
                          {"sign", system->wronskian.sign}};
        j["system"] = std::move(s);
    }
    if (spectrum) {
        ordered_json s;
        s["delta"] = exact::rat_str(spectrum->delta);
        s["n_plus"] = spectrum->n_plus;
        s["n_minus"] = spectrum->n_minus;
        s["g_plus_1"] = spectrum->g_plus_1;
        s["gap_half_counts"] = spectrum->n_gaps;
        ordered_json bands = ordered_json::array();
        for (const auto& [start, size] : spectrum->bands)
            bands.push_back({{"start", exact::rat_str(start)}, {"size", size}});
        s["bands"] = std::move(bands);
        ordered_json levels = ordered_json::array();
        for (const auto& e : spectrum->levels) levels.push_back(exact::rat_str(e));
        s["levels"] = std::move(levels);
        s["tail"] = "E_k = " + exact::rat_str(spectrum->delta * 2) + " + 2(k - " +
                    std::to_string(spectrum->n_plus) + ") for k >= " +
                    std::to_string(spectrum->n_plus);
        j["spectrum"] = std::move(s);
    }
    if (!complement.empty()) j["complement"] = complement;

    if (!identities.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : identities) {
            ordered_json e;
            e["name"] = r.name;
            e["status"] = r.verified ? "Verified" : "Failed";
            if (!r.note.empty()) e["note"] = r.note;
            arr.push_back(std::move(e));
        }
        j["identities"] = std::move(arr);
    }
    if (!kernels.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& k : kernels) {
            ordered_json e;
            e["operator"] = k.operator_name;
            ordered_json roots = ordered_json::array();
            for (const auto& r : k.polynomial_roots) roots.push_back(exact::rat_str(r));
            e["polynomial_roots"] = std::move(roots);
            ordered_json members = ordered_json::array();
            for (const auto& m : k.members)
                members.push_back({{"descriptor", m.descriptor},
                                   {"energy", exact::rat_str(m.energy)},
                                   {"class", class_name(m.cls)}});
            e["members"] = std::move(members);
            arr.push_back(std::move(e));
        }
        j["kernels"] = std::move(arr);
    }
    if (!spectrum_table.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : spectrum_table)
            arr.push_back({{"level", r.level},
                           {"predicted", exact::rat_str(r.predicted)},
                           {"computed", r.computed},
                           {"error", r.error}});
        j["spectrum_table"] = std::move(arr);
        j["spectrum_tolerance"] = spectrum_tolerance;
    }
    if (tilde.ran)
        j["tilde_check"] = {{"max_relative_error", tilde.max_relative_error},
                            {"tolerance", tilde.tolerance},
                            {"window_half_width", tilde.window}};
    if (!walks.empty()) j["walks"] = walks;

    j["passed"] = passed;
    j["failures"] = failures;
    return j.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << contents;
        if (!os) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " -> " + path);
}

}  // namespace reqho::cli
