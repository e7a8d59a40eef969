#include "reqho/scheme_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace reqho::cli {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw parse_error("unknown key '" + it.key() + "' in " + where);
}

const std::set<std::string> known_checks{
    "identities", "kernels", "spectrum", "tilde", "generation-deep", "walks"};

}  // namespace

SchemeFile parse_scheme_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("top level must be an object");
    require_keys(j, {"seeds", "options"}, "top level");
    if (!j.contains("seeds") || !j["seeds"].is_array())
        throw parse_error("'seeds' must be an array");

    SchemeFile out;
    std::vector<dckat::SeedId> seeds;
    for (const auto& s : j["seeds"]) {
        if (!s.is_object()) throw parse_error("each seed must be an object");
        require_keys(s, {"kind", "n"}, "seed entry");
        if (!s.contains("kind") || !s.contains("n"))
            throw parse_error("seed entry needs 'kind' and 'n'");
        std::string kind = s["kind"].get<std::string>();
        if (kind != "phys" && kind != "nonphys")
            throw parse_error("seed kind must be 'phys' or 'nonphys'");
        if (!s["n"].is_number_integer() || s["n"].get<long>() < 0)
            throw parse_error("seed index must be a non-negative integer");
        seeds.push_back({kind == "phys" ? dckat::Kind::Physical : dckat::Kind::NonPhysical,
                         s["n"].get<int>()});
    }
    try {
        out.scheme = dckat::Scheme(std::move(seeds));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }

    if (j.contains("options")) {
        const auto& o = j["options"];
        if (!o.is_object()) throw parse_error("'options' must be an object");
        require_keys(o, {"gauge", "grid", "checks"}, "options");
        if (o.contains("gauge")) {
            out.gauge = o["gauge"].get<std::string>();
            if (out.gauge != "ground-zero")
                throw parse_error("unsupported gauge '" + out.gauge + "'");
        }
        if (o.contains("grid")) {
            const auto& g = o["grid"];
            if (!g.is_object()) throw parse_error("'grid' must be an object");
            require_keys(g, {"L", "N"}, "options.grid");
            if (g.contains("L")) out.grid_half_width = g["L"].get<double>();
            if (g.contains("N")) out.grid_points = g["N"].get<int>();
            if (out.grid_half_width <= 0 || out.grid_points < 8)
                throw parse_error("grid needs L > 0 and N >= 8");
        }
        if (o.contains("checks")) {
            if (!o["checks"].is_array()) throw parse_error("'checks' must be an array");
            for (const auto& c : o["checks"]) {
                std::string name = c.get<std::string>();
                if (!known_checks.count(name)) throw parse_error("unknown check '" + name + "'");
                out.checks.push_back(name);
            }
        }
    }
    return out;
}

SchemeFile parse_scheme_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open scheme file: " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_scheme_json(buf.str());
}

}  // namespace reqho::cli
