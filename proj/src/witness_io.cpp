#include "atomless/witness_io.hpp"

#include <json.hpp>

#include "atomless/text.hpp"

namespace atomless {

using json = nlohmann::ordered_json;

std::string to_json_line(const WitnessTriple& w) {
    json j;
    j["atoms"] = json::array();
    for (const auto& atom : w.atoms) {
        j["atoms"].push_back(atom.to_string());
    }
    j["color"] = w.color;
    j["convention"] = std::string(to_string(w.convention));
    j["oracle"] = w.oracle;
    j["log"] = json::array();
    for (const auto& r : w.log) {
        j["log"].push_back({{"query", r.query.to_string()}, {"answer", {r.part.to_string(), r.rest.to_string()}}});
    }
    return j.dump();
}

WitnessTriple witness_from_json(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("witness line is not JSON: ") + err.what());
    }
    try {
        WitnessTriple w;
        const auto& atoms = j.at("atoms");
        if (!atoms.is_array() || atoms.size() != 3) {
            throw std::invalid_argument("witness needs exactly three atoms");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            w.atoms[i] = parse_good_set(atoms[i].get<std::string>());
        }
        w.color = j.at("color").get<std::size_t>();
        const auto conv = parse_convention(j.at("convention").get<std::string>());
        if (!conv) {
            throw std::invalid_argument("unknown convention " + j.at("convention").dump());
        }
        w.convention = *conv;
        w.oracle = j.at("oracle").get<std::string>();
        if (j.contains("log")) {
            for (const auto& r : j.at("log")) {
                const auto& answer = r.at("answer");
                w.log.push_back({parse_good_set(r.at("query").get<std::string>()),
                                 parse_good_set(answer.at(0).get<std::string>()),
                                 parse_good_set(answer.at(1).get<std::string>())});
            }
        }
        return w;
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("malformed witness line: ") + err.what());
    }
}

}  // namespace atomless
