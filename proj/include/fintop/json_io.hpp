#pragma once

// JSON shapes used by the CLI:
//   space: {points:[labels], arrows:[[from,to],...]}   (transitive reduction)
//   map:   {dom, cod, assignment:[indices], literal}
//   class: {word, universe, exactness, members:[map]}
// plus the verification report and the on-disk lifting cache.

#include <fstream>
#include <string>

#include <json.hpp>

#include "catalogue.hpp"

namespace fintop {

inline nlohmann::json space_to_json(const FiniteSpace& s) {
    auto names = detail::safe_labels(s);
    nlohmann::json arrows = nlohmann::json::array();
    detail::Reduction r = detail::reduce(s);
    for (const auto& scc : r.sccs)
        if (scc.size() > 1) {
            // a cycle through the class reconstructs the mutual relations
            for (size_t k = 0; k < scc.size(); ++k)
                arrows.push_back({names[scc[k]], names[scc[(k + 1) % scc.size()]]});
        }
    for (auto [a, b] : r.edges) arrows.push_back({names[r.sccs[a][0]], names[r.sccs[b][0]]});
    return {{"points", names}, {"arrows", arrows}};
}

inline FiniteSpace space_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0), a.at(1));
    return make_space(labels, arrows);
}

inline nlohmann::json map_to_json(const ContinuousMap& f) {
    return {{"dom", space_to_json(f.dom)},
            {"cod", space_to_json(f.cod)},
            {"assignment", f.assignment},
            {"literal", print_map(f)}};
}

inline ContinuousMap map_from_json(const nlohmann::json& j) {
    return make_map(space_from_json(j.at("dom")), space_from_json(j.at("cod")),
                    j.at("assignment").get<std::vector<int>>());
}

inline nlohmann::json class_to_json(const MapClass& c, const std::string& word) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members) members.push_back(map_to_json(m));
    return {{"word", word},
            {"universe", c.universe_bound},
            {"exactness", to_string(c.exactness)},
            {"members", members}};
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : rep.entries)
        out.push_back({{"entry", e.name},
                       {"exactness", e.exactness},
                       {"mode", e.mode},
                       {"universe", e.universe_bound},
                       {"checked", e.checked},
                       {"agreements", e.agreements},
                       {"disagreements", e.disagreements}});
    return out;
}

// -- disk cache for memoized lifting verdicts --

inline constexpr const char* kLiftCacheFormat = "fintop-lift-cache-v1";

inline void save_lift_cache(const std::string& path) {
    auto& cache = detail::lift_cache();
    nlohmann::json entries = nlohmann::json::object();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        for (const auto& [k, v] : cache.entries) entries[k] = v;
    }
    std::ofstream out(path);
    if (!out) return;
    out << nlohmann::json{{"format", kLiftCacheFormat}, {"entries", entries}};
}

inline void load_lift_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (...) {
        return;  // corrupt or foreign file; ignore
    }
    if (!j.is_object() || j.value("format", "") != kLiftCacheFormat) return;
    auto& cache = detail::lift_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    for (const auto& [k, v] : j.at("entries").items())
        if (v.is_boolean()) cache.entries.emplace(k, v.get<bool>());
}

}  // namespace fintop
