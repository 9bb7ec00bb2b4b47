#pragma once

// Necessity witnesses: graphs that sit just outside a class and beat its
// bound, showing each excluded pattern is doing real work. The m-fold
// join of 5-cycles has clique number 2m and chromatic number 3m; the
// Grotzsch graph (Mycielskian of C5) is triangle-free with chromatic
// number four. witness_report computes every claimed invariant with the
// exact solvers and compares against the expected values.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/detect.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "chibound/patterns.hpp"
#include "chibound/solve.hpp"
#include "chibound/verify.hpp"

namespace chibound {

inline Graph c5_join(int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("c5_join: m must be in [1,3]");
    Graph g = cycle(5);
    for (int i = 1; i < m; ++i) g = join(g, cycle(5));
    return g;
}

inline Graph grotzsch() { return mycielski(cycle(5)); }

struct WitnessReport {
    std::string name;
    std::string graph6;
    int omega = 0;
    int chi = 0;
    std::vector<std::pair<const char*, bool>> presence;  // pattern name -> contained
    bool claims_ok = false;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json pres;
        for (auto [pname, has] : presence) pres[pname] = has;
        return {{"name", name},   {"graph6", graph6},   {"omega", omega},
                {"chi", chi},     {"patterns", pres},   {"claims_ok", claims_ok}};
    }
};

namespace detail {

struct WitnessExpectation {
    int omega;
    int chi;
    std::vector<PatternId> absent;
    std::vector<PatternId> present;
    BoundKind exceeds;  // the witness must beat this bound strictly
};

inline const std::map<std::string, WitnessExpectation>& witness_expectations() {
    using P = PatternId;
    static const std::map<std::string, WitnessExpectation> table = {
        {"c5_join_2",
         {4, 6, {P::P3unionK1, P::K2union2K1}, {P::Hvn, P::K5minusE}, BoundKind::OmegaPlus1}},
        {"c5_join_3",
         {6, 9, {P::P3unionK1, P::K2union2K1}, {P::Hvn, P::K5minusE}, BoundKind::OmegaPlus1}},
        {"grotzsch",
         {2, 4, {P::P4plusK1, P::Hvn, P::K5minusE}, {P::Chair}, BoundKind::ThreeHalvesOmega}},
    };
    return table;
}

}  // namespace detail

inline Graph witness_graph(const std::string& name) {
    if (name == "c5_join_2") return c5_join(2);
    if (name == "c5_join_3") return c5_join(3);
    if (name == "grotzsch") return grotzsch();
    throw std::invalid_argument("unknown witness: " + name);
}

inline std::vector<std::string> witness_names() { return {"c5_join_2", "c5_join_3", "grotzsch"}; }

inline WitnessReport witness_report(const std::string& name) {
    const auto it = detail::witness_expectations().find(name);
    if (it == detail::witness_expectations().end())
        throw std::invalid_argument("unknown witness: " + name);
    const detail::WitnessExpectation& expect = it->second;

    Graph g = witness_graph(name);
    WitnessReport r;
    r.name = name;
    r.graph6 = to_graph6(g);
    r.omega = clique_number(g);
    r.chi = chromatic_number(g);
    for (const Pattern& p : pattern_catalog())
        r.presence.push_back({p.name, contains_induced(g, p.graph)});

    auto contained = [&](PatternId id) {
        for (auto [pname, has] : r.presence)
            if (pname == pattern(id).name) return has;
        return false;
    };
    r.claims_ok = r.omega == expect.omega && r.chi == expect.chi;
    for (PatternId id : expect.absent) r.claims_ok = r.claims_ok && !contained(id);
    for (PatternId id : expect.present) r.claims_ok = r.claims_ok && contained(id);
    r.claims_ok = r.claims_ok && !bound_holds(expect.exceeds, r.omega, r.chi);
    return r;
}

}  // namespace chibound
