#pragma once

// The class registry and the bound verifier. Each registry entry is a
// pair of forbidden patterns plus the linear bound its class must obey;
// verify_class computes exact clique and chromatic numbers for every
// in-class graph of a stream and records where the bound holds with
// equality or fails. Violations are data, never exceptions: the point of
// the tool includes hunting for counterexamples past proven ranges.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chibound/canonical.hpp"
#include "chibound/detect.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "chibound/parallel.hpp"
#include "chibound/patterns.hpp"
#include "chibound/solve.hpp"

namespace chibound {

enum class BoundKind { TwoOmegaMinus1, ThreeHalvesOmega, OmegaPlus1 };

inline int bound_value(BoundKind b, int omega) {
    switch (b) {
        case BoundKind::TwoOmegaMinus1: return 2 * omega - 1;
        case BoundKind::ThreeHalvesOmega: return 3 * omega / 2;
        case BoundKind::OmegaPlus1: return omega + 1;
    }
    return 0;
}

// The three-halves bound is evaluated in exact integer arithmetic
// (2*chi <= 3*omega); since chi is integral this equals chi <= floor(3w/2).
inline bool bound_holds(BoundKind b, int omega, int chi) {
    switch (b) {
        case BoundKind::TwoOmegaMinus1: return chi <= 2 * omega - 1;
        case BoundKind::ThreeHalvesOmega: return 2 * chi <= 3 * omega;
        case BoundKind::OmegaPlus1: return chi <= omega + 1;
    }
    return false;
}

inline std::string_view bound_name(BoundKind b) {
    switch (b) {
        case BoundKind::TwoOmegaMinus1: return "2w-1";
        case BoundKind::ThreeHalvesOmega: return "3w/2";
        case BoundKind::OmegaPlus1: return "w+1";
    }
    return "";
}

struct GraphClass {
    std::string id;
    std::vector<PatternId> forbidden;
    BoundKind bound;
    std::string source;
};

inline const std::vector<GraphClass>& class_registry() {
    using P = PatternId;
    static const std::vector<GraphClass> registry = {
        {"chair_p4k1", {P::Chair, P::P4plusK1}, BoundKind::TwoOmegaMinus1, "core"},
        {"k13_p4k1", {P::K1_3, P::P4plusK1}, BoundKind::TwoOmegaMinus1, "core"},
        {"p4k1_p3k1", {P::P4plusK1, P::P3unionK1}, BoundKind::ThreeHalvesOmega, "core"},
        {"p4k1_k2u2k1", {P::P4plusK1, P::K2union2K1}, BoundKind::ThreeHalvesOmega, "core"},
        {"chair_hvn", {P::Chair, P::Hvn}, BoundKind::ThreeHalvesOmega, "core"},
        {"k13_hvn", {P::K1_3, P::Hvn}, BoundKind::ThreeHalvesOmega, "core"},
        {"hvn_p3k1", {P::Hvn, P::P3unionK1}, BoundKind::OmegaPlus1, "core"},
        {"hvn_k2u2k1", {P::Hvn, P::K2union2K1}, BoundKind::OmegaPlus1, "core"},
        {"chair_k4", {P::Chair, P::K4}, BoundKind::OmegaPlus1, "core"},
        {"k5e_p3k1", {P::K5minusE, P::P3unionK1}, BoundKind::OmegaPlus1, "core"},
        {"k5e_k2u2k1", {P::K5minusE, P::K2union2K1}, BoundKind::OmegaPlus1, "core"},
        {"k13_k5e", {P::K1_3, P::K5minusE}, BoundKind::OmegaPlus1, "kierstead-schmerl"},
    };
    return registry;
}

inline const GraphClass* find_class(std::string_view id) {
    for (const GraphClass& c : class_registry())
        if (c.id == id) return &c;
    return nullptr;
}

inline bool membership(const Graph& g, const GraphClass& cls) {
    return is_free(g, std::span<const PatternId>(cls.forbidden));
}

struct VerificationRecord {
    std::string graph6;  // as received from the stream
    int n = 0;
    int omega = 0;
    int chi = 0;
    int bound_value = 0;
    bool ok = false;
    bool tight = false;
    std::string sort_key;  // canonical form

    nlohmann::ordered_json to_json() const {
        return {{"graph6", graph6}, {"n", n},   {"omega", omega},
                {"chi", chi},       {"bound_value", bound_value},
                {"ok", ok},         {"tight", tight}};
    }
};

inline constexpr std::string_view kVerifyTsvHeader = "graph6\tn\tomega\tchi\tbound_value\tok\ttight";

inline std::string to_tsv(const VerificationRecord& r) {
    std::string out = r.graph6;
    out += '\t';
    out += std::to_string(r.n);
    out += '\t';
    out += std::to_string(r.omega);
    out += '\t';
    out += std::to_string(r.chi);
    out += '\t';
    out += std::to_string(r.bound_value);
    out += '\t';
    out += r.ok ? "true" : "false";
    out += '\t';
    out += r.tight ? "true" : "false";
    return out;
}

struct ClassReport {
    std::string class_id;
    std::uint64_t checked = 0;  // in-class graphs
    std::vector<VerificationRecord> records;  // one per in-class graph, sorted

    std::uint64_t violation_count() const {
        std::uint64_t v = 0;
        for (const auto& r : records) v += !r.ok;
        return v;
    }
    std::uint64_t tight_count() const {
        std::uint64_t t = 0;
        for (const auto& r : records) t += r.tight;
        return t;
    }
    std::vector<VerificationRecord> violations() const {
        std::vector<VerificationRecord> out;
        for (const auto& r : records)
            if (!r.ok) out.push_back(r);
        return out;
    }
    std::vector<VerificationRecord> tight_examples() const {
        std::vector<VerificationRecord> out;
        for (const auto& r : records)
            if (r.tight) out.push_back(r);
        return out;
    }
};

inline VerificationRecord make_record(const Graph& g, const GraphClass& cls) {
    VerificationRecord r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.omega = clique_number(g);
    r.chi = chromatic_number(g);
    r.bound_value = bound_value(cls.bound, r.omega);
    r.ok = bound_holds(cls.bound, r.omega, r.chi);
    r.tight = r.chi == r.bound_value;
    r.sort_key = canonical_form(g);
    return r;
}

// Checks every in-class graph of the stream against the class bound.
// The stream is consumed in bounded chunks, so arbitrarily large inputs
// never sit in memory whole; records come back sorted by (order,
// canonical form) no matter how many workers ran, so reports are
// byte-stable.
inline ClassReport verify_class(const GraphClass& cls, GraphStream stream, int threads = 1) {
    ClassReport report;
    report.class_id = cls.id;
    constexpr std::size_t kChunk = std::size_t{1} << 14;
    std::vector<Graph> chunk;
    chunk.reserve(kChunk);
    for (bool more = true; more;) {
        chunk.clear();
        while (chunk.size() < kChunk) {
            auto g = stream.next();
            if (!g) {
                more = false;
                break;
            }
            chunk.push_back(std::move(*g));
        }
        auto results = parallel_map<std::optional<VerificationRecord>>(
            chunk.size(), threads, [&](std::size_t i) -> std::optional<VerificationRecord> {
                if (!membership(chunk[i], cls)) return std::nullopt;
                return make_record(chunk[i], cls);
            });
        for (auto& r : results)
            if (r) report.records.push_back(std::move(*r));
    }
    report.checked = report.records.size();
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         if (a.n != b.n) return a.n < b.n;
                         return a.sort_key < b.sort_key;
                     });
    return report;
}

// All in-class isomorphism classes on at most n_max vertices whose
// chromatic number meets the bound with equality.
inline std::vector<VerificationRecord> find_tight(const GraphClass& cls, int n_max,
                                                  int threads = 1) {
    ClassReport report = verify_class(cls, GraphStream::generated_upto(n_max, threads), threads);
    return report.tight_examples();
}

}  // namespace chibound
