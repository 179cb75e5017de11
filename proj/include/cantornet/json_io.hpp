#pragma once

#include "cantornet/encoder.hpp"
#include "cantornet/homeomorphism.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cantornet {

inline constexpr const char* kSchemaTag = "cantornet/1";

using json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- phase documents ----

inline Phase parse_phase_document(const json& doc) {
    if (!doc.is_object()) throw DocumentError("phase document must be a JSON object");
    if (doc.value("schema", "") != kSchemaTag)
        throw DocumentError("missing or unsupported schema tag (want \"cantornet/1\")");
    const std::string kind = doc.value("kind", "");

    auto read_bonds = [](const json& arr) {
        std::vector<Bond> bonds;
        for (const auto& b : arr) {
            if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string())
                throw DocumentError("bond must be a [\"u\",\"v\"] pair");
            bonds.push_back(Bond{b[0].get<std::string>(), b[1].get<std::string>()});
        }
        return bonds;
    };
    auto read_atoms = [](const json& arr) {
        std::vector<AtomId> atoms;
        for (const auto& a : arr) {
            if (!a.is_string()) throw DocumentError("atom id must be a string");
            atoms.push_back(a.get<std::string>());
        }
        return atoms;
    };

    if (kind == "phase1") {
        PhaseI p;
        if (!doc.contains("clusters") || !doc["clusters"].is_array())
            throw DocumentError("phase1 document requires a clusters array");
        for (const auto& c : doc["clusters"]) {
            ClusterGraph g;
            g.id = c.value("id", "");
            if (g.id.empty()) throw DocumentError("cluster requires a non-empty id");
            g.atoms = read_atoms(c.at("atoms"));
            g.bonds = read_bonds(c.at("bonds"));
            p.clusters.push_back(std::move(g));
        }
        validate(p);
        return p;
    }
    if (kind == "phase2") {
        PhaseII p;
        p.atoms = read_atoms(doc.at("atoms"));
        p.bonds = read_bonds(doc.at("bonds"));
        validate(p);
        return p;
    }
    throw DocumentError("kind must be \"phase1\" or \"phase2\"");
}

inline json to_json(const Phase& phase) {
    json doc;
    doc["schema"] = kSchemaTag;
    if (const auto* p = std::get_if<PhaseI>(&phase)) {
        doc["kind"] = "phase1";
        doc["clusters"] = json::array();
        for (const auto& c : p->clusters) {
            json jc;
            jc["id"] = c.id;
            jc["atoms"] = c.atoms;
            jc["bonds"] = json::array();
            for (const auto& b : c.bonds) jc["bonds"].push_back({b.u, b.v});
            doc["clusters"].push_back(jc);
        }
    } else {
        const auto& q = std::get<PhaseII>(phase);
        doc["kind"] = "phase2";
        doc["atoms"] = q.atoms;
        doc["bonds"] = json::array();
        for (const auto& b : q.bonds) doc["bonds"].push_back({b.u, b.v});
    }
    return doc;
}

// ---- library values ----

inline json to_json(const CoordinateId& c) {
    return {{"family", family_name(c.family)}, {"scope", c.scope}, {"pos", c.pos}};
}

inline json to_json(const BitStream& s) {
    return {{"prefix", s.prefix}, {"cycle", s.cycle}};
}

inline json to_json(const PrefixCode& c) {
    return {{"bits", c.bits}, {"family", family_name(c.family)}, {"scope", c.scope}};
}

inline json to_json(const CylinderPart& p) {
    json fixed = json::array();
    for (const auto& [coord, bit] : p.fixed)
        fixed.push_back({{"coordinate", to_json(coord)}, {"bit", bit}});
    json out{{"fixed", fixed}};
    if (p.tail)
        out["tail"] = {{"family", family_name(p.tail->family.family)},
                       {"scope", p.tail->family.scope},
                       {"stream", to_json(p.tail->stream)}};
    return out;
}

inline json to_json(const Fiber& f) {
    json parts = json::array();
    for (const auto& p : f.parts) parts.push_back(to_json(p));
    return {{"parts", parts}};
}

inline json to_json(const Encoding& enc) {
    json out;
    out["phase"] = enc.kind() == PhaseKind::I ? "I" : "II";
    auto table = [](const std::vector<PrefixCode>& codes) {
        json t = json::array();
        for (const auto& c : codes) t.push_back(to_json(c));
        return t;
    };
    if (enc.kind() == PhaseKind::I) {
        const auto& p = std::get<PhaseI>(enc.phase());
        out["J"] = table(enc.cluster_codes());
        out["K"] = json::array();
        for (std::size_t i = 0; i < p.clusters.size(); ++i)
            out["K"].push_back({{"cluster", p.clusters[i].id}, {"codes", table(enc.edge_codes(i))}});
    } else {
        out["L"] = table(enc.edge_codes());
    }
    return out;
}

inline json to_json(const InvariantReport& rep) {
    json reduced = json::array();
    for (const auto& c : rep.reduced.comps) {
        json jc;
        jc["pure_cycle"] = c.pure_cycle;
        jc["branch_degrees"] = c.degree_sequence();
        jc["loops"] = c.loop_count();
        jc["parallel_multiplicities"] = c.parallel_multiplicities();
        reduced.push_back(jc);
    }
    return {{"components", rep.component_count},
            {"nodes", rep.nodes},
            {"edges", rep.edges},
            {"degree_sequence", rep.degree_sequence},
            {"cycle_rank", rep.cycle_rank},
            {"reduced", reduced}};
}

inline json to_json(const DiffReport& rep) {
    json k = json::array(), l = json::array();
    for (const auto& c : rep.k_codes) k.push_back(c.bits);
    for (const auto& c : rep.l_codes) l.push_back(c.bits);
    return {{"atom", rep.atom},
            {"J", rep.j_code.bits},
            {"p", rep.degree_i},
            {"q", rep.degree_ii},
            {"K", k},
            {"L", l},
            {"note", "the J factor constrains lambda coordinates in phase I only; "
                     "the phase II fiber carries no lambda constraint"}};
}

}  // namespace cantornet
