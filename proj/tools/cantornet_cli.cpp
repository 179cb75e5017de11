// Command-line surface over the cantornet library: validation, encoding,
// fibers, phase diffs, homeomorphism comparison and partition checks.

#include "cantornet/cantornet.hpp"
#include "cantornet/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using cantornet::json;

struct Options {
    bool as_json = false;
    std::string output;
};

std::string bits_text(const cantornet::Bits& bits) {
    std::string s = "[";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(int(bits[i]));
    }
    return s + "]";
}

std::string stream_text(const cantornet::BitStream& s) {
    return "{prefix " + bits_text(s.prefix) + ", cycle " + bits_text(s.cycle) + "}";
}

cantornet::Phase load_phase(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cantornet::DocumentError("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw cantornet::DocumentError("malformed JSON in " + path + ": " + e.what());
    }
    return cantornet::parse_phase_document(doc);
}

cantornet::Encoding encode_any(const cantornet::Phase& phase) {
    if (const auto* p = std::get_if<cantornet::PhaseI>(&phase)) return cantornet::Encoding::of(*p);
    return cantornet::Encoding::of(std::get<cantornet::PhaseII>(phase));
}

cantornet::EdgePoint parse_edge_point(const std::string& spec, bool phase1) {
    std::vector<std::string> fields;
    std::stringstream ss(spec);
    std::string field;
    while (std::getline(ss, field, ':')) fields.push_back(field);
    const std::size_t want = phase1 ? 3 : 2;
    if (fields.size() != want)
        throw std::invalid_argument(phase1 ? "edge point spec must be CLUSTER:EDGE:T"
                                           : "edge point spec must be EDGE:T for phase2");
    cantornet::EdgePoint ep;
    std::size_t at = 0;
    if (phase1) ep.cluster = fields[at++];
    ep.edge = std::stoi(fields[at++]);
    ep.t = cantornet::parse_rational(fields[at]);
    return ep;
}

void emit(const Options& opt, const std::string& command, const json& result,
          const std::string& text) {
    std::string out;
    if (opt.as_json) {
        json report{{"command", command}, {"result", result}, {"diagnostics", json::array()}};
        out = report.dump(2) + "\n";
    } else {
        out = text + "\n";
    }
    if (opt.output.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(opt.output, std::ios::binary);
        if (!f) throw cantornet::DocumentError("cannot write file: " + opt.output);
        f << out;
    }
}

// ---- subcommand bodies ----

void run_validate(const Options& opt, const std::string& file) {
    const auto phase = load_phase(file);
    json result;
    std::string text;
    if (const auto* p = std::get_if<cantornet::PhaseI>(&phase)) {
        const int m = int(cantornet::all_atoms(*p).size());
        const int e = int(cantornet::all_bonds(*p).size());
        result = {{"kind", "phase1"}, {"s", p->clusters.size()}, {"M", m}, {"edges", e}};
        text = "phase1: s=" + std::to_string(p->clusters.size()) + ", M=" + std::to_string(m) +
               ", edges=" + std::to_string(e);
    } else {
        const auto& q = std::get<cantornet::PhaseII>(phase);
        result = {{"kind", "phase2"}, {"M", q.atoms.size()}, {"edges", q.bonds.size()}};
        text = "phase2: M=" + std::to_string(q.atoms.size()) +
               ", edges=" + std::to_string(q.bonds.size());
    }
    emit(opt, "validate", result, text);
}

void run_invariants(const Options& opt, const std::string& file) {
    const auto rep = cantornet::invariants(load_phase(file));
    std::string text = "components=" + std::to_string(rep.component_count) +
                       " nodes=" + std::to_string(rep.nodes) +
                       " edges=" + std::to_string(rep.edges) +
                       " cycle_rank=" + std::to_string(rep.cycle_rank) + " degrees=[";
    for (std::size_t i = 0; i < rep.degree_sequence.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(rep.degree_sequence[i]);
    }
    text += "]";
    emit(opt, "invariants", cantornet::to_json(rep), text);
}

void run_encode(const Options& opt, const std::string& file) {
    const auto enc = encode_any(load_phase(file));
    std::string text;
    if (enc.kind() == cantornet::PhaseKind::I) {
        const auto& p = std::get<cantornet::PhaseI>(enc.phase());
        text = "J:";
        for (const auto& c : enc.cluster_codes()) text += " " + bits_text(c.bits);
        for (std::size_t i = 0; i < p.clusters.size(); ++i) {
            text += "\nK(" + p.clusters[i].id + "):";
            for (const auto& c : enc.edge_codes(i)) text += " " + bits_text(c.bits);
        }
    } else {
        text = "L:";
        for (const auto& c : enc.edge_codes()) text += " " + bits_text(c.bits);
    }
    emit(opt, "encode", cantornet::to_json(enc), text);
}

void run_fiber(const Options& opt, const std::string& file, const std::string& atom,
               const std::string& edge_point) {
    const auto phase = load_phase(file);
    const auto enc = encode_any(phase);
    if (atom.empty() == edge_point.empty())
        throw CLI::ValidationError("fiber", "exactly one of --atom and --edge-point is required");
    cantornet::PointRef point = atom.empty()
        ? cantornet::PointRef(parse_edge_point(edge_point, enc.kind() == cantornet::PhaseKind::I))
        : cantornet::PointRef(cantornet::NodePoint{atom});
    const auto f = cantornet::fiber(enc, point);
    std::string text = "fiber: " + std::to_string(f.parts.size()) + " part(s)";
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        text += "\npart " + std::to_string(i + 1) + ": fixed";
        for (const auto& [coord, bit] : f.parts[i].fixed)
            text += " " + cantornet::to_string(coord) + "=" + std::to_string(int(bit));
        if (f.parts[i].fixed.empty()) text += " (none)";
        const auto& tail = *f.parts[i].tail;
        text += ", tail " + std::string(cantornet::family_name(tail.family.family));
        text += " " + stream_text(tail.stream);
    }
    emit(opt, "fiber", cantornet::to_json(f), text);
}

void run_diff(const Options& opt, const std::string& file_i, const std::string& file_ii,
              const std::string& atom) {
    const auto phase_i = load_phase(file_i);
    const auto phase_ii = load_phase(file_ii);
    if (!std::holds_alternative<cantornet::PhaseI>(phase_i) ||
        !std::holds_alternative<cantornet::PhaseII>(phase_ii))
        throw std::invalid_argument("diff expects a phase1 file then a phase2 file");
    const auto rep = cantornet::diff(cantornet::Encoding::of(std::get<cantornet::PhaseI>(phase_i)),
                                     cantornet::Encoding::of(std::get<cantornet::PhaseII>(phase_ii)),
                                     atom);
    std::string text = "atom " + rep.atom + ": J=" + bits_text(rep.j_code.bits) +
                       " (phase I only), p=" + std::to_string(rep.degree_i) +
                       ", q=" + std::to_string(rep.degree_ii) + "\nK:";
    for (const auto& c : rep.k_codes) text += " " + bits_text(c.bits);
    text += "\nL:";
    for (const auto& c : rep.l_codes) text += " " + bits_text(c.bits);
    text += "\nphase II fiber carries no lambda constraint";
    emit(opt, "diff", cantornet::to_json(rep), text);
}

void run_compare(const Options& opt, const std::string& file_a, const std::string& file_b) {
    const auto res = cantornet::obstruction(load_phase(file_a), load_phase(file_b));
    json result;
    std::string text;
    switch (res.verdict) {
        case cantornet::HomeoVerdict::NotHomeomorphic:
            result = {{"verdict", "NotHomeomorphic"}, {"witness", res.witness}};
            text = "NOT HOMEOMORPHIC: " + res.witness;
            break;
        case cantornet::HomeoVerdict::Homeomorphic: {
            json mapping = json::array();
            for (const auto& [a, b] : res.mapping) mapping.push_back({a, b});
            result = {{"verdict", "Homeomorphic"}, {"mapping", mapping}};
            text = "HOMEOMORPHIC (reduced-graph isomorphism found)";
            break;
        }
        case cantornet::HomeoVerdict::Inconclusive:
            result = {{"verdict", "Inconclusive"}, {"witness", res.witness}};
            text = "INCONCLUSIVE: " + res.witness;
            break;
    }
    emit(opt, "compare", result, text);
}

void run_check(const Options& opt, const std::string& file, int depth) {
    const auto verdict = cantornet::cover_check(encode_any(load_phase(file)), depth);
    json result{{"pass", verdict.pass}};
    std::string text;
    if (verdict.pass) {
        text = "cover check passed at depth " + std::to_string(depth);
    } else {
        result["reason"] = verdict.reason;
        result["witness"] = verdict.witness;
        text = "cover check FAILED: " + verdict.reason + " " + bits_text(verdict.witness);
    }
    emit(opt, "check", result, text);
}

void run_fixtures(const Options& opt, const std::string& dir) {
    for (const auto& [name, doc] :
         {std::pair<std::string, json>{"phaseA.json", cantornet::to_json(cantornet::phase_a())},
          std::pair<std::string, json>{"phaseB.json", cantornet::to_json(cantornet::phase_b())}}) {
        const std::string path = dir + "/" + name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw cantornet::DocumentError("cannot write file: " + path);
        f << doc.dump(2) << "\n";
    }
    emit(opt, "fixtures", {{"written", {"phaseA.json", "phaseB.json"}}},
         "wrote phaseA.json and phaseB.json to " + dir);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cantornet: network phases as decompositions of the Cantor product space"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON report");
    app.add_option("--output", opt.output, "write output to a file instead of stdout");

    std::string file_a, file_b, atom, edge_point, dir;
    int depth = 0;

    auto* validate = app.add_subcommand("validate", "validate a phase document");
    validate->add_option("file", file_a)->required();

    auto* invariants = app.add_subcommand("invariants", "graph invariants of a phase");
    invariants->add_option("file", file_a)->required();

    auto* encode = app.add_subcommand("encode", "code tables of a phase encoding");
    encode->add_option("file", file_a)->required();

    auto* fiber = app.add_subcommand("fiber", "exact fiber of a point");
    fiber->add_option("file", file_a)->required();
    fiber->add_option("--atom", atom, "atom id");
    fiber->add_option("--edge-point", edge_point,
                      "CLUSTER:EDGE:T (phase1) or EDGE:T (phase2), T rational p/q");

    auto* diff = app.add_subcommand("diff", "per-atom fiber diff between the two phases");
    diff->add_option("file_i", file_a)->required();
    diff->add_option("file_ii", file_b)->required();
    diff->add_option("--atom", atom)->required();

    auto* compare = app.add_subcommand("compare", "homeomorphism obstruction between phases");
    compare->add_option("file_a", file_a)->required();
    compare->add_option("file_b", file_b)->required();

    auto* check = app.add_subcommand("check", "verify the encoding blocks partition the space");
    check->add_option("file", file_a)->required();
    check->add_option("--depth", depth, "enumeration depth")->required();

    auto* fixtures = app.add_subcommand("fixtures", "write the PHASE_A/PHASE_B fixtures");
    fixtures->add_option("directory", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) run_validate(opt, file_a);
        else if (*invariants) run_invariants(opt, file_a);
        else if (*encode) run_encode(opt, file_a);
        else if (*fiber) run_fiber(opt, file_a, atom, edge_point);
        else if (*diff) run_diff(opt, file_a, file_b, atom);
        else if (*compare) run_compare(opt, file_a, file_b);
        else if (*check) run_check(opt, file_a, depth);
        else if (*fixtures) run_fixtures(opt, dir);
    } catch (const CLI::ValidationError&) {
        std::cerr << "usage error: fiber needs exactly one of --atom / --edge-point\n";
        return 2;
    } catch (const std::exception& e) {
        if (opt.as_json) {
            json report{{"command", app.get_subcommands().front()->get_name()},
                        {"result", nullptr},
                        {"diagnostics", json::array({e.what()})}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
    return 0;
}
