#include "psep/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace psep {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) toks.push_back(tok);
    return toks;
}

[[noreturn]] void fail_at(long long line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

long long parse_count(const std::string& tok, long long line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        fail_at(line_no, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

void strip_comment(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
}

}  // namespace

int InstanceFile::label_id(const std::string& label) const {
    for (int v = 0; v < (int)labels.size(); ++v)
        if (labels[v] == label) return v;
    return -1;
}

InstanceFile make_instance(const Graph& g) {
    InstanceFile inst;
    inst.graph = g;
    inst.labels.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) inst.labels.push_back(std::to_string(v));
    return inst;
}

InstanceFile read_instance(std::istream& in) {
    std::map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto id_of = [&](const std::string& label) {
        auto it = ids.find(label);
        if (it != ids.end()) return it->second;
        int id = (int)labels.size();
        ids.emplace(label, id);
        labels.push_back(label);
        return id;
    };

    bool have_header = false;
    long long n_declared = 0;
    long long m_declared = 0;
    long long edge_lines = 0;
    long long line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        strip_comment(line);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "psep" || toks.size() != 3)
                fail_at(line_no, "expected header 'psep <n> <m>'");
            n_declared = parse_count(toks[1], line_no);
            m_declared = parse_count(toks[2], line_no);
            have_header = true;
            continue;
        }
        if (toks[0] == "v") {
            if (toks.size() != 2) fail_at(line_no, "expected 'v <label>'");
            id_of(toks[1]);
        } else if (toks[0] == "e") {
            if (toks.size() != 3) fail_at(line_no, "expected 'e <a> <b>'");
            int a = id_of(toks[1]);
            int b = id_of(toks[2]);
            if (a == b) fail_at(line_no, "self loop on '" + toks[1] + "'");
            edges.emplace_back(a, b);
            ++edge_lines;
        } else {
            fail_at(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header) throw std::runtime_error("missing 'psep <n> <m>' header");
    if ((long long)labels.size() != n_declared)
        throw std::runtime_error("header declares " + std::to_string(n_declared) +
                                 " vertices but the file uses " +
                                 std::to_string(labels.size()) + " distinct labels");
    if (edge_lines != m_declared)
        throw std::runtime_error("header declares " + std::to_string(m_declared) +
                                 " edges but the file has " + std::to_string(edge_lines) +
                                 " edge lines");

    InstanceFile inst;
    inst.labels = std::move(labels);
    inst.graph = Graph((int)n_declared, edges);
    return inst;
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_instance(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_instance(std::ostream& out, const InstanceFile& inst) {
    const Graph& g = inst.graph;
    out << "psep " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.neighbors(v).empty()) out << "v " << inst.labels[v] << "\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int w : g.neighbors(v))
            if (v < w) out << "e " << inst.labels[v] << " " << inst.labels[w] << "\n";
}

namespace {

int known_id(const std::map<std::string, int>& ids, const std::string& label,
             long long line_no) {
    auto it = ids.find(label);
    if (it == ids.end()) fail_at(line_no, "unknown vertex label '" + label + "'");
    return it->second;
}

}  // namespace

WitnessFile read_witness(std::istream& in, const InstanceFile& inst) {
    std::map<std::string, int> ids;
    for (int v = 0; v < (int)inst.labels.size(); ++v) ids.emplace(inst.labels[v], v);

    WitnessFile w;
    bool have_header = false;
    bool have_p = false;
    long long line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        strip_comment(line);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "psepw" || toks.size() != 2 ||
                (toks[1] != "separator" && toks[1] != "crown"))
                fail_at(line_no, "expected header 'psepw separator' or 'psepw crown'");
            w.kind = toks[1] == "separator" ? WitnessFile::separator : WitnessFile::crown;
            have_header = true;
            continue;
        }
        if (w.kind == WitnessFile::separator) {
            if (toks[0] != "s" || toks.size() != 2) fail_at(line_no, "expected 's <label>'");
            w.separator_vertices.insert(known_id(ids, toks[1], line_no));
            continue;
        }
        if (toks[0] == "p") {
            if (toks.size() != 2) fail_at(line_no, "expected 'p <value>'");
            w.decomposition.p = (int)parse_count(toks[1], line_no);
            have_p = true;
        } else if (toks[0] == "i" || toks[0] == "c" || toks[0] == "j") {
            if (toks.size() != 2) fail_at(line_no, "expected '" + toks[0] + " <label>'");
            int v = known_id(ids, toks[1], line_no);
            if (toks[0] == "i")
                w.decomposition.i_set.insert(v);
            else if (toks[0] == "c")
                w.decomposition.c_set.insert(v);
            else
                w.decomposition.j_set.insert(v);
        } else if (toks[0] == "star") {
            if (toks.size() != 2) fail_at(line_no, "expected 'star <center-label>'");
            CrownStar star;
            star.center = known_id(ids, toks[1], line_no);
            w.decomposition.witness.push_back(star);
        } else if (toks[0] == "leaf") {
            if (toks.size() < 2) fail_at(line_no, "expected 'leaf <label>...'");
            if (w.decomposition.witness.empty())
                fail_at(line_no, "leaf line before any star line");
            VertexSet comp;
            for (size_t i = 1; i < toks.size(); ++i)
                comp.insert(known_id(ids, toks[i], line_no));
            auto& star = w.decomposition.witness.back();
            star.total_weight += comp.size();
            star.leaf_components.push_back(std::move(comp));
        } else {
            fail_at(line_no, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_header) throw std::runtime_error("missing 'psepw' header");
    if (w.kind == WitnessFile::crown && !have_p)
        throw std::runtime_error("crown witness is missing its 'p' line");
    return w;
}

void write_separator_witness(std::ostream& out, const InstanceFile& inst, const VertexSet& s) {
    out << "psepw separator\n";
    for (int v : s) out << "s " << inst.labels[v] << "\n";
}

void write_crown_witness(std::ostream& out, const InstanceFile& inst,
                         const CrownDecomposition& cd) {
    out << "psepw crown\n";
    out << "p " << cd.p << "\n";
    for (int v : cd.i_set) out << "i " << inst.labels[v] << "\n";
    for (int v : cd.c_set) out << "c " << inst.labels[v] << "\n";
    for (int v : cd.j_set) out << "j " << inst.labels[v] << "\n";
    for (const auto& star : cd.witness) {
        out << "star " << inst.labels[star.center] << "\n";
        for (const auto& comp : star.leaf_components) {
            out << "leaf";
            for (int v : comp) out << " " << inst.labels[v];
            out << "\n";
        }
    }
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s += " ";
        s += labels[i];
    }
    return s;
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

}  // namespace

void write_report_text(std::ostream& out, const Report& r) {
    out << "command: " << r.command << "\n";
    if (!r.mode.empty()) out << "mode: " << r.mode << "\n";
    out << "p: " << r.p << "\n";
    if (r.k) out << "k: " << *r.k << "\n";
    out << "verdict: " << r.verdict << "\n";
    out << "original_vertices: " << r.original_vertices << "\n";
    out << "original_edges: " << r.original_edges << "\n";
    if (r.kernel_vertices) out << "kernel_vertices: " << *r.kernel_vertices << "\n";
    if (r.kernel_edges) out << "kernel_edges: " << *r.kernel_edges << "\n";
    if (r.size_bound) out << "size_bound: " << *r.size_bound << "\n";
    if (r.budget_used) out << "budget_used: " << *r.budget_used << "\n";
    out << "forced_count: " << r.forced_labels.size() << "\n";
    if (!r.forced_labels.empty()) out << "forced: " << join_labels(r.forced_labels) << "\n";
    if (r.separator_labels) {
        out << "separator_size: " << r.separator_labels->size() << "\n";
        if (!r.separator_labels->empty())
            out << "separator: " << join_labels(*r.separator_labels) << "\n";
    }
    if (r.extension_steps) out << "extension_steps: " << *r.extension_steps << "\n";
    if (r.crown_rounds) out << "crown_rounds: " << *r.crown_rounds << "\n";
    if (r.eliminations) out << "eliminations: " << *r.eliminations << "\n";
    if (r.repacked_bases) out << "repacked_bases: " << *r.repacked_bases << "\n";
    if (r.components_processed)
        out << "components_processed: " << *r.components_processed << "\n";
    if (r.stripped_components)
        out << "stripped_components: " << *r.stripped_components << "\n";
    if (r.reduction_rounds) out << "reduction_rounds: " << *r.reduction_rounds << "\n";
    if (!r.violations.empty()) {
        out << "violation_count: " << r.violations.size() << "\n";
        for (const auto& v : r.violations) out << "violation: " << v << "\n";
    }
    if (r.wall_ms) out << "wall_ms: " << format_ms(*r.wall_ms) << "\n";
}

void write_report_json(std::ostream& out, const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (!r.mode.empty()) j["mode"] = r.mode;
    j["p"] = r.p;
    if (r.k) j["k"] = *r.k;
    j["verdict"] = r.verdict;
    j["original_vertices"] = r.original_vertices;
    j["original_edges"] = r.original_edges;
    if (r.kernel_vertices) j["kernel_vertices"] = *r.kernel_vertices;
    if (r.kernel_edges) j["kernel_edges"] = *r.kernel_edges;
    if (r.size_bound) j["size_bound"] = *r.size_bound;
    if (r.budget_used) j["budget_used"] = *r.budget_used;
    j["forced"] = r.forced_labels;
    if (r.separator_labels) j["separator"] = *r.separator_labels;
    if (r.extension_steps) j["extension_steps"] = *r.extension_steps;
    if (r.crown_rounds) j["crown_rounds"] = *r.crown_rounds;
    if (r.eliminations) j["eliminations"] = *r.eliminations;
    if (r.repacked_bases) j["repacked_bases"] = *r.repacked_bases;
    if (r.components_processed) j["components_processed"] = *r.components_processed;
    if (r.stripped_components) j["stripped_components"] = *r.stripped_components;
    if (r.reduction_rounds) j["reduction_rounds"] = *r.reduction_rounds;
    if (!r.violations.empty()) j["violations"] = r.violations;
    if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
    out << j.dump(2) << "\n";
}

}  // namespace psep
