#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psep/crown.hpp"
#include "psep/graph.hpp"

namespace psep {

// A graph together with one string label per vertex. Files are line oriented:
// a "psep <n> <m>" header, then "v <label>" vertex lines and "e <a> <b>" edge
// lines; "#" starts a comment. Labels get dense ids in order of first
// appearance.
struct InstanceFile {
    std::vector<std::string> labels;
    Graph graph;

    int label_id(const std::string& label) const;  // -1 when unknown
};

// Instance with the default labels "0".."n-1".
InstanceFile make_instance(const Graph& g);

// Throws std::runtime_error with a line number on malformed input.
InstanceFile read_instance(std::istream& in);
InstanceFile read_instance_file(const std::string& path);

// Canonical form: header, "v" lines for isolated vertices only, then one
// "e" line per undirected edge with the smaller endpoint id first.
void write_instance(std::ostream& out, const InstanceFile& inst);

// Witness files start with "psepw separator" or "psepw crown". A separator
// witness lists "s <label>" lines. A crown witness has a "p <value>" line,
// "i"/"c"/"j" membership lines, and per star a "star <center>" line followed
// by "leaf <label>..." lines, one per leaf component.
struct WitnessFile {
    enum Kind { separator, crown };
    Kind kind = separator;
    VertexSet separator_vertices;
    CrownDecomposition decomposition;
};

WitnessFile read_witness(std::istream& in, const InstanceFile& inst);
void write_separator_witness(std::ostream& out, const InstanceFile& inst, const VertexSet& s);
void write_crown_witness(std::ostream& out, const InstanceFile& inst,
                         const CrownDecomposition& cd);

// One run's outcome in reportable form. Optional fields are omitted from the
// output entirely when absent.
struct Report {
    std::string command;
    std::string mode;
    int p = 0;
    std::optional<int> k;
    std::string verdict;
    int original_vertices = 0;
    long long original_edges = 0;
    std::optional<int> kernel_vertices;
    std::optional<long long> kernel_edges;
    std::optional<long long> size_bound;
    std::optional<int> budget_used;
    std::vector<std::string> forced_labels;
    std::optional<std::vector<std::string>> separator_labels;
    std::optional<long long> extension_steps;
    std::optional<long long> crown_rounds;
    std::optional<long long> eliminations;
    std::optional<long long> repacked_bases;
    std::optional<int> components_processed;
    std::optional<int> stripped_components;
    std::optional<int> reduction_rounds;
    std::vector<std::string> violations;
    std::optional<double> wall_ms;
};

void write_report_text(std::ostream& out, const Report& r);
void write_report_json(std::ostream& out, const Report& r);

}  // namespace psep
