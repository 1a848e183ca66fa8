#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psep/crown.hpp"
#include "psep/errors.hpp"
#include "psep/generators.hpp"
#include "psep/graph.hpp"
#include "psep/instance_io.hpp"
#include "psep/kernelize.hpp"
#include "psep/oracle.hpp"

namespace {

using namespace psep;

constexpr int oracle_vertex_limit = 60;

InstanceFile load_instance(const std::string& path) {
    if (path == "-") return read_instance(std::cin);
    return read_instance_file(path);
}

std::vector<std::string> to_labels(const InstanceFile& inst, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(inst.labels[v]);
    return out;
}

void emit_report(const Report& r, const std::string& format) {
    if (format == "json")
        write_report_json(std::cout, r);
    else
        write_report_text(std::cout, r);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start;
        return std::chrono::duration<double, std::milli>(d).count();
    }
};

struct CommonOpts {
    std::string input;
    int p = 1;
    std::optional<int> k;
    std::string mode = "linear";
    std::string format = "text";
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mode) {
    cmd->add_option("input", o.input, "instance file, or - for stdin")->required();
    cmd->add_option("--p", o.p, "component size limit")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", o.k, "deletion budget");
    if (with_mode)
        cmd->add_option("--mode", o.mode, "kernelization mode")
            ->check(CLI::IsMember({"linear", "quadratic"}));
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timing", o.timing, "include wall time in the report");
}

KernelOutcome run_mode(const Graph& g, const CommonOpts& o) {
    if (o.mode == "quadratic") return kernelize_quadratic(g, o.p, o.k);
    return kernelize(g, o.p, o.k);
}

void fill_stats(Report& r, const CommonOpts& o, const KernelStats& st) {
    r.crown_rounds = st.crown_rounds;
    r.eliminations = st.eliminations;
    r.stripped_components = st.stripped_components;
    if (o.mode == "quadratic") {
        r.reduction_rounds = st.reduction_rounds;
    } else {
        r.extension_steps = st.extension_steps;
        r.repacked_bases = st.repacked_bases;
        r.components_processed = st.components_processed;
    }
}

int run_kernelize(const CommonOpts& o, const std::string& out_path,
                  const std::string& witness_path) {
    InstanceFile inst = load_instance(o.input);
    Timer timer;
    KernelOutcome outcome = run_mode(inst.graph, o);
    double ms = timer.ms();

    Report r;
    r.command = "kernelize";
    r.mode = o.mode;
    r.p = o.p;
    r.k = o.k;
    r.verdict = outcome.verdict == KernelOutcome::reduced ? "reduced" : "no_instance";
    r.original_vertices = inst.graph.num_vertices();
    r.original_edges = inst.graph.num_edges();
    r.kernel_vertices = outcome.kernel_graph.num_vertices();
    r.kernel_edges = outcome.kernel_graph.num_edges();
    if (outcome.size_bound >= 0) r.size_bound = outcome.size_bound;
    r.budget_used = outcome.budget_used;
    r.forced_labels = to_labels(inst, outcome.forced);
    fill_stats(r, o, outcome.stats);
    if (o.timing) r.wall_ms = ms;

    if (!out_path.empty()) {
        InstanceFile kernel;
        kernel.graph = outcome.kernel_graph;
        for (int v : outcome.kernel_to_original) kernel.labels.push_back(inst.labels[v]);
        auto out = open_out(out_path);
        write_instance(out, kernel);
    }
    if (!witness_path.empty()) {
        auto out = open_out(witness_path);
        write_crown_witness(out, inst, outcome.decomposition);
    }
    emit_report(r, o.format);
    return outcome.verdict == KernelOutcome::reduced ? 0 : 1;
}

int run_solve(const CommonOpts& o) {
    InstanceFile inst = load_instance(o.input);
    Timer timer;
    KernelOutcome outcome = run_mode(inst.graph, o);

    Report r;
    r.command = "solve";
    r.mode = o.mode;
    r.p = o.p;
    r.k = o.k;
    r.original_vertices = inst.graph.num_vertices();
    r.original_edges = inst.graph.num_edges();
    r.kernel_vertices = outcome.kernel_graph.num_vertices();
    r.kernel_edges = outcome.kernel_graph.num_edges();
    if (outcome.size_bound >= 0) r.size_bound = outcome.size_bound;
    r.budget_used = outcome.budget_used;
    r.forced_labels = to_labels(inst, outcome.forced);
    fill_stats(r, o, outcome.stats);

    if (outcome.verdict == KernelOutcome::no_instance) {
        r.verdict = "no_instance";
        if (o.timing) r.wall_ms = timer.ms();
        emit_report(r, o.format);
        return 1;
    }
    if (outcome.kernel_graph.num_vertices() > oracle_vertex_limit) {
        std::cerr << "kernel exceeds oracle capacity ("
                  << outcome.kernel_graph.num_vertices() << " > " << oracle_vertex_limit
                  << " vertices)\n";
        return 3;
    }

    auto best = min_p_separator(outcome.kernel_graph, o.p);
    if (!best) throw internal_error("solve: oracle returned no separator");
    VertexSet solution = outcome.forced;
    for (int v : best->separator) solution.insert(outcome.kernel_to_original[v]);
    if (!is_p_size_separator(inst.graph, solution, o.p))
        throw internal_error("solve: assembled separator fails verification");

    r.separator_labels = to_labels(inst, solution);
    if (o.k && (int)solution.size() > *o.k) {
        r.verdict = "no_instance";
        if (o.timing) r.wall_ms = timer.ms();
        emit_report(r, o.format);
        return 1;
    }
    r.verdict = "ok";
    if (o.timing) r.wall_ms = timer.ms();
    emit_report(r, o.format);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& witness_path) {
    InstanceFile inst = load_instance(o.input);
    std::ifstream win(witness_path);
    if (!win) throw std::runtime_error("cannot open '" + witness_path + "'");
    WitnessFile w;
    try {
        w = read_witness(win, inst);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(witness_path + ": " + e.what());
    }

    Report r;
    r.command = "verify";
    r.p = o.p;
    r.original_vertices = inst.graph.num_vertices();
    r.original_edges = inst.graph.num_edges();

    if (w.kind == WitnessFile::separator) {
        r.mode = "separator";
        r.separator_labels = to_labels(inst, w.separator_vertices);
        std::vector<char> alive(inst.graph.num_vertices(), 1);
        for (int v : w.separator_vertices) alive[v] = 0;
        for (const auto& comp : components_within(inst.graph, alive))
            if ((int)comp.size() > o.p)
                r.violations.push_back("component containing vertex " +
                                       inst.labels[comp.front()] + " has " +
                                       std::to_string(comp.size()) + " vertices, limit " +
                                       std::to_string(o.p));
    } else {
        r.mode = "crown";
        if (w.decomposition.p != o.p) {
            r.violations.push_back("witness was built for p=" +
                                   std::to_string(w.decomposition.p) + ", not p=" +
                                   std::to_string(o.p));
        } else {
            CrownCheck chk = verify_crown(inst.graph, w.decomposition);
            r.violations = chk.violations;
        }
    }
    r.verdict = r.violations.empty() ? "valid" : "invalid";
    emit_report(r, o.format);
    return r.violations.empty() ? 0 : 1;
}

struct GenOpts {
    std::string kind;
    std::vector<std::string> params;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int run_gen(const GenOpts& g) {
    std::map<std::string, long long> values;
    std::optional<std::uint64_t> seed = g.seed;
    for (const auto& param : g.params) {
        auto eq = param.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == param.size())
            throw std::runtime_error("expected key=value, got '" + param + "'");
        std::string key = param.substr(0, eq);
        std::string value = param.substr(eq + 1);
        long long parsed = 0;
        try {
            size_t used = 0;
            parsed = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw std::runtime_error("parameter '" + key + "' needs an integer, got '" +
                                     value + "'");
        }
        if (key == "seed") {
            if (parsed < 0) throw std::runtime_error("seed must be nonnegative");
            seed = (std::uint64_t)parsed;
        } else if (key == "n" || key == "m" || key == "rows" || key == "cols" ||
                   key == "legs" || key == "len") {
            values[key] = parsed;
        } else {
            throw std::runtime_error("unknown parameter '" + key + "'");
        }
    }
    auto need = [&](const char* key) {
        auto it = values.find(key);
        if (it == values.end())
            throw std::runtime_error(g.kind + " needs parameter " + key + "=<value>");
        return it->second;
    };

    Graph graph;
    if (g.kind == "path") {
        graph = gen_path((int)need("n"));
    } else if (g.kind == "cycle") {
        graph = gen_cycle((int)need("n"));
    } else if (g.kind == "grid") {
        graph = gen_grid((int)need("rows"), (int)need("cols"));
    } else if (g.kind == "spider") {
        graph = gen_spider((int)need("legs"), (int)need("len"));
    } else if (g.kind == "random") {
        if (!seed) throw std::runtime_error("random needs a seed (seed=<value> or --seed)");
        graph = gen_random_edges((int)need("n"), need("m"), *seed);
    } else {
        throw std::runtime_error("unknown generator kind '" + g.kind + "'");
    }

    InstanceFile inst = make_instance(graph);
    if (g.out_path.empty()) {
        write_instance(std::cout, inst);
    } else {
        auto out = open_out(g.out_path);
        write_instance(out, inst);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-size separator kernelization toolkit"};
    app.require_subcommand(1);

    CommonOpts kern_opts;
    std::string kern_out, kern_witness;
    auto* kern = app.add_subcommand("kernelize", "reduce an instance to its kernel");
    add_common(kern, kern_opts, true);
    kern->add_option("--out", kern_out, "write the kernel instance here");
    kern->add_option("--emit-witness", kern_witness, "write the crown witness here");

    CommonOpts solve_opts;
    auto* solve = app.add_subcommand("solve", "compute a minimum separator");
    add_common(solve, solve_opts, true);

    CommonOpts verify_opts;
    std::string verify_witness;
    auto* verify = app.add_subcommand("verify", "check a separator or crown witness");
    add_common(verify, verify_opts, false);
    verify->add_option("witness", verify_witness, "witness file to check")->required();

    GenOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a test instance");
    gen->add_option("kind", gen_opts.kind, "path, cycle, grid, random, or spider")
        ->required();
    gen->add_option("params", gen_opts.params, "key=value parameters");
    gen->add_option("--seed", gen_opts.seed, "seed for random generation");
    gen->add_option("--out", gen_opts.out_path, "write the instance here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (kern->parsed()) return run_kernelize(kern_opts, kern_out, kern_witness);
        if (solve->parsed()) return run_solve(solve_opts);
        if (verify->parsed()) return run_verify(verify_opts, verify_witness);
        if (gen->parsed()) return run_gen(gen_opts);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
