// Command-line front end: decide liftability of graph maps to codimension-one
// embeddings, emit certificates, and generate hard instances from formulas.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphlift/analysis.hpp"
#include "graphlift/errors.hpp"
#include "graphlift/gamma.hpp"
#include "graphlift/realize.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw graphlift::validation_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_analyze(const std::string& path, const graphlift::AnalyzeOptions& opts) {
    graphlift::GraphMap m = graphlift::parse_gmap(read_input(path));
    graphlift::AnalysisReport rep = graphlift::analyze_map(m, opts);
    std::cout << graphlift::render_report(rep, m);
    std::cerr << "time_us: " << rep.elapsed_us << "\n";
    return graphlift::report_exit_code(rep);
}

int run_obstruct(const std::string& path, int n, graphlift::ConfigLimits limits) {
    graphlift::GraphMap m = graphlift::parse_gmap(read_input(path));
    limits.max_arity = std::max(limits.max_arity, n);
    auto witness = graphlift::find_obstructor(m, n, limits);
    if (!witness) {
        std::cout << "obstructor " << n << ": none\n";
        return 0;
    }
    std::cout << "obstructor " << n << "\n";
    for (const auto& tuple : witness->path) {
        std::cout << "step (";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << m.domain.vertex_name(tuple[i]);
        }
        std::cout << ")\n";
    }
    return 1;
}

int run_gamma(const std::string& path, const graphlift::ConfigLimits& limits) {
    graphlift::GraphMap m = graphlift::parse_gmap(read_input(path));
    graphlift::GammaFormula g;
    try {
        g = graphlift::build_gamma(m, limits);
    } catch (const graphlift::gamma_undefined_error&) {
        std::cout << "gamma_status: undefined\n";
        return 1;
    }
    std::cout << "gamma_vars: " << g.var_count << "\n";
    std::cout << "gamma_clauses: " << g.clauses.size() << "\n";
    for (const auto& c : g.clauses)
        std::cout << "clause " << c[0] << " " << c[1] << " " << c[2] << "\n";
    bool sat = graphlift::solve(g).has_value();
    std::cout << "gamma_status: " << (sat ? "sat" : "unsat") << "\n";
    return sat ? 0 : 1;
}

int run_nu3(const std::string& path, const graphlift::ConfigLimits& limits) {
    graphlift::GraphMap m = graphlift::parse_gmap(read_input(path));
    bool mu2 = graphlift::mu2_vanishes(m, limits);
    graphlift::NuPartition nu = graphlift::nu3_closure(m, limits);
    std::cout << "mu2: " << (mu2 ? 0 : 1) << "\n";
    std::cout << "nu3: " << (nu.vanishes ? 0 : 1) << "\n";
    std::cout << "merges: " << nu.log.size() << "\n";
    auto pair_str = [&](const std::array<graphlift::VertexId, 2>& p) {
        return "(" + m.domain.vertex_name(p[0]) + "," + m.domain.vertex_name(p[1]) + ")";
    };
    for (const auto& merge : nu.log) {
        std::cout << "merge (" << m.domain.vertex_name(merge.cause[0]) << ","
                  << m.domain.vertex_name(merge.cause[1]) << ","
                  << m.domain.vertex_name(merge.cause[2]) << ") "
                  << pair_str(nu.comp_least_pair[merge.from_comp]) << " -> "
                  << pair_str(nu.comp_least_pair[merge.into_comp]) << "\n";
    }
    return 0;
}

int run_realize(const std::string& path, bool strict) {
    graphlift::CnfSpec spec = graphlift::parse_cnf(read_input(path));
    spec = graphlift::validate_shape(spec, strict);
    graphlift::RealizedMap r = graphlift::realize(spec);
    std::cout << graphlift::serialize_gmap(r.map);

    for (const auto& t : spec.added_twins)
        std::cerr << "added_twin: imp " << t[0] << " " << t[1] << " " << t[2] << "\n";
    for (int v : r.dropped_vars) std::cerr << "dropped_var: " << v << "\n";
    graphlift::RealizationReport rep = graphlift::verify_realization(r, spec);
    std::cerr << "p2_trivial: " << rep.p2_trivial << "\n"
              << "gamma_equivalent: " << rep.gamma_equivalent << "\n"
              << "edges_two_preimages: " << rep.edges_two_preimages << "\n"
              << "vertices_three_preimages: " << rep.vertices_three_preimages << "\n"
              << "g_degree_four: " << rep.g_degree_four << "\n"
              << "h_degree_six: " << rep.h_degree_six << "\n"
              << "k2_two_regular: " << rep.k2_two_regular << "\n";
    return rep.all_pass() ? 0 : kExitInternal;
}

int run_corpus(const std::string& name) {
    if (name == "list") {
        for (const std::string& n : graphlift::corpus_names()) std::cout << n << "\n";
        return 0;
    }
    std::cout << graphlift::corpus_gmap(name);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"liftability of graph maps to codimension-one embeddings"};
    app.require_subcommand(1);

    std::string file;
    graphlift::AnalyzeOptions opts;
    int obstructors = 2;
    std::int64_t max_vertices = graphlift::ConfigLimits{}.max_vertices;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "GMAP v1 file, or - for stdin")->required();
        cmd->add_option("--max-config-vertices", max_vertices,
                        "tuple-count cap for configuration graphs");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full liftability analysis");
    CLI::App* lift = app.add_subcommand("lift", "alias of analyze (heights always on)");
    CLI::Option* count_opt = nullptr;
    for (CLI::App* cmd : {analyze, lift}) {
        add_common(cmd);
        cmd->add_flag("--no-restrict", "analyze the map as given, skip the multiple-point cut");
        cmd->add_option("--obstructors", obstructors, "scan obstructor arities up to N (3..5)");
        CLI::Option* c = cmd->add_option("--count", "count models, optional cap (use --count=N)")
                             ->expected(0, 1);
        if (cmd == analyze) count_opt = c;
        cmd->add_flag("--stable-shortcut",
                      "use the tree-to-path criterion when the map is stable");
        cmd->add_flag("--fast", "skip the shortcut cross-check");
    }

    CLI::App* obstruct = app.add_subcommand("obstruct", "search one obstructor arity");
    int arity = 2;
    add_common(obstruct);
    obstruct->add_option("n", arity, "obstructor arity (2..5)")->required();

    CLI::App* gamma = app.add_subcommand("gamma", "emit the transitivity formula");
    add_common(gamma);

    CLI::App* nu3 = app.add_subcommand("nu3", "pair-covering and closure invariants");
    add_common(nu3);

    CLI::App* realize = app.add_subcommand("realize", "compile a GCNF formula to a graph map");
    bool strict = false;
    realize->add_option("file", file, "GCNF v1 file, or - for stdin")->required();
    realize->add_flag("--strict", strict, "reject formulas missing negated twins");

    CLI::App* corpus = app.add_subcommand("corpus", "emit a bundled instance");
    std::string corpus_name;
    corpus->add_option("name", corpus_name, "instance name, or 'list'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze || *lift) {
            CLI::App* cmd = *analyze ? analyze : lift;
            opts.restrict_first = cmd->count("--no-restrict") == 0;
            opts.stable_shortcut = cmd->count("--stable-shortcut") > 0;
            opts.fast = cmd->count("--fast") > 0;
            if (obstructors < 2 || obstructors > 5) {
                std::cerr << "error: --obstructors must be between 2 and 5\n";
                return kExitInput;
            }
            opts.obstructor_scan = obstructors;
            opts.limits.max_arity = std::max(opts.limits.max_arity, obstructors);
            opts.limits.max_vertices = max_vertices;
            CLI::Option* c = *analyze ? count_opt : cmd->get_option("--count");
            if (c->count() > 0) {
                opts.count_models = true;
                const auto& res = c->results();
                if (!res.empty() && !res[0].empty()) opts.model_cap = std::stoull(res[0]);
            }
            return run_analyze(file, opts);
        }
        if (*obstruct) {
            if (arity < 2 || arity > 5) {
                std::cerr << "error: obstructor arity must be between 2 and 5\n";
                return kExitInput;
            }
            graphlift::ConfigLimits limits;
            limits.max_vertices = max_vertices;
            return run_obstruct(file, arity, limits);
        }
        if (*gamma) {
            graphlift::ConfigLimits limits;
            limits.max_vertices = max_vertices;
            return run_gamma(file, limits);
        }
        if (*nu3) {
            graphlift::ConfigLimits limits;
            limits.max_vertices = max_vertices;
            return run_nu3(file, limits);
        }
        if (*realize) return run_realize(file, strict);
        if (*corpus) return run_corpus(corpus_name);
    } catch (const graphlift::resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const graphlift::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const graphlift::validation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
