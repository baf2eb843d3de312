#include "graphlift/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "graphlift/errors.hpp"

namespace graphlift {

namespace {

NamedWitness name_witness(const GraphMap& m, const ObstructorWitness& w) {
    NamedWitness out;
    out.arity = w.arity;
    for (const auto& tuple : w.path) {
        std::vector<std::string> names;
        names.reserve(tuple.size());
        for (VertexId v : tuple) names.push_back(m.domain.vertex_name(v));
        out.path.push_back(std::move(names));
    }
    return out;
}

// Heights computed on the multiple-point restriction carry over to the full
// map: every fiber with two or more members survives restriction whole, so
// only singleton fibers need filling in.
Lifting extend_lifting(const GraphMap& original, const GraphMap& working,
                       const Lifting& lw) {
    const FiberIndex fio = fibers(original);
    Lifting out;
    out.heights.assign(original.domain.vertex_count(), 0);
    for (VertexId w = 0; w < original.codomain.vertex_count(); ++w) {
        std::vector<std::pair<std::int32_t, VertexId>> present;
        std::vector<VertexId> absent;
        for (VertexId v : fio.vertex_fibers[w]) {
            VertexId wid = working.domain.find_vertex(original.domain.vertex_name(v));
            if (wid >= 0)
                present.emplace_back(lw.heights[wid], v);
            else
                absent.push_back(v);
        }
        std::sort(present.begin(), present.end());
        std::int32_t rank = 1;
        for (auto [h, v] : present) out.heights[v] = rank++;
        for (VertexId v : absent) out.heights[v] = rank++;
    }
    return out;
}

} // namespace

AnalysisReport analyze_map(const GraphMap& m, const AnalyzeOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    validate(m);

    AnalysisReport rep;
    rep.shortcut_requested = opts.stable_shortcut;

    GraphMap restricted;
    const GraphMap* work = &m;
    if (opts.restrict_first) {
        restricted = restrict_multiple(m);
        work = &restricted;
    }

    bool shortcut_applicable = false;
    if (opts.stable_shortcut)
        shortcut_applicable = is_stable(m).stable && is_tree(m.domain) && is_path(m.codomain);
    rep.shortcut_applied = shortcut_applicable;

    ConfigGraph c2 = build_config(*work, 2, opts.limits);
    ComponentMap cm2 = components(c2);
    std::optional<ObstructorWitness> obs2 = find_obstructor_in(c2, cm2);
    rep.p2_trivial = !obs2.has_value();

    if (obs2) {
        rep.verdict = Verdict::unliftable;
        rep.reason = Reason::two_obstructor;
        rep.gamma_status = GammaStatus::undefined;
        rep.witnesses.push_back(name_witness(*work, *obs2));
    } else {
        GammaFormula g = build_gamma(*work, opts.limits);
        rep.gamma = GammaStats{g.var_count, static_cast<int>(g.clauses.size())};
        std::optional<Assignment> model = solve(g);
        if (!model) {
            rep.verdict = Verdict::unliftable;
            rep.reason = Reason::gamma_unsat;
            rep.gamma_status = GammaStatus::unsat;
        } else {
            rep.gamma_status = GammaStatus::sat;
            // On simplicial-faithful inputs the first model is always
            // admissible. Loop-image edge pairs that share a vertex carry
            // constraints the pair components cannot express; for those we
            // filter the model list, which stays sound and complete because
            // every admissible collection induces a model.
            OrderCollection o = assignment_to_orders(*work, g, *model);
            AdmissibleCheck first = is_admissible(*work, o);
            bool found = first.ok;
            if (!found) {
                ModelList ml = enumerate_models(g, opts.model_cap);
                for (const Assignment& a : ml.models) {
                    OrderCollection cand = assignment_to_orders(*work, g, a);
                    if (is_admissible(*work, cand).ok) {
                        o = std::move(cand);
                        found = true;
                        break;
                    }
                }
                if (!found && ml.truncated)
                    throw resource_limit_error(
                        "model enumeration cap reached while searching for an admissible order");
            }
            if (found) {
                rep.verdict = Verdict::liftable;
                rep.reason = Reason::none;
                Lifting lw = orders_to_lifting(*work, o);
                Lifting full = opts.restrict_first ? extend_lifting(m, *work, lw) : lw;
                EmbeddingCheck emb = verify_embedding(m, full);
                if (!emb.ok)
                    throw std::logic_error(
                        "internal error: produced lifting fails the embedding check");
                rep.lifting = std::move(full);
            } else {
                rep.verdict = Verdict::unliftable;
                rep.reason = Reason::no_admissible_order;
                rep.inadmissible_pair = {
                    work->domain.edge_name(first.violation->first),
                    work->domain.edge_name(first.violation->second)};
            }
        }
        if (opts.count_models) {
            ModelList ml = enumerate_models(g, opts.model_cap);
            rep.models = ml.models.size();
            rep.models_truncated = ml.truncated;
        }
        for (int n = 3; n <= opts.obstructor_scan; ++n) {
            std::optional<ObstructorWitness> obs = find_obstructor(*work, n, opts.limits);
            if (obs)
                rep.witnesses.push_back(name_witness(*work, *obs));
            else
                rep.scanned_clean.push_back(n);
        }
    }

    if (shortcut_applicable) {
        Verdict shortcut_verdict = obs2 ? Verdict::unliftable : Verdict::liftable;
        if (opts.fast) {
            rep.crosscheck = Crosscheck::skipped;
        } else {
            if (shortcut_verdict != rep.verdict)
                throw std::logic_error(
                    "stable tree-to-path shortcut disagrees with the solver verdict");
            rep.crosscheck = Crosscheck::ok;
        }
        rep.verdict = shortcut_verdict;
    }

    rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string render_report(const AnalysisReport& r, const GraphMap& m) {
    std::ostringstream out;
    out << "verdict: " << (r.verdict == Verdict::liftable ? "liftable" : "unliftable") << "\n";
    out << "reason: ";
    switch (r.reason) {
        case Reason::none: out << "none"; break;
        case Reason::two_obstructor: out << "two-obstructor"; break;
        case Reason::gamma_unsat: out << "gamma-unsat"; break;
        case Reason::no_admissible_order: out << "no-admissible-order"; break;
    }
    out << "\n";
    out << "p2_trivial: " << (r.p2_trivial ? 1 : 0) << "\n";
    if (r.shortcut_requested) {
        out << "stable_shortcut: " << (r.shortcut_applied ? 1 : 0) << "\n";
        if (r.shortcut_applied)
            out << "crosscheck: " << (r.crosscheck == Crosscheck::ok ? "ok" : "skipped") << "\n";
    }
    if (r.gamma) {
        out << "gamma_vars: " << r.gamma->vars << "\n";
        out << "gamma_clauses: " << r.gamma->clauses << "\n";
    }
    out << "gamma_status: ";
    switch (r.gamma_status) {
        case GammaStatus::undefined: out << "undefined"; break;
        case GammaStatus::sat: out << "sat"; break;
        case GammaStatus::unsat: out << "unsat"; break;
    }
    out << "\n";
    if (r.models) {
        out << "models: " << *r.models;
        if (r.models_truncated) out << "+";
        out << "\n";
    }
    for (const NamedWitness& w : r.witnesses) {
        out << "obstructor " << w.arity << "\n";
        for (const auto& tuple : w.path) {
            out << "step (";
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) out << ",";
                out << tuple[i];
            }
            out << ")\n";
        }
    }
    for (int n : r.scanned_clean) out << "obstructor " << n << ": none\n";
    if (r.inadmissible_pair)
        out << "inadmissible " << r.inadmissible_pair->first << " "
            << r.inadmissible_pair->second << "\n";
    if (r.lifting) {
        for (VertexId v = 0; v < m.domain.vertex_count(); ++v)
            out << "height " << m.domain.vertex_name(v) << " " << r.lifting->heights[v] << "\n";
    }
    return out.str();
}

int report_exit_code(const AnalysisReport& r) {
    return r.verdict == Verdict::liftable ? 0 : 1;
}

} // namespace graphlift
