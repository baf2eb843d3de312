#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlift/config_space.hpp"
#include "graphlift/gamma.hpp"
#include "graphlift/graphmap.hpp"
#include "graphlift/lifting.hpp"

namespace graphlift {

enum class Verdict { liftable, unliftable };
// no_admissible_order covers maps outside the simplicial-faithful class
// (loop-image edge pairs the pair configuration cannot see): the formula is
// satisfiable but no model induces an admissible collection.
enum class Reason { none, two_obstructor, gamma_unsat, no_admissible_order };
enum class GammaStatus { undefined, sat, unsat };

struct AnalyzeOptions {
    bool restrict_first = true;
    int obstructor_scan = 2;      // additionally scan arities 3..N when > 2
    bool count_models = false;
    std::size_t model_cap = 1'000'000;
    bool stable_shortcut = false;
    bool fast = false;            // skip the shortcut cross-check
    ConfigLimits limits{};
};

struct GammaStats {
    int vars = 0;
    int clauses = 0;
};

// Witness rendered with vertex names so it survives restriction reindexing.
struct NamedWitness {
    int arity = 0;
    std::vector<std::vector<std::string>> path;
};

enum class Crosscheck { not_applicable, ok, skipped };

struct AnalysisReport {
    Verdict verdict = Verdict::unliftable;
    Reason reason = Reason::none;
    bool p2_trivial = false;
    GammaStatus gamma_status = GammaStatus::undefined;
    std::optional<GammaStats> gamma;
    std::optional<std::uint64_t> models;
    bool models_truncated = false;
    std::vector<NamedWitness> witnesses;
    std::vector<int> scanned_clean; // arities scanned with no witness (beyond 2)
    std::optional<std::pair<std::string, std::string>> inadmissible_pair; // edge names
    std::optional<Lifting> lifting; // heights over the original domain
    bool shortcut_requested = false;
    bool shortcut_applied = false;
    Crosscheck crosscheck = Crosscheck::not_applicable;
    std::int64_t elapsed_us = 0;
};

// The full decision pipeline: validate, restrict to the multiple-point part,
// look for a 2-obstructor, then build and solve the transitivity formula and
// extract heights. Liftable reports always carry verified heights.
AnalysisReport analyze_map(const GraphMap& m, const AnalyzeOptions& opts = {});

// Byte-stable stdout block (no timing).
std::string render_report(const AnalysisReport& r, const GraphMap& m);

// 0 liftable, 1 unliftable.
int report_exit_code(const AnalysisReport& r);

// Embedded instances.
std::vector<std::string> corpus_names();
// Throws std::invalid_argument on unknown name.
std::string corpus_gmap(const std::string& name);
// The formula behind the realized corpus entries.
std::string corpus_gcnf_nontrivial_gamma();

} // namespace graphlift
