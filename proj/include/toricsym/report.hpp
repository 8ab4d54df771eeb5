#pragma once

#include "toricsym/fan.hpp"

#include <map>

#include "json.hpp"

namespace toricsym {

struct FanSummary {
    std::size_t dim = 0;
    std::size_t rays = 0;
    std::size_t cones = 0;
    bool complete = false;
    bool simplicial = false;
    bool smooth = false;
    bool fano = false;
    friend bool operator==(const FanSummary&, const FanSummary&) = default;
};

struct PolytopeSummary {
    std::vector<RatVector> vertices;
    std::size_t facets = 0;
    Rational volume;
    RatVector barycenter;
    bool lattice = false;
    friend bool operator==(const PolytopeSummary&, const PolytopeSummary&) = default;
};

struct RootEntry {
    LatticePoint m;
    std::size_t ray = 0;
    friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct RootSummary {
    std::vector<RootEntry> semisimple;
    std::vector<RootEntry> unipotent;
    friend bool operator==(const RootSummary&, const RootSummary&) = default;
};

struct SymmetrySummary {
    std::size_t aut_order = 0;                 // Aut P (or the fan group carried to M)
    std::optional<std::size_t> aut0_order;     // Fano only
    bool centrally_symmetric = false;
    bool bs_symmetric = false;
    bool centrally_lattice_symmetric = false;
    std::size_t fixed_space_dimension = 0;
    friend bool operator==(const SymmetrySummary&, const SymmetrySummary&) = default;
};

struct StabilitySummary {
    Rational delta;
    std::map<long, Rational> delta_k;
    std::map<std::string, Rational> alpha;
    bool ke_exists = false;
    bool reductive = false;
    std::map<long, bool> balanced_k;
    friend bool operator==(const StabilitySummary&, const StabilitySummary&) = default;
};

struct DemazureSummary {
    std::size_t class_group_free_rank = 0;
    std::vector<Integer> class_group_torsion;
    std::vector<IntVector> degrees;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> graded_dims;
    std::vector<std::size_t> gs_factor_sizes;
    std::size_t unipotent_dim = 0;
    std::size_t dim_aut0 = 0;
    bool is_reductive = false;
    std::optional<std::size_t> weyl_order;
    std::optional<std::size_t> component_group_order;
    friend bool operator==(const DemazureSummary&, const DemazureSummary&) = default;
};

struct ChainSummary {
    std::map<std::string, std::optional<bool>> nodes;
    std::vector<long> vanishing_ks;
    std::vector<std::string> violations;
    std::vector<std::string> strict_witnesses;
    friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

struct AnalysisReport {
    std::string name;
    std::string hash;
    FanSummary fan;
    std::optional<PolytopeSummary> polytope;
    std::map<long, RatVector> quantized_barycenters;
    std::optional<std::vector<Rational>> ehrhart;
    std::optional<RootSummary> roots;
    std::optional<SymmetrySummary> symmetry;
    std::optional<StabilitySummary> stability;
    std::optional<DemazureSummary> demazure;
    std::optional<ChainSummary> chain;
    std::map<std::string, std::string> errors;  // stage -> message
    bool invariant_violation = false;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
    long k_max = 3;
    bool skip_demazure = false;
    bool skip_ehrhart = false;
};

/// Runs every stage; per-stage domain errors are recorded, invariant violations set the flag.
AnalysisReport analyze(const Fan& f, const std::string& name, const std::string& hash, const AnalysisOptions& opts);
AnalysisReport analyze_file(const std::string& path, const AnalysisOptions& opts);

/// Sorted keys, rationals as "p/q" strings.
nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string serialize(const AnalysisReport& r);
AnalysisReport parse_report(const std::string& text);

}  // namespace toricsym
