#pragma once

#include "toricsym/fan.hpp"

#include <map>

namespace toricsym {

struct ChainNode {
    std::string id;
    std::string statement;
    std::optional<bool> value;  // nullopt when undecided at this budget
    std::string decided_by;
};

struct ChainReport {
    std::vector<ChainNode> nodes;  // strongest notion first
    std::vector<long> vanishing_ks;  // k <= budget with Bc_k = 0
    std::vector<std::string> violations;
    std::vector<std::string> strict_witnesses;  // one-way implications whose converse fails here

    bool consistent() const { return violations.empty(); }
    std::optional<bool> value(const std::string& id) const;
};

/// Decides every symmetry notion it can and checks all implications between them.
/// Bc_k is sampled for k = 1..k_budget; the "for all k" notions are decided exactly from the
/// numerators of the barycenter rational function.
ChainReport verify_implication_chain(const Fan& f, long k_budget);

}  // namespace toricsym
