#pragma once

#include "toricsym/io.hpp"

#include <set>

namespace fixtures {

inline toricsym::Fan load(const std::string& name) {
    return toricsym::parse_fan_file(std::string(TORICSYM_DATA_DIR) + "/" + name + ".fan");
}

inline toricsym::Rational q(long a, long b = 1) { return toricsym::make_rational(a, b); }

inline std::set<toricsym::RatVector> vset(const toricsym::Polytope& p) {
    return {p.vertices().begin(), p.vertices().end()};
}

inline std::set<toricsym::RatVector> pts(const std::vector<toricsym::RatVector>& v) { return {v.begin(), v.end()}; }

inline const std::vector<std::string>& bundled() {
    static const std::vector<std::string> names{"p2", "p1xp1", "dp1", "dp2", "dp3", "fano3fold_5_2", "weighted_112"};
    return names;
}

}  // namespace fixtures
