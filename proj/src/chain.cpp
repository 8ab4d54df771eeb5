#include "toricsym/chain.hpp"

#include "toricsym/demazure.hpp"
#include "toricsym/lattice_count.hpp"
#include "toricsym/stability.hpp"

#include <algorithm>
#include <set>

namespace toricsym {

std::optional<bool> ChainReport::value(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return n.value;
    throw ValidationError("unknown chain node " + id);
}

namespace {

// Positive integers k <= bound where every numerator vanishes; nullopt when the Cauchy bound is
// too large to scan.
std::optional<std::size_t> common_positive_roots(const std::vector<Polynomial>& numerators) {
    std::optional<std::size_t> bound;
    for (const auto& q : numerators) {
        if (q.is_zero()) continue;
        std::size_t deg = q.degree();
        Rational lead = abs(q.coefficients[deg]), worst = 0;
        for (std::size_t i = 0; i < deg; ++i) worst = std::max(worst, Rational(abs(q.coefficients[i]) / lead));
        Rational b = 1 + worst;
        if (b > 1000000) continue;
        std::size_t here = static_cast<std::size_t>(mpz_class(b.get_num() / b.get_den()).get_ui()) + 1;
        bound = bound ? std::min(*bound, here) : here;
    }
    if (!bound) return std::nullopt;
    std::size_t count = 0;
    for (std::size_t k = 1; k <= *bound; ++k) {
        bool all = true;
        for (const auto& q : numerators) all = all && q(Rational(static_cast<long>(k))) == 0;
        if (all) ++count;
    }
    return count;
}

}  // namespace

ChainReport verify_implication_chain(const Fan& f, long k_budget) {
    if (!is_fano(f)) throw DomainError("the implication chain is stated for reflexive fans");
    if (k_budget < 1) throw ValidationError("k budget must be positive");
    const std::size_t n = f.dim;
    Polytope p = polytope_from_fan(f);
    ChainReport r;

    auto sym = classify_symmetry(f);
    auto stab = metric_verdicts(f, k_budget);
    for (const auto& [k, zero] : stab.balanced_k)
        if (zero) r.vanishing_ks.push_back(k);

    auto rf = barycenter_rational_function(p);
    const bool all_k = rf.identically_zero();
    std::optional<bool> n_plus_1;
    std::string n_plus_1_how;
    if (r.vanishing_ks.size() >= n + 1) {
        n_plus_1 = true;
        n_plus_1_how = "observed at sampled k";
    } else if (all_k) {
        n_plus_1 = true;
        n_plus_1_how = "numerators vanish identically";
    } else if (auto c = common_positive_roots(rf.numerators)) {
        n_plus_1 = *c >= n + 1;
        n_plus_1_how = "common positive integer roots of the numerators: " + std::to_string(*c);
    }

    std::optional<bool> reductive;
    if (is_simplicial(f)) reductive = demazure_report(f).is_reductive;

    r.nodes = {
        {"central_symmetry", "P = -P", sym.centrally_symmetric, "vertex set"},
        {"bs_symmetry", "only 0 is fixed by Aut P", sym.bs_symmetric, "fixed subspace of Aut P"},
        {"alpha_one", "alpha of Aut P equals 1", stab.alpha.at("full") == 1, "fixed slice of P"},
        {"bc_k_zero_all_k", "Bc_k = 0 for all k", all_k, "numerators of the barycenter rational function"},
        {"bc_k_zero_large_k", "Bc_k = 0 for all large k", all_k, "a nonzero polynomial has finitely many roots"},
        {"bc_k_zero_n_plus_1", "Bc_k = 0 for n+1 values of k", n_plus_1, n_plus_1_how},
        {"bc_zero", "Bc = 0 (delta = 1)", stab.ke_exists, "exact centroid"},
        {"lattice_symmetry", "R(P) = -R(P)", sym.centrally_lattice_symmetric, "roots"},
        {"reductive", "unipotent radical is trivial", reductive, "Demazure data"},
    };

    struct Arrow {
        const char* from;
        const char* to;
        bool both_ways;
    };
    const std::vector<Arrow> arrows{
        {"central_symmetry", "bs_symmetry", false},
        {"bs_symmetry", "alpha_one", true},
        {"bs_symmetry", "bc_k_zero_all_k", false},
        {"bc_k_zero_all_k", "bc_k_zero_large_k", true},
        {"bc_k_zero_large_k", "bc_k_zero_n_plus_1", true},
        {"bc_k_zero_n_plus_1", "bc_zero", false},
        {"bc_zero", "lattice_symmetry", false},
        {"lattice_symmetry", "reductive", true},
    };
    for (const auto& a : arrows) {
        auto x = r.value(a.from), y = r.value(a.to);
        if (!x || !y) continue;
        if (*x && !*y) r.violations.push_back(std::string(a.from) + " holds but " + a.to + " fails");
        if (!*x && *y) {
            if (a.both_ways) r.violations.push_back(std::string(a.to) + " holds but " + a.from + " fails");
            else r.strict_witnesses.push_back(std::string(a.to) + " holds without " + a.from);
        }
    }
    // vanishing at n+1 sampled values forces vanishing everywhere
    if (r.vanishing_ks.size() >= n + 1 && !all_k) r.violations.push_back("Bc_k vanished at n+1 sampled k but not identically");
    return r;
}

}  // namespace toricsym
