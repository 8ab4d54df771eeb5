#include "toricsym/symmetry.hpp"

#include "toricsym/lattice_count.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace toricsym {

std::optional<std::size_t> LatticeAutGroup::index_of(const IntMatrix& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
}

void check_group_axioms(const LatticeAutGroup& g) {
    const IntMatrix id = IntMatrix::identity(g.dim);
    if (!g.contains(id)) throw InvariantViolation("group lacks the identity");
    for (const auto& a : g.elements) {
        bool has_inverse = false;
        for (const auto& b : g.elements) {
            IntMatrix ab = a * b;
            if (!g.contains(ab)) throw InvariantViolation("group is not closed under products");
            has_inverse = has_inverse || ab == id;
        }
        if (!has_inverse) throw InvariantViolation("group element without inverse");
    }
}

IntMatrix dual_action(const IntMatrix& g) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(to_rational(g.row(i)));
    auto inv = inverse(rows);
    if (!inv) throw ValidationError("matrix is singular");
    IntMatrix out(g.cols(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const Rational& x = (*inv)[i][j];
            if (x.get_den() != 1) throw ValidationError("matrix is not unimodular");
            out(j, i) = x.get_num();
        }
    return out;
}

namespace {

struct Candidate {
    IntMatrix g;
    std::vector<std::size_t> point_perm;
    std::vector<std::size_t> facet_perm;
};

// Linear maps carrying a spanning point set onto itself.  Images of a frame of independent
// points are matched under a pairwise invariant; `finish` adds the facet permutation or rejects.
class FrameSearch {
public:
    using Finish = std::function<std::optional<std::vector<std::size_t>>(const IntMatrix&, const std::vector<std::size_t>&)>;

    FrameSearch(std::size_t dim, const std::vector<RatVector>& pts, std::vector<std::vector<int>> pair_class, Finish finish)
        : n_(dim), pts_(pts), pair_(std::move(pair_class)), finish_(std::move(finish)) {
        for (std::size_t i = 0; i < pts_.size(); ++i) index_[pts_[i]] = i;
        choose_frame();
    }

    std::vector<Candidate> run() {
        images_.assign(frame_.size(), 0);
        used_.assign(pts_.size(), false);
        dfs(0);
        return std::move(found_);
    }

private:
    std::size_t n_;
    const std::vector<RatVector>& pts_;
    std::vector<std::vector<int>> pair_;
    Finish finish_;
    std::map<RatVector, std::size_t> index_;
    std::vector<std::size_t> frame_;
    std::vector<RatVector> frame_inverse_;
    std::vector<std::size_t> images_;
    std::vector<bool> used_;
    std::vector<Candidate> found_;

    void choose_frame() {
        std::map<int, std::size_t> class_size;
        for (std::size_t i = 0; i < pts_.size(); ++i) ++class_size[pair_[i][i]];
        std::vector<std::size_t> order(pts_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return class_size[pair_[a][a]] < class_size[pair_[b][b]];
        });
        std::vector<RatVector> chosen;
        for (std::size_t i : order) {
            chosen.push_back(pts_[i]);
            if (rank(chosen) == chosen.size()) frame_.push_back(i);
            else chosen.pop_back();
            if (frame_.size() == n_) break;
        }
        if (frame_.size() != n_) throw DomainError("points do not span the ambient space");
        std::vector<RatVector> cols(n_, RatVector(n_));
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < n_; ++i) cols[i][j] = pts_[frame_[j]][i];
        frame_inverse_ = *inverse(cols);
    }

    void dfs(std::size_t depth) {
        if (depth == frame_.size()) {
            leaf();
            return;
        }
        const std::size_t src = frame_[depth];
        for (std::size_t c = 0; c < pts_.size(); ++c) {
            if (used_[c] || pair_[c][c] != pair_[src][src]) continue;
            bool ok = true;
            for (std::size_t e = 0; e < depth && ok; ++e)
                ok = pair_[frame_[e]][src] == pair_[images_[e]][c] && pair_[src][frame_[e]] == pair_[c][images_[e]];
            if (!ok) continue;
            used_[c] = true;
            images_[depth] = c;
            dfs(depth + 1);
            used_[c] = false;
        }
    }

    void leaf() {
        IntMatrix g(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t l = 0; l < n_; ++l) {
                Rational s = 0;
                for (std::size_t j = 0; j < n_; ++j) s += pts_[images_[j]][i] * frame_inverse_[j][l];
                if (s.get_den() != 1) return;
                g(i, l) = s.get_num();
            }
        if (!is_unimodular(g)) return;
        std::vector<std::size_t> perm(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            auto it = index_.find(g.apply(pts_[i]));
            if (it == index_.end()) return;
            perm[i] = it->second;
        }
        auto facets = finish_(g, perm);
        if (!facets) return;
        found_.push_back({std::move(g), std::move(perm), std::move(*facets)});
    }
};

LatticeAutGroup assemble(std::size_t dim, std::vector<Candidate> cs) {
    std::sort(cs.begin(), cs.end(), [](const Candidate& a, const Candidate& b) { return a.g < b.g; });
    LatticeAutGroup out;
    out.dim = dim;
    for (auto& c : cs) {
        if (!out.elements.empty() && out.elements.back() == c.g) continue;
        out.elements.push_back(std::move(c.g));
        out.vertex_permutations.push_back(std::move(c.point_perm));
        out.facet_permutations.push_back(std::move(c.facet_perm));
    }
    return out;
}

template <class Key>
std::vector<std::vector<int>> intern(std::size_t m, const std::function<Key(std::size_t, std::size_t)>& key) {
    std::map<Key, int> ids;
    std::vector<std::vector<int>> out(m, std::vector<int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto [it, fresh] = ids.emplace(key(i, j), static_cast<int>(ids.size()));
            (void)fresh;
            out[i][j] = it->second;
        }
    return out;
}

std::vector<std::vector<std::size_t>> facet_vertex_sets(const Polytope& p) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t f = 0; f < p.facets().size(); ++f) out.push_back(p.facet_vertices(f));
    return out;
}

}  // namespace

LatticeAutGroup polytope_automorphisms(const Polytope& p) {
    if (!p.full_dimensional()) throw DomainError("automorphisms need a full-dimensional polytope");
    if (!is_lattice_polytope(p)) throw DomainError("automorphisms need a lattice polytope");
    const auto& verts = p.vertices();
    const auto& facets = p.facets();
    using Triple = std::vector<Rational>;
    auto key = [&](std::size_t i, std::size_t j) {
        std::vector<Triple> t;
        for (const auto& f : facets) t.push_back({dot(verts[i], f.normal), dot(verts[j], f.normal), f.rhs});
        std::sort(t.begin(), t.end());
        return t;
    };
    auto pairs = intern<std::vector<Triple>>(verts.size(), key);

    auto sets = facet_vertex_sets(p);
    std::map<std::vector<std::size_t>, std::size_t> facet_by_set;
    for (std::size_t f = 0; f < sets.size(); ++f) facet_by_set[sets[f]] = f;

    FrameSearch search(p.dim(), verts, std::move(pairs),
                       [&](const IntMatrix&, const std::vector<std::size_t>& perm) -> std::optional<std::vector<std::size_t>> {
                           std::vector<std::size_t> fp(sets.size());
                           for (std::size_t f = 0; f < sets.size(); ++f) {
                               std::vector<std::size_t> img;
                               for (auto v : sets[f]) img.push_back(perm[v]);
                               std::sort(img.begin(), img.end());
                               auto it = facet_by_set.find(img);
                               if (it == facet_by_set.end()) throw InvariantViolation("vertex map does not carry facets to facets");
                               fp[f] = it->second;
                           }
                           return fp;
                       });
    LatticeAutGroup g = assemble(p.dim(), search.run());
    check_group_axioms(g);
    return g;
}

LatticeAutGroup fan_automorphisms(const Fan& f) {
    if (!is_complete(f)) throw DomainError("fan automorphisms need a complete fan");
    std::vector<RatVector> rays;
    for (const auto& r : f.rays) rays.push_back(to_rational(r));
    std::vector<std::vector<bool>> member(f.rays.size(), std::vector<bool>(f.max_cones.size(), false));
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        for (auto i : f.max_cones[c]) member[i][c] = true;
    using Entry = std::array<std::size_t, 3>;
    auto key = [&](std::size_t i, std::size_t j) {
        std::vector<Entry> t;
        for (std::size_t c = 0; c < f.max_cones.size(); ++c)
            t.push_back({member[i][c], member[j][c], f.max_cones[c].size()});
        std::sort(t.begin(), t.end());
        return t;
    };
    auto pairs = intern<std::vector<Entry>>(rays.size(), key);

    std::map<Cone, std::size_t> cone_index;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) cone_index[f.max_cones[c]] = c;

    FrameSearch search(f.dim, rays, std::move(pairs),
                       [&](const IntMatrix&, const std::vector<std::size_t>& perm) -> std::optional<std::vector<std::size_t>> {
                           std::vector<std::size_t> cp(f.max_cones.size());
                           for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
                               Cone img;
                               for (auto i : f.max_cones[c]) img.push_back(perm[i]);
                               std::sort(img.begin(), img.end());
                               auto it = cone_index.find(img);
                               if (it == cone_index.end()) return std::nullopt;
                               cp[c] = it->second;
                           }
                           return cp;
                       });
    LatticeAutGroup g = assemble(f.dim, search.run());
    check_group_axioms(g);

    if (is_fano(f)) {
        LatticeAutGroup pg = polytope_automorphisms(polytope_from_fan(f));
        if (pg.order() != g.order()) throw InvariantViolation("fan and polytope automorphism groups differ in order");
        for (const auto& m : pg.elements)
            if (!g.contains(dual_action(m))) throw InvariantViolation("transpose of a polytope automorphism is not a fan automorphism");
    }
    return g;
}

LatticeAutGroup filter_subgroup(const LatticeAutGroup& parent, const std::function<bool(std::size_t)>& keep) {
    LatticeAutGroup out;
    out.dim = parent.dim;
    for (std::size_t i = 0; i < parent.order(); ++i) {
        if (!keep(i)) continue;
        out.elements.push_back(parent.elements[i]);
        out.vertex_permutations.push_back(parent.vertex_permutations[i]);
        out.facet_permutations.push_back(parent.facet_permutations[i]);
    }
    check_group_axioms(out);
    return out;
}

LatticeAutGroup generated_subgroup(const LatticeAutGroup& parent, const std::vector<IntMatrix>& generators) {
    std::set<IntMatrix> seen{IntMatrix::identity(parent.dim)};
    std::vector<IntMatrix> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& a : frontier)
            for (const auto& s : generators) {
                IntMatrix b = a * s;
                if (!parent.contains(b)) throw ValidationError("generator is not in the parent group");
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return filter_subgroup(parent, [&](std::size_t i) { return seen.count(parent.elements[i]) > 0; });
}

std::vector<RatVector> fixed_subspace(const LatticeAutGroup& g) {
    std::vector<RatVector> rows;
    for (const auto& m : g.elements)
        for (std::size_t i = 0; i < g.dim; ++i) {
            RatVector r = to_rational(m.row(i));
            r[i] -= 1;
            rows.push_back(std::move(r));
        }
    if (rows.empty()) rows.push_back(RatVector(g.dim));
    return kernel(rows, g.dim);
}

namespace {

RootData split(std::vector<Root> all) {
    std::sort(all.begin(), all.end());
    RootData d;
    std::set<LatticePoint> ms;
    for (const auto& r : all) ms.insert(r.m);
    for (const auto& r : all) {
        LatticePoint neg = r.m;
        for (auto& x : neg) x = -x;
        (ms.count(neg) ? d.semisimple : d.unipotent).push_back(r);
    }
    d.roots = std::move(all);
    return d;
}

}  // namespace

RootData roots(const Fan& f) {
    if (!is_complete(f)) throw DomainError("roots need a complete fan");
    std::vector<Root> all;
    for (std::size_t v = 0; v < f.rays.size(); ++v) {
        HPolytope h{f.dim, {}};
        for (std::size_t w = 0; w < f.rays.size(); ++w) {
            IntVector neg = f.rays[w];
            for (auto& x : neg) x = -x;
            if (w == v) {
                h.inequalities.push_back({f.rays[w], -1});
                h.inequalities.push_back({neg, 1});
            } else {
                h.inequalities.push_back({neg, 0});
            }
        }
        auto q = Polytope::try_from_inequalities(h, true);
        if (!q) continue;
        for (auto& m : enumerate_lattice_points(*q)) all.push_back({std::move(m), v});
    }
    return split(std::move(all));
}

RootData facet_interior_points(const Polytope& p) {
    std::vector<Root> all;
    const auto& fs = p.facets();
    for (std::size_t f = 0; f < fs.size(); ++f) {
        HPolytope h{p.dim(), fs};
        IntVector neg = fs[f].normal;
        for (auto& x : neg) x = -x;
        h.inequalities.push_back({neg, -fs[f].rhs});
        auto q = Polytope::try_from_inequalities(h, true);
        if (!q) continue;
        for (auto& m : enumerate_lattice_points(*q)) {
            RatVector y = to_rational(m);
            bool interior = true;
            for (std::size_t g = 0; g < fs.size() && interior; ++g)
                if (g != f && fs[g].tight_at(y)) interior = false;
            if (interior) all.push_back({std::move(m), f});
        }
    }
    return split(std::move(all));
}

LatticeAutGroup symmetry_group_on_m(const Fan& f) {
    if (is_fano(f)) return polytope_automorphisms(polytope_from_fan(f));
    LatticeAutGroup fg = fan_automorphisms(f);
    Polytope p = polytope_from_fan(f);
    std::map<RatVector, std::size_t> vindex;
    for (std::size_t i = 0; i < p.vertices().size(); ++i) vindex[p.vertices()[i]] = i;
    auto sets = facet_vertex_sets(p);
    std::map<std::vector<std::size_t>, std::size_t> facet_by_set;
    for (std::size_t i = 0; i < sets.size(); ++i) facet_by_set[sets[i]] = i;
    std::vector<Candidate> cs;
    for (const auto& h : fg.elements) {
        Candidate c{dual_action(h), {}, {}};
        for (const auto& v : p.vertices()) {
            auto it = vindex.find(c.g.apply(v));
            if (it == vindex.end()) throw InvariantViolation("fan automorphism does not preserve the polytope");
            c.point_perm.push_back(it->second);
        }
        for (const auto& s : sets) {
            std::vector<std::size_t> img;
            for (auto v : s) img.push_back(c.point_perm[v]);
            std::sort(img.begin(), img.end());
            c.facet_perm.push_back(facet_by_set.at(img));
        }
        cs.push_back(std::move(c));
    }
    LatticeAutGroup g = assemble(f.dim, std::move(cs));
    check_group_axioms(g);
    return g;
}

SymmetryClassification classify_symmetry(const Fan& f) {
    Polytope p = polytope_from_fan(f);
    SymmetryClassification c;
    std::set<RatVector> verts(p.vertices().begin(), p.vertices().end()), negs;
    for (const auto& v : p.vertices()) {
        RatVector w = v;
        for (auto& x : w) x = -x;
        negs.insert(w);
    }
    c.centrally_symmetric = verts == negs;
    auto fixed = fixed_subspace(symmetry_group_on_m(f));
    c.fixed_space_dimension = fixed.size();
    c.bs_symmetric = fixed.empty();
    c.centrally_lattice_symmetric = roots(f).unipotent.empty();
    return c;
}

LatticeAutGroup aut0_subgroup(const Polytope& p, const LatticeAutGroup& aut, const RootData& facet_roots) {
    const auto& fs = p.facets();
    auto passes = [&](std::size_t e) {
        const auto& fp = aut.facet_permutations[e];
        for (std::size_t f = 0; f < fs.size(); ++f) {
            if (fp[f] == f) continue;
            bool witnessed = false;
            for (const auto& r : facet_roots.roots) {
                if (r.ray != fp[f]) continue;
                RatVector neg = to_rational(r.m);
                for (auto& x : neg) x = -x;
                if (fs[f].tight_at(neg) && contains(p, neg)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) return false;
        }
        return true;
    };
    return filter_subgroup(aut, passes);
}

LatticeAutGroup aut0_subgroup(const Polytope& p) {
    return aut0_subgroup(p, polytope_automorphisms(p), facet_interior_points(p));
}

}  // namespace toricsym
