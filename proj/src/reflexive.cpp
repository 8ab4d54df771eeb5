#include "toricsym/reflexive.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace toricsym {

namespace {

using P2 = std::array<long, 2>;

long cross(const P2& a, const P2& b) { return a[0] * b[1] - a[1] * b[0]; }

// upper half-plane (including the positive x-axis) first, then by angle
bool angle_less(const P2& a, const P2& b) {
    auto half = [](const P2& p) { return p[1] > 0 || (p[1] == 0 && p[0] > 0) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
}

// the edge a -> b sits at lattice distance 1 from the origin
bool unit_edge(const P2& a, const P2& b) {
    long g = std::gcd(std::labs(b[0] - a[0]), std::labs(b[1] - a[1]));
    return g > 0 && cross(a, b) == g;
}

bool convex_turn(const P2& a, const P2& b, const P2& c) {
    return cross({b[0] - a[0], b[1] - a[1]}, {c[0] - b[0], c[1] - b[1]}) > 0;
}

struct Search {
    std::vector<P2> pts;
    std::vector<std::size_t> chosen;
    std::map<IntMatrix, std::vector<IntVector>> classes;

    void close() {
        const std::size_t m = chosen.size();
        if (m < 3) return;
        const P2 &first = pts[chosen[0]], &second = pts[chosen[1]], &last = pts[chosen[m - 1]], &before = pts[chosen[m - 2]];
        if (!unit_edge(last, first) || !convex_turn(before, last, first) || !convex_turn(last, first, second)) return;
        std::vector<IntVector> poly;
        for (auto i : chosen) poly.push_back({pts[i][0], pts[i][1]});
        classes.emplace(polygon_normal_form(poly), poly);
    }

    void extend(std::size_t from) {
        close();
        if (chosen.size() == 6) return;  // a reflexive polygon has at most six vertices
        for (std::size_t j = from; j < pts.size(); ++j) {
            const P2& b = pts[j];
            if (!chosen.empty()) {
                const P2& a = pts[chosen.back()];
                if (!unit_edge(a, b)) continue;
                if (chosen.size() >= 2 && !convex_turn(pts[chosen[chosen.size() - 2]], a, b)) continue;
            }
            chosen.push_back(j);
            extend(j + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

IntMatrix polygon_normal_form(const std::vector<IntVector>& v) {
    const std::size_t m = v.size();
    std::optional<IntMatrix> best;
    for (int dir : {1, -1})
        for (std::size_t s = 0; s < m; ++s) {
            IntMatrix a(2, m);
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t idx = dir > 0 ? (s + j) % m : (s + m - j) % m;
                a(0, j) = v[idx][0];
                a(1, j) = v[idx][1];
            }
            IntMatrix h = hermite_normal_form(a);
            if (!best || h < *best) best = h;
        }
    return *best;
}

std::vector<std::vector<IntVector>> reflexive_polygons(int box) {
    Search s;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            if (x || y) s.pts.push_back({x, y});
    std::sort(s.pts.begin(), s.pts.end(), angle_less);
    s.extend(0);
    std::vector<std::vector<IntVector>> out;
    for (auto& [form, poly] : s.classes) out.push_back(poly);
    return out;
}

}  // namespace toricsym
