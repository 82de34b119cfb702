#pragma once

#include "stringcx/complex.hpp"
#include "stringcx/construct.hpp"
#include "stringcx/gap_space.hpp"
#include "stringcx/generators.hpp"
#include "stringcx/strings.hpp"

#include <cmath>
#include <random>

namespace testutil {

using namespace stringcx;

/// Symmetric exact metric with off-diagonal entries in [low, 2*low]; the
/// triangle inequality holds because any two entries sum to at least the
/// maximum, with equality possible (so strings do occur).
inline GapSpace random_interval_metric(int n, std::mt19937& rng, int low = 5) {
    std::uniform_int_distribution<int> dist(low, 2 * low);
    std::vector<std::vector<Scalar>> gaps(n, std::vector<Scalar>(n, Scalar::exact(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Scalar d = Scalar::exact(dist(rng));
            gaps[i][j] = d;
            gaps[j][i] = d;
        }
    return GapSpace(std::move(gaps), {}, 0.0, Trust::verify, "test:interval");
}

/// Shortest-path closure of a random symmetric weighted complete graph;
/// tight triangles are common.
inline GapSpace random_path_metric(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Scalar w = Scalar::exact(dist(rng));
            arcs.push_back({i, j, w});
            arcs.push_back({j, i, w});
        }
    return digraph_gaps(n, arcs);
}

/// Strongly connected digraph: a directed Hamiltonian cycle plus random
/// extra arcs, closed under shortest paths.
inline GapSpace random_digraph_space(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(1, 9);
    std::uniform_int_distribution<int> node(0, n - 1);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n, Scalar::exact(dist(rng))});
    for (int extra = 0; extra < n; ++extra) {
        const int a = node(rng);
        const int b = node(rng);
        if (a != b) arcs.push_back({a, b, Scalar::exact(dist(rng))});
    }
    return digraph_gaps(n, arcs);
}

/// Asymmetric gap space with one negative gap; every ordered triangle holds
/// and {0,1,2} is a string via the order (1,0,2).
inline GapSpace negative_gap_space() {
    std::vector<std::vector<Scalar>> gaps = {
        {Scalar::exact(0), Scalar::exact(-1), Scalar::exact(3)},
        {Scalar::exact(2), Scalar::exact(0), Scalar::exact(5)},
        {Scalar::exact(6), Scalar::exact(5), Scalar::exact(0)}};
    return GapSpace(std::move(gaps), {}, 0.0, Trust::verify, "test:negative");
}

inline GapSpace directed_three_cycle() {
    return digraph_gaps(3, {{0, 1, Scalar::exact(1)},
                            {1, 2, Scalar::exact(1)},
                            {2, 0, Scalar::exact(1)}});
}

/// 3-node digraph whose shortest paths are asymmetric (a one-way shortcut).
inline GapSpace one_way_shortcut_space() {
    return digraph_gaps(3, {{0, 1, Scalar::exact(1)},
                            {1, 0, Scalar::exact(1)},
                            {1, 2, Scalar::exact(1)},
                            {2, 1, Scalar::exact(1)},
                            {0, 2, Scalar::exact(1)}});
}

/// Regular triangle with one midpoint per edge: six points.
inline GapSpace triangle_with_midpoints() {
    return polygon_points({3, 3, 3}, {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2}});
}

inline GapSpace ex5_circle_space() { return sphere_four_points(); }

inline std::vector<Scalar> exact_values(std::initializer_list<long long> vs) {
    std::vector<Scalar> out;
    for (long long v : vs) out.push_back(Scalar::exact(v));
    return out;
}

/// Same member sets with equal births (exact equality in exact mode).
inline bool same_string_sets(const StringSet& a, const StringSet& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!approx_eq(ia->second.birth, ib->second.birth, a.tolerance())) return false;
    }
    return true;
}

}  // namespace testutil
