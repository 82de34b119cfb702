#include "stringcx/construct.hpp"

#include "stringcx/generators.hpp"
#include "stringcx/strings.hpp"

#include <algorithm>
#include <set>

namespace stringcx {

namespace {

std::array<int, 2> sorted2(std::array<int, 2> e) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    return e;
}

std::array<int, 3> sorted3(std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

Triangulation2D::Triangulation2D(std::vector<std::string> vertex_labels,
                                 std::vector<std::array<int, 2>> edges,
                                 std::vector<std::array<int, 3>> triangles)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)),
      triangles_(std::move(triangles)) {
    const int n = vertex_count();
    if (n < 1) throw std::invalid_argument("triangulation needs at least one vertex");

    for (auto& e : edges_) {
        e = sorted2(e);
        if (e[0] < 0 || e[1] >= n || e[0] == e[1])
            throw std::invalid_argument("invalid edge");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");

    for (auto& t : triangles_) {
        t = sorted3(t);
        if (t[0] < 0 || t[2] >= n || t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("invalid triangle");
    }
    std::sort(triangles_.begin(), triangles_.end());
    if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        throw std::invalid_argument("duplicate triangle");

    for (const auto& t : triangles_) {
        const std::array<std::array<int, 2>, 3> sides = {
            {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& s : sides)
            if (!std::binary_search(edges_.begin(), edges_.end(), s))
                throw std::invalid_argument("triangle has a missing edge");
    }
}

Triangulation2D Triangulation2D::from_triangles(std::vector<std::string> vertex_labels,
                                                std::vector<std::array<int, 3>> triangles) {
    std::set<std::array<int, 2>> edges;
    for (auto t : triangles) {
        t = sorted3(t);
        edges.insert({t[0], t[1]});
        edges.insert({t[0], t[2]});
        edges.insert({t[1], t[2]});
    }
    return Triangulation2D(std::move(vertex_labels),
                           std::vector<std::array<int, 2>>(edges.begin(), edges.end()),
                           std::move(triangles));
}

bool Triangulation2D::admissible(std::string* why) const {
    std::vector<char> vertex_covered(vertex_count(), 0);
    std::set<std::array<int, 2>> edge_covered;
    for (const auto& t : triangles_) {
        for (int v : t) vertex_covered[v] = 1;
        edge_covered.insert({t[0], t[1]});
        edge_covered.insert({t[0], t[2]});
        edge_covered.insert({t[1], t[2]});
    }
    for (int v = 0; v < vertex_count(); ++v)
        if (!vertex_covered[v]) {
            if (why) *why = "vertex " + labels_[v] + " lies in no triangle";
            return false;
        }
    for (const auto& e : edges_)
        if (!edge_covered.count(e)) {
            if (why)
                *why = "edge " + labels_[e[0]] + "-" + labels_[e[1]] + " lies in no triangle";
            return false;
        }
    return true;
}

std::vector<std::string> Triangulation2D::simplex_labels() const {
    std::vector<std::string> out = labels_;
    out.reserve(simplex_count());
    for (const auto& e : edges_) out.push_back(labels_[e[0]] + "-" + labels_[e[1]]);
    for (const auto& t : triangles_)
        out.push_back(labels_[t[0]] + "-" + labels_[t[1]] + "-" + labels_[t[2]]);
    return out;
}

std::vector<Flag> flags_of(const Triangulation2D& tri) {
    std::vector<Flag> out;
    out.reserve(tri.triangle_count() * 6);
    const auto& edges = tri.edges();
    for (int ti = 0; ti < tri.triangle_count(); ++ti) {
        const auto& t = tri.triangles()[ti];
        const std::array<std::array<int, 2>, 3> sides = {
            {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
        for (const auto& s : sides) {
            const int ei = static_cast<int>(
                std::lower_bound(edges.begin(), edges.end(), s) - edges.begin());
            for (int v : s) out.push_back({v, ei, ti});
        }
    }
    return out;
}

RealizationParams::RealizationParams(Scalar k_, Scalar u_, Scalar v_)
    : k(std::move(k_)), u(std::move(u_)), v(std::move(v_)) {
    if (k.mode() != u.mode() || k.mode() != v.mode())
        throw std::invalid_argument("realization parameters mix scalar modes");
    const Scalar zero = Scalar::zero(k.mode());
    const Scalar half_k =
        k.is_exact() ? Scalar::exact(k.rational() / 2) : Scalar::real(k.as_double() / 2);
    if (!(zero < k) || !(half_k < u && u < k) || !(half_k < v && v < k))
        throw std::invalid_argument("realization parameters require k > 0 and u, v in (k/2, k)");
}

RealizationParams RealizationParams::defaults() {
    return RealizationParams(Scalar::exact(1), Scalar::exact(3, 5), Scalar::exact(7, 10));
}

GapSpace realize(const Triangulation2D& tri, const RealizationParams& params) {
    std::string why;
    if (!tri.admissible(&why))
        throw std::invalid_argument("triangulation is not admissible: " + why);

    const int nv = tri.vertex_count();
    const int ne = tri.edge_count();
    const int nt = tri.triangle_count();
    const int n = nv + ne + nt;
    const Scalar zero = Scalar::zero(params.k.mode());
    const Scalar uv = params.u + params.v;

    auto vertex_in_edge = [&](int v, int e) {
        const auto& ed = tri.edges()[e];
        return ed[0] == v || ed[1] == v;
    };
    auto vertex_in_triangle = [&](int v, int t) {
        const auto& tr = tri.triangles()[t];
        return tr[0] == v || tr[1] == v || tr[2] == v;
    };
    auto edge_in_triangle = [&](int e, int t) {
        const auto& ed = tri.edges()[e];
        return vertex_in_triangle(ed[0], t) && vertex_in_triangle(ed[1], t);
    };

    std::vector<std::vector<Scalar>> gaps(n, std::vector<Scalar>(n, zero));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Scalar d = params.k;  // incomparable pairs
            if (i < nv && j >= nv && j < nv + ne) {
                if (vertex_in_edge(i, j - nv)) d = params.u;
            } else if (i < nv && j >= nv + ne) {
                if (vertex_in_triangle(i, j - nv - ne)) d = uv;
            } else if (i >= nv && i < nv + ne && j >= nv + ne) {
                if (edge_in_triangle(i - nv, j - nv - ne)) d = params.v;
            }
            gaps[i][j] = d;
            gaps[j][i] = std::move(d);
        }

    return GapSpace(std::move(gaps), tri.simplex_labels(),
                    params.k.is_exact() ? 0.0 : GapSpace::kDefaultTolerance, Trust::verify,
                    "realize(V=" + std::to_string(nv) + ",E=" + std::to_string(ne) +
                        ",T=" + std::to_string(nt) + ")");
}

RealizationReport verify_realization(const GapSpace& space, const Triangulation2D& tri) {
    RealizationReport report;
    const int nv = tri.vertex_count();
    const int ne = tri.edge_count();

    if (space.size() != static_cast<int>(tri.simplex_count())) {
        report.message = "point count does not match the simplex count";
        return report;
    }

    const StringSet strings = enumerate_eps_strings(space, Scalar::zero(space.mode()));

    std::set<std::vector<int>> expected;
    for (const Flag& f : flags_of(tri)) {
        std::vector<int> t = {f.vertex, nv + f.edge, nv + ne + f.triangle};
        std::sort(t.begin(), t.end());
        expected.insert(std::move(t));
    }
    report.flag_count = expected.size();

    std::set<std::vector<int>> found;
    std::size_t longer = 0;
    for (const auto& [tuple, rec] : strings) {
        if (tuple.size() == 3) found.insert(tuple);
        if (tuple.size() > 3) ++longer;
    }
    report.three_string_count = found.size();
    report.three_strings_match_flags = found == expected;
    report.no_longer_strings = longer == 0;

    report.edge_is_middle = true;
    for (const auto& tuple : found) {
        for (const OrderedString& os : direct_orders(space, tuple)) {
            const int mid = os.order[1];
            if (mid < nv || mid >= nv + ne) {
                report.edge_is_middle = false;
                break;
            }
        }
        if (!report.edge_is_middle) break;
    }

    // Canonical bijection: point i of the realization is vertex i of the
    // subdivision, so the complexes must agree dimension by dimension.
    const Triangulation2D subdivision = barycentric_subdivision(tri);
    const StringComplex complex = build_complex(strings, space.labels());
    bool iso = complex.dimension() == 2;
    if (iso) {
        const auto& verts = complex.simplices(0);
        iso = static_cast<int>(verts.size()) == space.size();
        if (iso) {
            std::vector<std::vector<int>> sub_edges, sub_tris;
            for (const auto& e : subdivision.edges()) sub_edges.push_back({e[0], e[1]});
            for (const auto& t : subdivision.triangles()) sub_tris.push_back({t[0], t[1], t[2]});
            iso = complex.simplices(1) == sub_edges && complex.simplices(2) == sub_tris;
        }
    }
    report.isomorphic_to_subdivision = iso;

    report.ok = report.three_strings_match_flags && report.edge_is_middle &&
                report.no_longer_strings && report.isomorphic_to_subdivision;
    report.message = report.ok
                         ? "verified: " + std::to_string(report.flag_count) +
                               " flags, isomorphic to barycentric subdivision"
                         : "verification failed";
    return report;
}

Triangulation2D barycentric_subdivision(const Triangulation2D& tri) {
    const int nv = tri.vertex_count();
    const int ne = tri.edge_count();

    std::vector<std::array<int, 2>> edges;
    for (int e = 0; e < ne; ++e)
        for (int v : tri.edges()[e]) edges.push_back(sorted2({v, nv + e}));
    for (int t = 0; t < tri.triangle_count(); ++t)
        for (int v : tri.triangles()[t]) edges.push_back(sorted2({v, nv + ne + t}));
    for (const Flag& f : flags_of(tri))
        edges.push_back(sorted2({nv + f.edge, nv + ne + f.triangle}));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::array<int, 3>> triangles;
    for (const Flag& f : flags_of(tri))
        triangles.push_back(sorted3({f.vertex, nv + f.edge, nv + ne + f.triangle}));

    return Triangulation2D(tri.simplex_labels(), std::move(edges), std::move(triangles));
}

namespace {

Triangulation2D from_face_list(int nv, std::vector<std::array<int, 3>> faces) {
    std::vector<std::string> labels;
    labels.reserve(nv);
    for (int i = 0; i < nv; ++i) labels.push_back(std::to_string(i));
    return Triangulation2D::from_triangles(std::move(labels), std::move(faces));
}

}  // namespace

Triangulation2D surface_library(const std::string& name) {
    if (name == "sphere") {
        return from_face_list(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    }
    if (name == "torus") {
        // The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
        std::vector<std::array<int, 3>> faces;
        for (int i = 0; i < 7; ++i) {
            faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
            faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return from_face_list(7, std::move(faces));
    }
    if (name == "klein") {
        // 3x3 grid quotient of the square, one side pair glued with a flip.
        return from_face_list(
            9, {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3}, {2, 3, 5},
                {3, 4, 7}, {3, 7, 6}, {4, 5, 8}, {4, 8, 7}, {5, 3, 6}, {5, 6, 8},
                {6, 7, 2}, {6, 2, 0}, {7, 8, 1}, {7, 1, 2}, {8, 6, 0}, {8, 0, 1}});
    }
    if (name == "rp2") {
        // Antipodal quotient of the icosahedron: 6 vertices, 10 faces.
        return from_face_list(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                  {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
    }
    if (name == "disk") {
        return from_face_list(3, {{0, 1, 2}});
    }
    if (name == "cylinder") {
        return from_face_list(6, {{0, 1, 4}, {0, 4, 3}, {1, 2, 5}, {1, 5, 4}, {2, 0, 3},
                                  {2, 3, 5}});
    }
    if (name == "moebius") {
        return from_face_list(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
    }
    if (name == "two-spheres") {
        return from_face_list(8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                  {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
    }
    throw std::invalid_argument("unknown surface: " + name);
}

GapSpace sphere_four_points() {
    return circle_arc_metric(
        {Scalar::exact(0), Scalar::exact(2), Scalar::exact(6), Scalar::exact(8)},
        Scalar::exact(12));
}

SmallSphereSearch search_small_sphere_spaces(int grid_max) {
    if (grid_max < 2) throw std::invalid_argument("grid_max must be at least 2");
    SmallSphereSearch out;

    auto check = [&](const GapSpace& space) {
        ++out.spaces_examined;
        const StringSet strings = enumerate_eps_strings(space, Scalar::zero(space.mode()));
        const StringComplex complex = build_complex(strings, space.labels());
        const HomologyResult h = homology(complex, Coefficients::mod2);
        if (h.betti.size() == 3 && h.betti[0] == 1 && h.betti[1] == 0 && h.betti[2] == 1)
            out.sphere_found = true;
    };

    // 1- and 2-point spaces have no 3-element subsets, hence empty
    // complexes; a single representative of each suffices.
    check(uniform_metric(1));
    check(uniform_metric(2));

    // 3-point metric spaces: up to relabeling, distances a <= b <= c with
    // the triangle inequality c <= a + b. The complex only depends on
    // whether c = a + b, and the grid hits both cases.
    for (int a = 1; a <= grid_max; ++a)
        for (int b = a; b <= grid_max; ++b)
            for (int c = b; c <= std::min(a + b, grid_max); ++c) {
                std::vector<std::vector<Scalar>> gaps(3, std::vector<Scalar>(3, Scalar::exact(0)));
                gaps[0][1] = gaps[1][0] = Scalar::exact(a);
                gaps[0][2] = gaps[2][0] = Scalar::exact(b);
                gaps[1][2] = gaps[2][1] = Scalar::exact(c);
                check(GapSpace(std::move(gaps), {}, 0.0, Trust::verify, "grid"));
            }
    return out;
}

}  // namespace stringcx
