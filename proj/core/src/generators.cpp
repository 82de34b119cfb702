#include "stringcx/generators.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <string>

namespace stringcx {

namespace {

/// Reduces r into [0, modulus) for exact rationals.
Rational rational_mod(const Rational& r, const Rational& modulus) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Rational q = r / modulus;
    BigInt floor_q = numerator(q) / denominator(q);
    if (q < 0 && floor_q * denominator(q) != numerator(q)) floor_q -= 1;
    Rational reduced = r - Rational(floor_q) * modulus;
    if (reduced < 0) reduced += modulus;  // guard against sign edge cases
    return reduced;
}

double euclid(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

GapSpace uniform_metric(int n) {
    if (n < 1) throw std::invalid_argument("uniform_metric: n must be >= 1");
    std::vector<std::vector<Scalar>> gaps(n, std::vector<Scalar>(n, Scalar::exact(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) gaps[i][j] = Scalar::exact(1);
    return GapSpace(std::move(gaps), {}, 0.0, Trust::by_construction,
                    "uniform_metric(" + std::to_string(n) + ")");
}

GapSpace collinear_points(const std::vector<Scalar>& values) {
    const int n = static_cast<int>(values.size());
    if (n < 1) throw std::invalid_argument("collinear_points: need at least one value");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (values[i] == values[j])
                throw std::invalid_argument("collinear_points: values must be pairwise distinct");
    std::vector<std::vector<Scalar>> gaps(n);
    for (int i = 0; i < n; ++i) {
        gaps[i].reserve(n);
        for (int j = 0; j < n; ++j) gaps[i].push_back((values[i] - values[j]).abs());
    }
    return GapSpace(std::move(gaps), {}, GapSpace::kDefaultTolerance, Trust::by_construction,
                    "collinear_points(n=" + std::to_string(n) + ")");
}

GapSpace two_parallel_lines(int m, int n, const Scalar& separation, const Scalar& spacing,
                            double tolerance) {
    if (m < 3 || n < 3)
        throw std::invalid_argument("two_parallel_lines: both lines need at least 3 points");
    const double sep = separation.as_double();
    const double sp = spacing.as_double();
    if (!(sep > 0) || !(sp > 0))
        throw std::invalid_argument("two_parallel_lines: separation and spacing must be positive");

    std::vector<std::array<double, 2>> pts;
    pts.reserve(m + n);
    for (int i = 0; i < m; ++i) pts.push_back({i * sp, 0.0});
    for (int j = 0; j < n; ++j) pts.push_back({j * sp, sep});

    const int total = m + n;
    std::vector<std::vector<Scalar>> gaps(total, std::vector<Scalar>(total, Scalar::real(0.0)));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) gaps[i][j] = Scalar::real(euclid(pts[i], pts[j]));
    return GapSpace(std::move(gaps), {}, tolerance, Trust::by_construction,
                    "two_parallel_lines(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

GapSpace polygon_points(const std::vector<int>& edge_point_counts,
                        const std::vector<std::array<double, 2>>& vertices, double tolerance) {
    const int k = static_cast<int>(vertices.size());
    if (k < 3) throw std::invalid_argument("polygon_points: need at least 3 vertices");
    if (static_cast<int>(edge_point_counts.size()) != k)
        throw std::invalid_argument("polygon_points: one point count per edge required");
    for (int c : edge_point_counts)
        if (c < 3)
            throw std::invalid_argument(
                "polygon_points: each edge needs its endpoints plus an interior point");

    // Strict convexity: all consecutive cross products share a sign and none
    // vanishes (interior angles < 180 degrees, no repeated vertices).
    int sign = 0;
    for (int i = 0; i < k; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % k];
        const auto& c = vertices[(i + 2) % k];
        const double cross =
            (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if (cross == 0) throw std::invalid_argument("polygon_points: polygon is not strictly convex");
        const int s = cross > 0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            throw std::invalid_argument("polygon_points: polygon is not convex");
    }

    // Edge i contributes its start vertex and its interior points; the end
    // vertex opens the next edge.
    std::vector<std::array<double, 2>> pts;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % k];
        pts.push_back(a);
        labels.push_back("v" + std::to_string(i));
        const int c = edge_point_counts[i];
        for (int j = 1; j <= c - 2; ++j) {
            const double t = static_cast<double>(j) / (c - 1);
            pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
            labels.push_back("e" + std::to_string(i) + "p" + std::to_string(j));
        }
    }

    const int total = static_cast<int>(pts.size());
    std::vector<std::vector<Scalar>> gaps(total, std::vector<Scalar>(total, Scalar::real(0.0)));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) gaps[i][j] = Scalar::real(euclid(pts[i], pts[j]));
    return GapSpace(std::move(gaps), std::move(labels), tolerance, Trust::by_construction,
                    "polygon_points(k=" + std::to_string(k) + ")");
}

GapSpace circle_arc_metric(const std::vector<Scalar>& positions, const Scalar& circumference) {
    const int n = static_cast<int>(positions.size());
    if (n < 1) throw std::invalid_argument("circle_arc_metric: need at least one position");
    const bool exact = circumference.is_exact();
    for (const Scalar& p : positions)
        if (p.is_exact() != exact)
            throw std::invalid_argument("circle_arc_metric: positions mix scalar modes");
    if (exact ? circumference.rational() <= 0 : !(circumference.as_double() > 0))
        throw std::invalid_argument("circle_arc_metric: circumference must be positive");

    std::vector<Scalar> reduced;
    reduced.reserve(n);
    for (const Scalar& p : positions) {
        if (exact)
            reduced.push_back(Scalar::exact(rational_mod(p.rational(), circumference.rational())));
        else {
            double r = std::fmod(p.as_double(), circumference.as_double());
            if (r < 0) r += circumference.as_double();
            reduced.push_back(Scalar::real(r));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (reduced[i] == reduced[j])
                throw std::invalid_argument(
                    "circle_arc_metric: positions must be distinct modulo the circumference");

    std::vector<std::vector<Scalar>> gaps(n, std::vector<Scalar>(n, Scalar::zero(exact ? ScalarMode::exact : ScalarMode::real)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar diff = (reduced[i] - reduced[j]).abs();
            Scalar wrap = circumference - diff;
            gaps[i][j] = diff < wrap ? diff : wrap;
        }
    return GapSpace(std::move(gaps), {}, GapSpace::kDefaultTolerance, Trust::by_construction,
                    "circle_arc_metric(n=" + std::to_string(n) + ")");
}

GapSpace digraph_gaps(int nodes, const std::vector<Arc>& arcs) {
    if (nodes < 1) throw std::invalid_argument("digraph_gaps: need at least one node");
    if (arcs.empty() && nodes > 1)
        throw std::invalid_argument("digraph_gaps: graph is not strongly connected");

    ScalarMode mode = arcs.empty() ? ScalarMode::exact : arcs[0].length.mode();
    const Scalar zero = Scalar::zero(mode);

    // Optional-valued distances: absent means unreachable.
    std::vector<std::vector<std::optional<Scalar>>> dist(
        nodes, std::vector<std::optional<Scalar>>(nodes));
    for (int i = 0; i < nodes; ++i) dist[i][i] = zero;
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= nodes || a.to < 0 || a.to >= nodes)
            throw std::invalid_argument("digraph_gaps: arc endpoint out of range");
        if (a.length.mode() != mode)
            throw std::invalid_argument("digraph_gaps: arc lengths mix scalar modes");
        if (a.length < zero) throw std::invalid_argument("digraph_gaps: negative arc length");
        if (a.from == a.to) continue;
        if (!dist[a.from][a.to] || a.length < *dist[a.from][a.to]) dist[a.from][a.to] = a.length;
    }

    for (int k = 0; k < nodes; ++k)
        for (int i = 0; i < nodes; ++i) {
            if (!dist[i][k]) continue;
            for (int j = 0; j < nodes; ++j) {
                if (!dist[k][j]) continue;
                Scalar via = *dist[i][k] + *dist[k][j];
                if (!dist[i][j] || via < *dist[i][j]) dist[i][j] = via;
            }
        }

    std::vector<std::vector<Scalar>> gaps(nodes, std::vector<Scalar>(nodes, zero));
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j) {
            if (!dist[i][j])
                throw std::invalid_argument("digraph_gaps: graph is not strongly connected");
            gaps[i][j] = *dist[i][j];
        }
    // Shortest-path lengths compose, so the triangle inequality holds by
    // construction.
    return GapSpace(std::move(gaps), {}, GapSpace::kDefaultTolerance, Trust::by_construction,
                    "digraph_gaps(nodes=" + std::to_string(nodes) + ")");
}

}  // namespace stringcx
