#pragma once

#include "stringcx/complex.hpp"
#include "stringcx/gap_space.hpp"

#include <array>
#include <string>
#include <vector>

namespace stringcx {

/// A finite abstract 2-dimensional triangulation: vertices, edges as sorted
/// index pairs, triangles as sorted index triples. Every triangle's edges
/// must be listed. Edge and triangle lists are kept lexicographically
/// sorted, which fixes the point order of realizations and subdivisions.
class Triangulation2D {
public:
    Triangulation2D(std::vector<std::string> vertex_labels,
                    std::vector<std::array<int, 2>> edges,
                    std::vector<std::array<int, 3>> triangles);

    /// Convenience constructor that infers the edge list from the triangles.
    static Triangulation2D from_triangles(std::vector<std::string> vertex_labels,
                                          std::vector<std::array<int, 3>> triangles);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }
    std::size_t simplex_count() const {
        return labels_.size() + edges_.size() + triangles_.size();
    }

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    /// Every vertex is a vertex of some triangle and every edge is an edge
    /// of some triangle (the hypothesis of the realization construction).
    bool admissible(std::string* why = nullptr) const;

    /// Labels for all simplices in realization point order: vertices, then
    /// edges ("a-b"), then triangles ("a-b-c").
    std::vector<std::string> simplex_labels() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> triangles_;
};

/// An incidence chain vertex < edge < triangle, by list indices. The flags
/// are in bijection with the 2-simplices of the barycentric subdivision.
struct Flag {
    int vertex = 0;
    int edge = 0;
    int triangle = 0;
};

std::vector<Flag> flags_of(const Triangulation2D& tri);

/// Distances used by the realization: k for incomparable simplex pairs,
/// u for vertex-in-edge, v for edge-in-triangle, u+v for vertex-in-triangle.
/// Requires k > 0 and u, v strictly inside (k/2, k); u = v is allowed.
struct RealizationParams {
    Scalar k, u, v;
    RealizationParams(Scalar k_, Scalar u_, Scalar v_);
    static RealizationParams defaults();  // exact 1, 3/5, 7/10
};

/// The metric space whose points are the simplices of an admissible
/// triangulation, with the four-value metric above. Its string complex is
/// the barycentric subdivision of the input. Point order: vertices, then
/// edges, then triangles, as stored in the triangulation.
GapSpace realize(const Triangulation2D& tri,
                 const RealizationParams& params = RealizationParams::defaults());

struct RealizationReport {
    bool ok = false;
    bool three_strings_match_flags = false;
    bool edge_is_middle = false;       // every direct order holds the edge in the middle
    bool no_longer_strings = false;    // no strings of length > 3
    bool isomorphic_to_subdivision = false;
    std::size_t flag_count = 0;
    std::size_t three_string_count = 0;
    std::string message;
};

/// Checks a realized space against its triangulation: the 3-strings are
/// exactly the flags (edge as the middle term of every direct order), no
/// longer strings exist, and the string complex equals the barycentric
/// subdivision under the canonical simplex-to-point bijection.
RealizationReport verify_realization(const GapSpace& space, const Triangulation2D& tri);

/// Vertices of the subdivision are the simplices of the input; edges are
/// the incident simplex pairs; triangles are the flags.
Triangulation2D barycentric_subdivision(const Triangulation2D& tri);

/// Small admissible triangulations by name: sphere, torus, klein, rp2,
/// disk, cylinder, moebius, two-spheres.
Triangulation2D surface_library(const std::string& name);

/// The 4-point shortest-arc space whose string complex is the boundary of a
/// 3-simplex, i.e. a 2-sphere. No smaller metric space achieves this.
GapSpace sphere_four_points();

struct SmallSphereSearch {
    bool sphere_found = false;
    long spaces_examined = 0;
};

/// Case enumeration over metric spaces with at most 3 points, confirming
/// that none has a string complex with mod-2 Betti numbers (1, 0, 1).
/// Spaces with fewer than 3 points have empty complexes. A 3-point space
/// with distances a <= b <= c has a string exactly when c = a + b, and then
/// its complex is a full closed triangle; the integer grid up to grid_max
/// hits both cases in every combination.
SmallSphereSearch search_small_sphere_spaces(int grid_max = 6);

}  // namespace stringcx
