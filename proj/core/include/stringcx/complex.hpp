#pragma once

#include "stringcx/gap_space.hpp"
#include "stringcx/strings.hpp"

#include <map>
#include <string>
#include <vector>

namespace stringcx {

/// A finite abstract simplicial complex with a birth value per simplex.
/// Simplices are canonical sorted vertex tuples, grouped by dimension and
/// listed lexicographically; faces are always present and never born later
/// than their cofaces. Immutable after construction.
class StringComplex {
public:
    StringComplex() = default;

    /// Validates face closure and birth monotonicity; throws
    /// std::invalid_argument on a violation (an enumerator bug upstream).
    static StringComplex from_simplices(std::map<std::vector<int>, Scalar> simplices,
                                        std::vector<std::string> vertex_labels,
                                        ScalarMode mode, double tolerance);

    /// Dimension of the complex, -1 when empty.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t simplex_count() const;

    /// Simplices of one dimension, lexicographically sorted; an empty list
    /// for out-of-range dimensions.
    const std::vector<std::vector<int>>& simplices(int dim) const;
    /// Birth values parallel to simplices(dim).
    const std::vector<Scalar>& births(int dim) const;

    bool contains(const std::vector<int>& simplex) const;

    const std::vector<std::string>& vertex_labels() const { return labels_; }
    ScalarMode mode() const { return mode_; }
    double tolerance() const { return tolerance_; }

private:
    std::vector<std::vector<std::vector<int>>> by_dim_;
    std::vector<std::vector<Scalar>> births_;
    std::vector<std::string> labels_;
    ScalarMode mode_ = ScalarMode::exact;
    double tolerance_ = 0.0;
};

/// The complex whose (k-1)-simplices are the k-element members of the set;
/// births carry over. Throws if the set is not downward closed.
StringComplex build_complex(const StringSet& strings,
                            std::vector<std::string> vertex_labels = {});

long euler_characteristic(const StringComplex& complex);

struct ComponentLabeling {
    int count = 0;
    /// Vertex index -> component id (0-based, in order of smallest vertex).
    /// Points of the ambient space that are not complex vertices are absent.
    std::map<int, int> component_of_vertex;
};

/// Connected components of the 1-skeleton.
ComponentLabeling connected_components(const StringComplex& complex);

enum class Coefficients { mod2, integer };

struct HomologyResult {
    /// Mod-2 Betti numbers, degrees 0..dimension.
    std::vector<long> betti;
    /// Integer mode only: free ranks and torsion coefficients per degree.
    std::vector<long> ranks;
    std::vector<std::vector<BigInt>> torsion;
    bool integer_mode = false;
};

/// Simplicial homology. Mod-2 Betti numbers come from GF(2) boundary ranks;
/// integer mode adds free ranks and torsion via Smith normal form of the
/// boundary matrices with orientation signs from the canonical vertex order.
HomologyResult homology(const StringComplex& complex, Coefficients coefficients);

struct EndpointSubcomplex {
    StringComplex complex;
    /// The strings with the requested endpoints, before downward closure.
    std::vector<std::vector<int>> generators;
};

/// Subcomplex spanned by the strings (length >= 2) whose endpoints are
/// {x, y}, closed downward so the result is a genuine complex. Requires a
/// metric space and x != y.
EndpointSubcomplex endpoint_subcomplex(const GapSpace& space, const StringSet& strings,
                                       int x, int y);

}  // namespace stringcx
