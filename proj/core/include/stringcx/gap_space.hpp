#pragma once

#include "stringcx/scalar.hpp"

#include <string>
#include <vector>

namespace stringcx {

/// One failed triangle inequality: gap(x,y) + gap(y,z) < gap(x,z).
struct Violation {
    int x = 0, y = 0, z = 0;
    Scalar lhs;  // gap(x,y) + gap(y,z)
    Scalar rhs;  // gap(x,z)
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Scans every ordered triple of the matrix for triangle-inequality
/// violations. The n-gon inequality for longer tuples follows from the
/// pairwise triangles and is not checked separately.
///
/// Throws std::invalid_argument for a non-square matrix, mixed scalar
/// modes, or a negative tolerance.
ValidationReport validate_gaps(const std::vector<std::vector<Scalar>>& gaps,
                               double tolerance = 0.0);

/// Whether the constructor runs the O(n^3) triangle scan. Generators whose
/// matrices satisfy the triangle inequality by construction skip it; the
/// choice is recorded in the provenance string.
enum class Trust { verify, by_construction };

/// A finite gap space: a point set with a gap matrix that satisfies the
/// triangle inequality. Gaps may be asymmetric or negative; the metric flag
/// marks spaces that are symmetric, nonnegative, and zero exactly on the
/// diagonal. Immutable after construction.
class GapSpace {
public:
    static constexpr double kDefaultTolerance = 1e-9;

    /// Throws std::invalid_argument if the matrix is not square, mixes
    /// scalar modes, has a negative tolerance, or (with Trust::verify)
    /// fails the triangle scan.
    GapSpace(std::vector<std::vector<Scalar>> gaps,
             std::vector<std::string> labels = {},
             double tolerance = kDefaultTolerance,
             Trust trust = Trust::verify,
             std::string provenance = {});

    int size() const { return n_; }
    const Scalar& gap(int x, int y) const { return gaps_[x][y]; }
    const std::vector<std::vector<Scalar>>& gaps() const { return gaps_; }

    ScalarMode mode() const { return mode_; }
    /// Relative comparison tolerance; always 0 in exact mode.
    double tolerance() const { return tolerance_; }

    bool symmetric() const { return symmetric_; }
    bool metric() const { return metric_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& provenance() const { return provenance_; }
    bool validated_by_scan() const { return validated_by_scan_; }

private:
    int n_;
    std::vector<std::vector<Scalar>> gaps_;
    std::vector<std::string> labels_;
    ScalarMode mode_;
    double tolerance_;
    bool symmetric_;
    bool metric_;
    bool validated_by_scan_;
    std::string provenance_;
};

/// True iff the space is symmetric, nonnegative, and gap(x,y) = 0 exactly
/// when x = y (up to the space tolerance in real mode).
bool is_metric(const GapSpace& space);

}  // namespace stringcx
