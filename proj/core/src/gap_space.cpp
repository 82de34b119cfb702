#include "stringcx/gap_space.hpp"

namespace stringcx {

namespace {

void check_matrix_shape(const std::vector<std::vector<Scalar>>& gaps) {
    const std::size_t n = gaps.size();
    if (n == 0) throw std::invalid_argument("gap matrix must have at least one point");
    for (const auto& row : gaps)
        if (row.size() != n) throw std::invalid_argument("gap matrix must be square");
    const ScalarMode mode = gaps[0][0].mode();
    for (const auto& row : gaps)
        for (const auto& v : row)
            if (v.mode() != mode)
                throw std::invalid_argument("gap matrix mixes exact and real scalars");
}

}  // namespace

ValidationReport validate_gaps(const std::vector<std::vector<Scalar>>& gaps, double tolerance) {
    if (tolerance < 0) throw std::invalid_argument("tolerance must be nonnegative");
    check_matrix_shape(gaps);
    const int n = static_cast<int>(gaps.size());

    ValidationReport report;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Scalar lhs = gaps[x][y] + gaps[y][z];
                const Scalar& rhs = gaps[x][z];
                if (!leq(rhs, lhs, tolerance))
                    report.violations.push_back({x, y, z, lhs, rhs});
            }
    report.ok = report.violations.empty();
    return report;
}

GapSpace::GapSpace(std::vector<std::vector<Scalar>> gaps, std::vector<std::string> labels,
                   double tolerance, Trust trust, std::string provenance)
    : gaps_(std::move(gaps)), labels_(std::move(labels)), provenance_(std::move(provenance)) {
    check_matrix_shape(gaps_);
    n_ = static_cast<int>(gaps_.size());
    mode_ = gaps_[0][0].mode();
    if (tolerance < 0) throw std::invalid_argument("tolerance must be nonnegative");
    tolerance_ = mode_ == ScalarMode::exact ? 0.0 : tolerance;

    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    } else if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("label count does not match point count");
    }

    validated_by_scan_ = trust == Trust::verify;
    if (validated_by_scan_) {
        ValidationReport report = validate_gaps(gaps_, tolerance_);
        if (!report.ok) {
            const Violation& v = report.violations.front();
            throw std::invalid_argument(
                "triangle inequality violated at (" + std::to_string(v.x) + "," +
                std::to_string(v.y) + "," + std::to_string(v.z) + "): " + v.lhs.str() + " < " +
                v.rhs.str() + " (" + std::to_string(report.violations.size()) + " violation(s))");
        }
    }

    const Scalar zero = Scalar::zero(mode_);
    symmetric_ = true;
    for (int x = 0; x < n_ && symmetric_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (!approx_eq(gaps_[x][y], gaps_[y][x], tolerance_)) {
                symmetric_ = false;
                break;
            }

    metric_ = symmetric_;
    for (int x = 0; x < n_ && metric_; ++x)
        for (int y = 0; y < n_; ++y) {
            const bool is_zero = approx_eq(gaps_[x][y], zero, tolerance_);
            if (x == y ? !is_zero : (is_zero || lt(gaps_[x][y], zero, tolerance_))) {
                metric_ = false;
                break;
            }
        }
}

bool is_metric(const GapSpace& space) { return space.metric(); }

}  // namespace stringcx
