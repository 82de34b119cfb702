#pragma once

#include "stringcx/complex.hpp"
#include "stringcx/gap_space.hpp"

#include <optional>
#include <vector>

namespace stringcx {

struct FiltrationEntry {
    std::vector<int> vertices;  // canonical sorted tuple
    Scalar birth;
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/// Every subset with a finite birth (up to the dimension cap), sorted by
/// (birth, dimension, tuple) so faces always precede cofaces.
class Filtration {
public:
    Filtration() = default;
    Filtration(std::vector<FiltrationEntry> entries, ScalarMode mode, double tolerance,
               int point_count)
        : entries_(std::move(entries)), mode_(mode), tolerance_(tolerance),
          point_count_(point_count) {}

    const std::vector<FiltrationEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    ScalarMode mode() const { return mode_; }
    double tolerance() const { return tolerance_; }
    int point_count() const { return point_count_; }

private:
    std::vector<FiltrationEntry> entries_;
    ScalarMode mode_ = ScalarMode::exact;
    double tolerance_ = 0.0;
    int point_count_ = 0;
};

/// Assembles the filtration of a gap space: every subset of size up to
/// max_dim + 1 whose birth is finite enters at its birth value. Vertices and
/// pairs inherit births from their cheapest containing triple, so in spaces
/// with fewer than 3 points the filtration is empty. The default max_dim is
/// n - 1; note the subset count is then 2^n - 1.
Filtration build_filtration(const GapSpace& space, int max_dim = -1);

struct Interval {
    int degree = 0;
    Scalar birth;
    std::optional<Scalar> death;  // absent: essential class
};

struct Barcode {
    std::vector<Interval> intervals;
    ScalarMode mode = ScalarMode::exact;
    double tolerance = 0.0;
    /// Zero-length intervals suppressed from `intervals` (counted so callers
    /// can audit equal-birth batches).
    long suppressed_zero_length = 0;
};

/// Secondary sort key among simplices of equal birth and dimension. Any
/// choice keeps faces before cofaces; the barcode does not depend on it.
enum class TieBreak { lex, revlex };

struct BarcodeOptions {
    bool keep_zero_length = false;
    TieBreak tie_break = TieBreak::lex;
};

/// Persistent homology over Z/2 by standard boundary-matrix reduction in
/// filtration order. Essential classes get an absent death. Throws
/// std::invalid_argument if some face does not precede a coface.
Barcode barcode(const Filtration& filtration, const BarcodeOptions& options = {});

/// Number of intervals [birth, death) of the given degree containing each
/// grid value.
std::vector<std::pair<Scalar, long>> betti_curve(const Barcode& barcode, int degree,
                                                 const std::vector<Scalar>& grid);

}  // namespace stringcx
