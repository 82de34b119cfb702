#pragma once

#include "stringcx/complex.hpp"
#include "stringcx/construct.hpp"
#include "stringcx/gap_space.hpp"
#include "stringcx/persistence.hpp"
#include "stringcx/strings.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace stringcx {

/// Structurally malformed input (bad JSON, wrong field types, ragged CSV).
/// Distinct from domain errors such as a failed triangle scan.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gap matrix file contents before validation, so callers can report every
/// triangle violation instead of failing on the first.
struct GapFileData {
    std::vector<std::string> labels;
    std::vector<std::vector<Scalar>> gaps;
    ScalarMode mode = ScalarMode::exact;
    double tolerance = GapSpace::kDefaultTolerance;
};

// Gap spaces. JSON: {"labels": [...], "mode": "exact"|"float",
// "tolerance": t, "gaps": [[...]]} with exact entries as integers or
// "p/q"/decimal strings. CSV: a header row of labels, then the square
// matrix; cells may be integers, decimals, or "p/q".
std::string to_json(const GapSpace& space);
GapFileData gap_data_from_json(const std::string& text);
GapSpace gap_space_from_json(const std::string& text);
std::string to_csv(const GapSpace& space);
GapFileData gap_data_from_csv(const std::string& text,
                              std::optional<ScalarMode> mode = std::nullopt,
                              double tolerance = GapSpace::kDefaultTolerance);
GapSpace gap_space_from_csv(const std::string& text,
                            std::optional<ScalarMode> mode = std::nullopt,
                            double tolerance = GapSpace::kDefaultTolerance);

// String sets: a JSON list of {"set": [...], "birth": s, "witness": [...]}
// sorted lexicographically by set.
std::string to_json(const StringSet& strings);
StringSet string_set_from_json(const std::string& text);

// Complexes: {"dim": d, "simplices": {"0": [[...]], ...}, "birth": {...}}
// with birth keyed by comma-joined vertex tuples. The face-list form lists
// one simplex per line for interchange with other tools.
std::string to_json(const StringComplex& complex);
StringComplex complex_from_json(const std::string& text);
std::string to_face_list(const StringComplex& complex);

// Barcodes: a JSON list of {"degree": k, "birth": s, "death": s|"inf"}, or
// plain text with one "degree birth death" line per interval.
std::string to_json(const Barcode& barcode);
std::string to_text(const Barcode& barcode);

// Triangulations: {"vertices": [...], "edges": [[a,b]], "triangles":
// [[a,b,c]]}; a missing "edges" field infers the edges of the triangles.
// OFF files carry faces only (coordinates are ignored on input and written
// as zeros).
std::string to_json(const Triangulation2D& tri);
Triangulation2D triangulation_from_json(const std::string& text);
std::string to_off(const Triangulation2D& tri);
Triangulation2D triangulation_from_off(const std::string& text);

std::string read_file(const std::filesystem::path& path);
/// Writes via a sibling temp file and rename, so readers never observe a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace stringcx
