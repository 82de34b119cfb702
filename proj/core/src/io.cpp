#include "stringcx/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace stringcx {

namespace {

using ojson = nlohmann::ordered_json;

const BigInt kMaxSafeInteger = BigInt(1) << 53;

ojson scalar_to_json(const Scalar& s) {
    if (!s.is_exact()) return s.as_double();
    const Rational& q = s.rational();
    const BigInt num = boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) == 1 && num >= -kMaxSafeInteger &&
        num <= kMaxSafeInteger)
        return num.convert_to<std::int64_t>();
    return format_rational(q);
}

Scalar scalar_from_json(const ojson& j, ScalarMode mode) {
    try {
        if (mode == ScalarMode::exact) {
            if (j.is_number_integer()) return Scalar::exact(Rational(j.get<std::int64_t>()));
            if (j.is_string()) return Scalar::exact(parse_rational(j.get<std::string>()));
            throw io_error("exact scalars must be integers or rational strings");
        }
        if (j.is_number()) return Scalar::real(j.get<double>());
        if (j.is_string())
            return Scalar::real(static_cast<double>(parse_rational(j.get<std::string>())));
    } catch (const std::invalid_argument& e) {
        throw io_error(e.what());
    }
    throw io_error("scalar value must be a number or a string");
}

/// Exact unless some value is a floating-point number.
ScalarMode infer_mode(const std::vector<const ojson*>& values) {
    for (const ojson* v : values)
        if (v->is_number_float()) return ScalarMode::real;
    return ScalarMode::exact;
}

ojson parse_or_throw(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("invalid JSON: ") + e.what());
    }
}

const ojson& field(const ojson& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw io_error(std::string("missing field \"") + name + "\"");
    return *it;
}

std::vector<int> index_tuple(const ojson& j) {
    if (!j.is_array()) throw io_error("expected an array of indices");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw io_error("indices must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string tuple_key(const std::vector<int>& tuple) {
    std::string key;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(tuple[i]);
    }
    return key;
}

}  // namespace

std::string to_json(const GapSpace& space) {
    ojson j;
    j["labels"] = space.labels();
    j["mode"] = space.mode() == ScalarMode::exact ? "exact" : "float";
    if (space.mode() == ScalarMode::real) j["tolerance"] = space.tolerance();
    ojson rows = ojson::array();
    for (int i = 0; i < space.size(); ++i) {
        ojson row = ojson::array();
        for (int k = 0; k < space.size(); ++k) row.push_back(scalar_to_json(space.gap(i, k)));
        rows.push_back(std::move(row));
    }
    j["gaps"] = std::move(rows);
    return j.dump(2) + "\n";
}

GapFileData gap_data_from_json(const std::string& text) {
    const ojson j = parse_or_throw(text);
    if (!j.is_object()) throw io_error("gap space file must be a JSON object");

    GapFileData data;
    if (auto it = j.find("mode"); it != j.end()) {
        const std::string mode = it->get<std::string>();
        if (mode == "exact")
            data.mode = ScalarMode::exact;
        else if (mode == "float")
            data.mode = ScalarMode::real;
        else
            throw io_error("mode must be \"exact\" or \"float\"");
    }
    if (auto it = j.find("tolerance"); it != j.end()) {
        if (!it->is_number()) throw io_error("tolerance must be a number");
        data.tolerance = it->get<double>();
    }
    const ojson& gaps = field(j, "gaps");
    if (!gaps.is_array() || gaps.empty()) throw io_error("gaps must be a nonempty matrix");
    const std::size_t n = gaps.size();
    for (const auto& row : gaps) {
        if (!row.is_array() || row.size() != n) throw io_error("gaps must be a square matrix");
        std::vector<Scalar> r;
        r.reserve(n);
        for (const auto& cell : row) r.push_back(scalar_from_json(cell, data.mode));
        data.gaps.push_back(std::move(r));
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array() || it->size() != n)
            throw io_error("labels must list one name per point");
        for (const auto& l : *it) data.labels.push_back(l.get<std::string>());
    }
    return data;
}

GapSpace gap_space_from_json(const std::string& text) {
    GapFileData data = gap_data_from_json(text);
    return GapSpace(std::move(data.gaps), std::move(data.labels), data.tolerance, Trust::verify,
                    "file:json");
}

std::string to_csv(const GapSpace& space) {
    std::ostringstream out;
    for (int i = 0; i < space.size(); ++i) {
        if (i) out << ',';
        out << space.labels()[i];
    }
    out << '\n';
    for (int i = 0; i < space.size(); ++i) {
        for (int k = 0; k < space.size(); ++k) {
            if (k) out << ',';
            out << space.gap(i, k).str();
        }
        out << '\n';
    }
    return out.str();
}

GapFileData gap_data_from_csv(const std::string& text, std::optional<ScalarMode> mode,
                              double tolerance) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    if (rows.size() < 2) throw io_error("CSV needs a header row and a square matrix");

    GapFileData data;
    data.labels = rows[0];
    data.mode = mode.value_or(ScalarMode::exact);
    data.tolerance = tolerance;
    const std::size_t n = data.labels.size();
    if (rows.size() != n + 1) throw io_error("CSV matrix row count does not match the header");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw io_error("CSV matrix is not square");
        std::vector<Scalar> r;
        r.reserve(n);
        for (const std::string& cell : rows[i]) {
            try {
                const Rational q = parse_rational(cell);
                r.push_back(data.mode == ScalarMode::exact ? Scalar::exact(q)
                                                           : Scalar::real(static_cast<double>(q)));
            } catch (const std::invalid_argument& e) {
                throw io_error(std::string("bad CSV cell \"") + cell + "\": " + e.what());
            }
        }
        data.gaps.push_back(std::move(r));
    }
    return data;
}

GapSpace gap_space_from_csv(const std::string& text, std::optional<ScalarMode> mode,
                            double tolerance) {
    GapFileData data = gap_data_from_csv(text, mode, tolerance);
    return GapSpace(std::move(data.gaps), std::move(data.labels), data.tolerance, Trust::verify,
                    "file:csv");
}

std::string to_json(const StringSet& strings) {
    ojson out = ojson::array();
    for (const auto& [tuple, rec] : strings) {
        ojson entry;
        entry["set"] = tuple;
        entry["birth"] = scalar_to_json(rec.birth);
        entry["witness"] = rec.witness;
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

StringSet string_set_from_json(const std::string& text) {
    const ojson j = parse_or_throw(text);
    if (!j.is_array()) throw io_error("string set file must be a JSON list");

    std::vector<const ojson*> births;
    for (const auto& entry : j) births.push_back(&field(entry, "birth"));
    const ScalarMode mode = infer_mode(births);

    int point_count = 0;
    for (const auto& entry : j)
        for (const auto& v : field(entry, "set"))
            if (v.is_number_integer()) point_count = std::max(point_count, v.get<int>() + 1);

    StringSet out(mode, mode == ScalarMode::exact ? 0.0 : GapSpace::kDefaultTolerance,
                  point_count);
    for (const auto& entry : j) {
        std::vector<int> tuple = index_tuple(field(entry, "set"));
        std::sort(tuple.begin(), tuple.end());
        std::vector<int> witness = index_tuple(field(entry, "witness"));
        out.insert_min(std::move(tuple), scalar_from_json(field(entry, "birth"), mode),
                       std::move(witness));
    }
    return out;
}

std::string to_json(const StringComplex& complex) {
    ojson j;
    j["dim"] = complex.dimension();
    ojson simplices = ojson::object();
    ojson births = ojson::object();
    for (int d = 0; d <= complex.dimension(); ++d) {
        ojson list = ojson::array();
        for (std::size_t i = 0; i < complex.simplices(d).size(); ++i) {
            const auto& tuple = complex.simplices(d)[i];
            list.push_back(tuple);
            births[tuple_key(tuple)] = scalar_to_json(complex.births(d)[i]);
        }
        simplices[std::to_string(d)] = std::move(list);
    }
    j["simplices"] = std::move(simplices);
    j["birth"] = std::move(births);
    j["labels"] = complex.vertex_labels();
    return j.dump(2) + "\n";
}

StringComplex complex_from_json(const std::string& text) {
    const ojson j = parse_or_throw(text);
    const ojson& simplices = field(j, "simplices");
    const ojson& births = field(j, "birth");
    if (!simplices.is_object() || !births.is_object())
        throw io_error("complex file needs \"simplices\" and \"birth\" objects");

    std::vector<const ojson*> birth_values;
    for (const auto& [key, value] : births.items()) birth_values.push_back(&value);
    const ScalarMode mode = infer_mode(birth_values);

    std::map<std::vector<int>, Scalar> family;
    for (const auto& [dim_key, list] : simplices.items()) {
        if (!list.is_array()) throw io_error("simplex lists must be arrays");
        for (const auto& s : list) {
            std::vector<int> tuple = index_tuple(s);
            std::sort(tuple.begin(), tuple.end());
            auto it = births.find(tuple_key(tuple));
            if (it == births.end())
                throw io_error("missing birth for simplex " + tuple_key(tuple));
            family.emplace(std::move(tuple), scalar_from_json(*it, mode));
        }
    }

    std::vector<std::string> labels;
    if (auto it = j.find("labels"); it != j.end())
        for (const auto& l : *it) labels.push_back(l.get<std::string>());

    try {
        return StringComplex::from_simplices(
            std::move(family), std::move(labels), mode,
            mode == ScalarMode::exact ? 0.0 : GapSpace::kDefaultTolerance);
    } catch (const std::invalid_argument& e) {
        throw io_error(e.what());
    }
}

std::string to_face_list(const StringComplex& complex) {
    std::ostringstream out;
    for (int d = 0; d <= complex.dimension(); ++d)
        for (const auto& tuple : complex.simplices(d)) {
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                if (i) out << ' ';
                out << tuple[i];
            }
            out << '\n';
        }
    return out.str();
}

std::string to_json(const Barcode& barcode) {
    ojson out = ojson::array();
    for (const Interval& iv : barcode.intervals) {
        ojson entry;
        entry["degree"] = iv.degree;
        entry["birth"] = scalar_to_json(iv.birth);
        if (iv.death)
            entry["death"] = scalar_to_json(*iv.death);
        else
            entry["death"] = "inf";
        out.push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

std::string to_text(const Barcode& barcode) {
    std::ostringstream out;
    for (const Interval& iv : barcode.intervals) {
        out << iv.degree << ' ' << iv.birth.str() << ' ';
        if (iv.death)
            out << iv.death->str();
        else
            out << "inf";
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Triangulation2D& tri) {
    ojson j;
    j["vertices"] = tri.vertex_labels();
    ojson edges = ojson::array();
    for (const auto& e : tri.edges()) edges.push_back(std::vector<int>{e[0], e[1]});
    j["edges"] = std::move(edges);
    ojson triangles = ojson::array();
    for (const auto& t : tri.triangles())
        triangles.push_back(std::vector<int>{t[0], t[1], t[2]});
    j["triangles"] = std::move(triangles);
    return j.dump(2) + "\n";
}

Triangulation2D triangulation_from_json(const std::string& text) {
    const ojson j = parse_or_throw(text);
    const ojson& vertices = field(j, "vertices");
    if (!vertices.is_array() || vertices.empty())
        throw io_error("triangulation needs a nonempty vertex list");
    std::vector<std::string> labels;
    for (const auto& v : vertices)
        labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());

    std::vector<std::array<int, 3>> triangles;
    for (const auto& t : field(j, "triangles")) {
        const std::vector<int> tuple = index_tuple(t);
        if (tuple.size() != 3) throw io_error("triangles must have exactly 3 vertices");
        triangles.push_back({tuple[0], tuple[1], tuple[2]});
    }

    try {
        if (auto it = j.find("edges"); it != j.end()) {
            std::vector<std::array<int, 2>> edges;
            for (const auto& e : *it) {
                const std::vector<int> tuple = index_tuple(e);
                if (tuple.size() != 2) throw io_error("edges must have exactly 2 vertices");
                edges.push_back({tuple[0], tuple[1]});
            }
            return Triangulation2D(std::move(labels), std::move(edges), std::move(triangles));
        }
        return Triangulation2D::from_triangles(std::move(labels), std::move(triangles));
    } catch (const std::invalid_argument& e) {
        throw io_error(e.what());
    }
}

std::string to_off(const Triangulation2D& tri) {
    std::ostringstream out;
    out << "OFF\n" << tri.vertex_count() << ' ' << tri.triangle_count() << " 0\n";
    for (int i = 0; i < tri.vertex_count(); ++i) out << "0 0 0\n";
    for (const auto& t : tri.triangles()) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

Triangulation2D triangulation_from_off(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    std::size_t pos = 0;
    auto next_int = [&](const char* what) {
        if (pos >= tokens.size()) throw io_error(std::string("OFF file truncated at ") + what);
        try {
            return std::stol(tokens[pos++]);
        } catch (const std::exception&) {
            throw io_error(std::string("OFF file: bad ") + what + " \"" + tokens[pos - 1] + "\"");
        }
    };
    if (pos < tokens.size() && tokens[pos] == "OFF") ++pos;
    const long nv = next_int("vertex count");
    const long nf = next_int("face count");
    next_int("edge count");
    if (nv < 1) throw io_error("OFF file has no vertices");
    pos += static_cast<std::size_t>(nv) * 3;  // coordinates, ignored
    if (pos > tokens.size()) throw io_error("OFF file truncated in the vertex block");

    std::vector<std::array<int, 3>> triangles;
    for (long f = 0; f < nf; ++f) {
        const long k = next_int("face size");
        if (k != 3) throw io_error("only triangle faces are supported");
        const long a = next_int("face index");
        const long b = next_int("face index");
        const long c = next_int("face index");
        triangles.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
    }
    std::vector<std::string> labels;
    for (long i = 0; i < nv; ++i) labels.push_back(std::to_string(i));
    try {
        return Triangulation2D::from_triangles(std::move(labels), std::move(triangles));
    } catch (const std::invalid_argument& e) {
        throw io_error(e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw io_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw io_error("cannot rename " + tmp.string() + " to " + path.string());
}

}  // namespace stringcx
