#include "stringcx/complex.hpp"
#include "stringcx/construct.hpp"
#include "stringcx/generators.hpp"
#include "stringcx/io.hpp"
#include "stringcx/persistence.hpp"
#include "stringcx/strings.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>

using namespace stringcx;

namespace {

using ojson = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !text.empty()) out.push_back(cur);
    return out;
}

Scalar parse_scalar(const std::string& text, ScalarMode mode) {
    const Rational q = parse_rational(text);
    return mode == ScalarMode::exact ? Scalar::exact(q) : Scalar::real(static_cast<double>(q));
}

std::vector<Scalar> parse_scalar_list(const std::string& text, ScalarMode mode) {
    std::vector<Scalar> out;
    for (const std::string& tok : split(text, ',')) out.push_back(parse_scalar(tok, mode));
    return out;
}

struct CommonOpts {
    std::string input;
    std::string output;
    std::string mode;              // "", "exact", or "float"
    double tolerance = GapSpace::kDefaultTolerance;
    std::string epsilon = "0";
    int max_dim = -1;
    int max_size = -1;
    std::string coefficients = "mod2";
    int oracle_limit = 8;
    unsigned seed = 0;  // reserved: every current subcommand is deterministic
};

std::optional<ScalarMode> mode_override(const CommonOpts& opts) {
    if (opts.mode == "exact") return ScalarMode::exact;
    if (opts.mode == "float") return ScalarMode::real;
    return std::nullopt;
}

GapSpace load_space(const CommonOpts& opts) {
    const std::string text = read_file(opts.input);
    const bool csv = opts.input.size() > 4 && opts.input.substr(opts.input.size() - 4) == ".csv";
    if (csv) return gap_space_from_csv(text, mode_override(opts), opts.tolerance);
    return gap_space_from_json(text);
}

Triangulation2D load_triangulation(const std::string& path) {
    const std::string text = read_file(path);
    const bool off = path.size() > 4 && path.substr(path.size() - 4) == ".off";
    return off ? triangulation_from_off(text) : triangulation_from_json(text);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file_atomic(path, content);
}

void print_homology(const HomologyResult& h) {
    if (h.betti.empty()) {
        std::cout << "empty complex\n";
        return;
    }
    std::cout << "degree  betti(Z/2)";
    if (h.integer_mode) std::cout << "  rank  torsion";
    std::cout << '\n';
    for (std::size_t d = 0; d < h.betti.size(); ++d) {
        std::cout << "     " << d << "  " << h.betti[d];
        if (h.integer_mode) {
            std::cout << "  " << h.ranks[d] << "  ";
            if (h.torsion[d].empty())
                std::cout << "-";
            else
                for (std::size_t i = 0; i < h.torsion[d].size(); ++i)
                    std::cout << (i ? "," : "") << "Z/" << h.torsion[d][i].str();
        }
        std::cout << '\n';
    }
}

ojson homology_json(const HomologyResult& h) {
    ojson j;
    j["betti"] = h.betti;
    if (h.integer_mode) {
        j["ranks"] = h.ranks;
        ojson torsion = ojson::array();
        for (const auto& degree : h.torsion) {
            ojson list = ojson::array();
            for (const BigInt& t : degree) list.push_back(t.convert_to<std::int64_t>());
            torsion.push_back(std::move(list));
        }
        j["torsion"] = std::move(torsion);
    }
    return j;
}

int run_validate(const CommonOpts& opts) {
    const std::string text = read_file(opts.input);
    const bool csv = opts.input.size() > 4 && opts.input.substr(opts.input.size() - 4) == ".csv";
    const GapFileData data = csv ? gap_data_from_csv(text, mode_override(opts), opts.tolerance)
                                 : gap_data_from_json(text);
    const ValidationReport report =
        validate_gaps(data.gaps, data.mode == ScalarMode::exact ? 0.0 : data.tolerance);
    if (report.ok) {
        std::cout << "ok: " << data.gaps.size() << " points, triangle inequality holds\n";
        return 0;
    }
    std::cout << report.violations.size() << " violation(s)\n";
    for (const Violation& v : report.violations)
        std::cout << "  (" << v.x << "," << v.y << "," << v.z << "): gap(" << v.x << "," << v.y
                  << ") + gap(" << v.y << "," << v.z << ") = " << v.lhs.str() << " < "
                  << v.rhs.str() << " = gap(" << v.x << "," << v.z << ")\n";
    return 1;
}

int run_strings_cmd(const CommonOpts& opts, bool check_oracle) {
    const GapSpace space = load_space(opts);
    const Scalar eps = parse_scalar(opts.epsilon, space.mode());
    const StringSet strings = enumerate_eps_strings(space, eps, opts.max_size);
    if (check_oracle) {
        const StringSet reference = oracle_enumerate(space, eps, opts.oracle_limit);
        StringSet reference_capped(reference.mode(), reference.tolerance(),
                                   reference.point_count());
        const std::size_t cap =
            opts.max_size < 0 ? static_cast<std::size_t>(space.size())
                              : static_cast<std::size_t>(opts.max_size);
        for (const auto& [tuple, rec] : reference)
            if (tuple.size() <= cap) reference_capped.insert_min(tuple, rec.birth, rec.witness);
        auto ia = strings.begin();
        auto ib = reference_capped.begin();
        bool same = strings.size() == reference_capped.size();
        for (; same && ia != strings.end(); ++ia, ++ib)
            same = ia->first == ib->first &&
                   approx_eq(ia->second.birth, ib->second.birth, space.tolerance());
        if (!same) throw std::runtime_error("enumerator disagrees with the brute-force oracle");
        std::cerr << "oracle check passed (" << strings.size() << " sets)\n";
    }
    emit(opts.output, to_json(strings));
    return 0;
}

int run_complex_cmd(const CommonOpts& opts, const std::string& strings_path,
                    const std::string& faces_out) {
    StringComplex complex;
    if (!strings_path.empty()) {
        complex = build_complex(string_set_from_json(read_file(strings_path)));
    } else {
        const GapSpace space = load_space(opts);
        const Scalar eps = parse_scalar(opts.epsilon, space.mode());
        complex = build_complex(enumerate_eps_strings(space, eps), space.labels());
    }
    emit(opts.output, to_json(complex));
    if (!faces_out.empty()) write_file_atomic(faces_out, to_face_list(complex));

    std::cout << "dimension " << complex.dimension() << ", " << complex.simplex_count()
              << " simplices (";
    for (int d = 0; d <= complex.dimension(); ++d)
        std::cout << (d ? " " : "") << complex.simplices(d).size();
    std::cout << ")\n";
    std::cout << "euler characteristic " << euler_characteristic(complex) << '\n';
    std::cout << "connected components " << connected_components(complex).count << '\n';
    return 0;
}

int run_homology_cmd(const CommonOpts& opts, const std::string& complex_path) {
    const Coefficients coeffs =
        opts.coefficients == "int" ? Coefficients::integer : Coefficients::mod2;
    StringComplex complex;
    if (!complex_path.empty()) {
        complex = complex_from_json(read_file(complex_path));
    } else {
        const GapSpace space = load_space(opts);
        const Scalar eps = parse_scalar(opts.epsilon, space.mode());
        complex = build_complex(enumerate_eps_strings(space, eps), space.labels());
    }
    const HomologyResult h = homology(complex, coeffs);
    print_homology(h);
    if (!opts.output.empty()) emit(opts.output, homology_json(h).dump(2) + "\n");
    return 0;
}

int run_barcode_cmd(const CommonOpts& opts, const std::string& text_out) {
    const GapSpace space = load_space(opts);
    int max_dim = opts.max_dim;
    if (max_dim < 0 && space.size() > 12) max_dim = 3;  // keep 2^n in check
    const Filtration filtration = build_filtration(space, max_dim);
    const Barcode bars = barcode(filtration);
    emit(opts.output, to_json(bars));
    if (!text_out.empty()) write_file_atomic(text_out, to_text(bars));
    std::cout << bars.intervals.size() << " interval(s), " << bars.suppressed_zero_length
              << " zero-length suppressed\n";
    return 0;
}

int run_realize_cmd(const CommonOpts& opts, const std::string& surface, const std::string& k,
                    const std::string& u, const std::string& v) {
    const Triangulation2D tri =
        surface.empty() ? load_triangulation(opts.input) : surface_library(surface);
    const RealizationParams params(Scalar::exact(parse_rational(k)),
                                   Scalar::exact(parse_rational(u)),
                                   Scalar::exact(parse_rational(v)));
    const GapSpace space = realize(tri, params);
    emit(opts.output, to_json(space));
    const RealizationReport report = verify_realization(space, tri);
    std::cout << report.message << '\n';
    return report.ok ? 0 : 1;
}

int run_endpoint_cmd(const CommonOpts& opts, int x, int y) {
    const GapSpace space = load_space(opts);
    const Scalar eps = parse_scalar(opts.epsilon, space.mode());
    const StringSet strings = enumerate_eps_strings(space, eps);
    const EndpointSubcomplex sub = endpoint_subcomplex(space, strings, x, y);
    emit(opts.output, to_json(sub.complex));
    std::cout << sub.generators.size() << " string(s) with endpoints {" << x << "," << y
              << "}, closure has " << sub.complex.simplex_count() << " simplices\n";
    print_homology(homology(sub.complex, Coefficients::mod2));
    return 0;
}

int run_surface_cmd(const std::string& name, const std::string& output, bool off) {
    const Triangulation2D tri = surface_library(name);
    emit(output, off ? to_off(tri) : to_json(tri));
    return 0;
}

// ---------------------------------------------------------------------------
// The canonical example suite: regenerates every worked fixture and checks
// the documented invariants. Used as a smoke-level acceptance harness.

struct SuiteReport {
    bool all_ok = true;
    ojson rows = ojson::array();

    void add(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
        ojson row;
        row["name"] = name;
        row["ok"] = ok;
        row["detail"] = detail;
        rows.push_back(std::move(row));
        all_ok = all_ok && ok;
    }
};

std::vector<std::array<double, 2>> regular_polygon(int k) {
    std::vector<std::array<double, 2>> vs;
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * M_PI * i / k;
        vs.push_back({std::cos(a), std::sin(a)});
    }
    return vs;
}

bool betti_is(const HomologyResult& h, const std::vector<long>& expected) {
    return h.betti == expected;
}

int run_examples(const std::string& output) {
    SuiteReport report;
    const Scalar zero = Scalar::exact(0);

    {
        bool ok = true;
        for (int n = 3; n <= 8; ++n)
            ok = ok && enumerate_eps_strings(uniform_metric(n), zero).empty();
        report.add("uniform metric", ok, "no strings for n = 3..8");
    }
    {
        bool ok = true;
        for (int n = 3; n <= 10; ++n) {
            std::vector<Scalar> values;
            for (int i = 0; i < n; ++i) values.push_back(Scalar::exact(i * i + 1));
            const StringSet strings = enumerate_eps_strings(collinear_points(values), zero);
            ok = ok && strings.size() == (std::size_t(1) << n) - 1;
            const HomologyResult h = homology(build_complex(strings), Coefficients::mod2);
            ok = ok && h.betti[0] == 1;
            for (std::size_t d = 1; d < h.betti.size(); ++d) ok = ok && h.betti[d] == 0;
        }
        report.add("collinear points", ok, "full simplex with point homology for n = 3..10");
    }
    {
        bool ok = true;
        for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {4, 4}}) {
            const GapSpace s = two_parallel_lines(m, n, Scalar::exact(1), Scalar::exact(1));
            const StringComplex c =
                build_complex(enumerate_eps_strings(s, Scalar::real(0.0)), s.labels());
            ok = ok && connected_components(c).count == 2;
            ok = ok && c.dimension() == std::max(m, n) - 1;
            std::vector<int> line_a(m), line_b(n);
            for (int i = 0; i < m; ++i) line_a[i] = i;
            for (int i = 0; i < n; ++i) line_b[i] = m + i;
            ok = ok && c.contains(line_a) && c.contains(line_b);
        }
        report.add("two parallel lines", ok, "two disjoint full simplexes");
    }
    {
        bool ok = true;
        const std::vector<std::vector<int>> counts = {{3, 3, 3}, {4, 3, 4}, {3, 3, 3, 3},
                                                      {4, 4, 4, 4, 4}};
        for (const auto& c : counts) {
            const int k = static_cast<int>(c.size());
            const GapSpace s = polygon_points(c, regular_polygon(k));
            const StringComplex complex =
                build_complex(enumerate_eps_strings(s, Scalar::real(0.0)), s.labels());
            const HomologyResult h = homology(complex, Coefficients::mod2);
            ok = ok && h.betti.size() >= 2 && h.betti[0] == 1 && h.betti[1] == 1;
            // Each edge's point group spans a maximal simplex.
            int offset = 0;
            for (int i = 0; i < k && ok; ++i) {
                std::vector<int> group;
                for (int j = 0; j < c[i] - 1; ++j) group.push_back(offset + j);
                offset += c[i] - 1;
                group.push_back(offset % s.size());
                std::sort(group.begin(), group.end());
                ok = ok && complex.contains(group);
            }
        }
        report.add("convex polygon", ok, "circle homotopy type: Betti (1,1)");
    }
    {
        const GapSpace s = sphere_four_points();
        const StringComplex c = build_complex(enumerate_eps_strings(s, zero), s.labels());
        bool ok = c.simplices(0).size() == 4 && c.simplices(1).size() == 6 &&
                  c.simplices(2).size() == 4 && c.dimension() == 2;
        ok = ok && betti_is(homology(c, Coefficients::mod2), {1, 0, 1});
        const SmallSphereSearch search = search_small_sphere_spaces(6);
        ok = ok && !search.sphere_found;
        report.add("circle-arc rectangle", ok,
                   "boundary of a 3-simplex; no 2-sphere on <= 3 points (" +
                       std::to_string(search.spaces_examined) + " cases)");
    }
    {
        struct Surface {
            const char* name;
            std::vector<long> betti;
            bool torsion_in_h1;
        };
        const std::vector<Surface> surfaces = {{"sphere", {1, 0, 1}, false},
                                               {"torus", {1, 2, 1}, false},
                                               {"klein", {1, 2, 1}, true},
                                               {"rp2", {1, 1, 1}, true},
                                               {"disk", {1, 0, 0}, false}};
        for (const Surface& surf : surfaces) {
            const Triangulation2D tri = surface_library(surf.name);
            const GapSpace space = realize(tri);
            const RealizationReport rr = verify_realization(space, tri);
            bool ok = rr.ok;
            const StringComplex c =
                build_complex(enumerate_eps_strings(space, zero), space.labels());
            const HomologyResult h = homology(c, Coefficients::integer);
            ok = ok && betti_is(h, surf.betti);
            const bool has_torsion =
                h.torsion.size() > 1 && h.torsion[1] == std::vector<BigInt>{BigInt(2)};
            ok = ok && has_torsion == surf.torsion_in_h1;
            report.add(std::string("realize ") + surf.name, ok, rr.message);
        }
    }

    if (!output.empty()) {
        ojson j;
        j["ok"] = report.all_ok;
        j["checks"] = std::move(report.rows);
        emit(output, j.dump(2) + "\n");
    }
    std::cout << (report.all_ok ? "all checks passed\n" : "some checks FAILED\n");
    return report.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"string complexes, persistence, and surface realizations of finite gap spaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed,
                   "seed for randomized runs (current subcommands are deterministic)");

    std::function<int()> run;

    auto add_input = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("-i,--input", opts.input, "gap space file (.json or .csv)");
        if (required) o->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", opts.output, "output file (default: stdout)");
    };
    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opts.mode, "scalar mode for CSV input")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--tolerance", opts.tolerance, "relative comparison tolerance");
    };

    // validate ---------------------------------------------------------
    auto* validate_cmd = app.add_subcommand("validate", "scan a gap matrix for triangle-inequality violations");
    add_input(validate_cmd);
    add_mode(validate_cmd);
    validate_cmd->callback([&] { run = [&] { return run_validate(opts); }; });

    // generate ---------------------------------------------------------
    auto* generate_cmd = app.add_subcommand("generate", "write a generated gap space");
    generate_cmd->require_subcommand(1);
    {
        static int n = 3;
        auto* c = generate_cmd->add_subcommand("uniform", "discrete metric on n points");
        c->add_option("-n", n, "point count")->required();
        add_output(c);
        c->callback([&] {
            run = [&] {
                emit(opts.output, to_json(uniform_metric(n)));
                return 0;
            };
        });
    }
    {
        static std::string values;
        auto* c = generate_cmd->add_subcommand("collinear", "points on a line");
        c->add_option("--values", values, "comma-separated rationals")->required();
        add_output(c);
        add_mode(c);
        c->callback([&] {
            run = [&] {
                const ScalarMode mode = mode_override(opts).value_or(ScalarMode::exact);
                emit(opts.output, to_json(collinear_points(parse_scalar_list(values, mode))));
                return 0;
            };
        });
    }
    {
        static int m = 3, n = 3;
        static std::string separation = "1", spacing = "1";
        auto* c = generate_cmd->add_subcommand("two-lines", "points on two parallel lines");
        c->add_option("-m", m, "points on the first line")->required();
        c->add_option("-n", n, "points on the second line")->required();
        c->add_option("--separation", separation, "distance between the lines");
        c->add_option("--spacing", spacing, "distance between neighbors on a line");
        add_output(c);
        add_mode(c);
        c->callback([&] {
            run = [&] {
                emit(opts.output,
                     to_json(two_parallel_lines(m, n, parse_scalar(separation, ScalarMode::exact),
                                                parse_scalar(spacing, ScalarMode::exact),
                                                opts.tolerance)));
                return 0;
            };
        });
    }
    {
        static std::string counts, vertices;
        auto* c = generate_cmd->add_subcommand("polygon", "points on a convex polygon boundary");
        c->add_option("--counts", counts, "points per edge, e.g. 3,3,3")->required();
        c->add_option("--vertices", vertices, "vertex coordinates, e.g. 0,0;1,0;0.5,0.9")
            ->required();
        add_output(c);
        add_mode(c);
        c->callback([&] {
            run = [&] {
                std::vector<int> edge_counts;
                for (const std::string& tok : split(counts, ','))
                    edge_counts.push_back(std::stoi(tok));
                std::vector<std::array<double, 2>> vs;
                for (const std::string& pair : split(vertices, ';')) {
                    const auto xy = split(pair, ',');
                    if (xy.size() != 2) throw io_error("vertices must be x,y pairs");
                    vs.push_back({std::stod(xy[0]), std::stod(xy[1])});
                }
                emit(opts.output, to_json(polygon_points(edge_counts, vs, opts.tolerance)));
                return 0;
            };
        });
    }
    {
        static std::string positions, circumference = "1";
        auto* c = generate_cmd->add_subcommand("circle-arc", "points on a circle with the shortest-arc metric");
        c->add_option("--positions", positions, "comma-separated arc positions")->required();
        c->add_option("--circumference", circumference, "circle circumference");
        add_output(c);
        add_mode(c);
        c->callback([&] {
            run = [&] {
                const ScalarMode mode = mode_override(opts).value_or(ScalarMode::exact);
                emit(opts.output, to_json(circle_arc_metric(parse_scalar_list(positions, mode),
                                                            parse_scalar(circumference, mode))));
                return 0;
            };
        });
    }
    {
        static int nodes = 0;
        static std::string arcs;
        auto* c = generate_cmd->add_subcommand("digraph", "shortest-path gaps of a weighted digraph");
        c->add_option("--nodes", nodes, "node count")->required();
        c->add_option("--arcs", arcs, "semicolon-separated from,to,length triples")->required();
        add_output(c);
        c->callback([&] {
            run = [&] {
                std::vector<Arc> list;
                for (const std::string& tok : split(arcs, ';')) {
                    const auto parts = split(tok, ',');
                    if (parts.size() != 3) throw io_error("arcs must be from,to,length triples");
                    list.push_back({std::stoi(parts[0]), std::stoi(parts[1]),
                                    Scalar::exact(parse_rational(parts[2]))});
                }
                emit(opts.output, to_json(digraph_gaps(nodes, list)));
                return 0;
            };
        });
    }

    // strings ------------------------------------------------------------
    static bool check_oracle = false;
    auto* strings_cmd = app.add_subcommand("strings", "enumerate the eps-strings of a gap space");
    add_input(strings_cmd);
    add_output(strings_cmd);
    add_mode(strings_cmd);
    strings_cmd->add_option("-e,--epsilon", opts.epsilon, "slack threshold (default 0)");
    strings_cmd->add_option("--max-size", opts.max_size, "largest set size to enumerate");
    strings_cmd->add_flag("--check-oracle", check_oracle,
                          "cross-check against the brute-force oracle");
    strings_cmd->add_option("--oracle-limit", opts.oracle_limit,
                            "maximum point count for the oracle");
    strings_cmd->callback([&] { run = [&] { return run_strings_cmd(opts, check_oracle); }; });

    // complex ------------------------------------------------------------
    static std::string strings_path, faces_out;
    auto* complex_cmd = app.add_subcommand("complex", "build the eps-string complex");
    add_input(complex_cmd, false);
    add_output(complex_cmd);
    add_mode(complex_cmd);
    complex_cmd->add_option("-e,--epsilon", opts.epsilon, "slack threshold (default 0)");
    complex_cmd->add_option("--strings", strings_path, "build from a string-set file instead");
    complex_cmd->add_option("--faces-out", faces_out, "also write a face-list text file");
    complex_cmd->callback([&] {
        run = [&] {
            if (opts.input.empty() && strings_path.empty())
                throw CLI::ValidationError("complex", "needs --input or --strings");
            return run_complex_cmd(opts, strings_path, faces_out);
        };
    });

    // homology -----------------------------------------------------------
    static std::string complex_path;
    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of the eps-string complex");
    add_input(homology_cmd, false);
    add_output(homology_cmd);
    add_mode(homology_cmd);
    homology_cmd->add_option("-e,--epsilon", opts.epsilon, "slack threshold (default 0)");
    homology_cmd->add_option("--coefficients", opts.coefficients, "mod2 or int")
        ->check(CLI::IsMember({"mod2", "int"}));
    homology_cmd->add_option("--complex", complex_path, "compute from a complex file instead");
    homology_cmd->callback([&] {
        run = [&] {
            if (opts.input.empty() && complex_path.empty())
                throw CLI::ValidationError("homology", "needs --input or --complex");
            return run_homology_cmd(opts, complex_path);
        };
    });

    // barcode --------------------------------------------------------------
    static std::string text_out;
    auto* barcode_cmd = app.add_subcommand("barcode", "persistence barcode of the eps-filtration");
    add_input(barcode_cmd);
    add_output(barcode_cmd);
    add_mode(barcode_cmd);
    barcode_cmd->add_option("--max-dim", opts.max_dim,
                            "dimension cap (default n-1, or 3 when n > 12)");
    barcode_cmd->add_option("--text-out", text_out, "also write the plain-text diagram");
    barcode_cmd->callback([&] { run = [&] { return run_barcode_cmd(opts, text_out); }; });

    // realize ----------------------------------------------------------------
    static std::string surface_name, param_k = "1", param_u = "3/5", param_v = "7/10";
    auto* realize_cmd =
        app.add_subcommand("realize", "metric space whose string complex is a given triangulation");
    realize_cmd->add_option("-i,--input", opts.input, "triangulation file (.json or .off)");
    realize_cmd->add_option("--surface", surface_name, "use a library surface instead");
    realize_cmd->add_option("--k", param_k, "base distance (rational)");
    realize_cmd->add_option("--u", param_u, "vertex-edge distance, in (k/2, k)");
    realize_cmd->add_option("--v", param_v, "edge-triangle distance, in (k/2, k)");
    add_output(realize_cmd);
    realize_cmd->callback([&] {
        run = [&] {
            if (opts.input.empty() && surface_name.empty())
                throw CLI::ValidationError("realize", "needs --input or --surface");
            return run_realize_cmd(opts, surface_name, param_k, param_u, param_v);
        };
    });

    // endpoint -----------------------------------------------------------------
    static int ep_x = 0, ep_y = 0;
    auto* endpoint_cmd =
        app.add_subcommand("endpoint", "subcomplex of strings with fixed endpoints");
    add_input(endpoint_cmd);
    add_output(endpoint_cmd);
    add_mode(endpoint_cmd);
    endpoint_cmd->add_option("-x", ep_x, "first endpoint index")->required();
    endpoint_cmd->add_option("-y", ep_y, "second endpoint index")->required();
    endpoint_cmd->add_option("-e,--epsilon", opts.epsilon, "slack threshold (default 0)");
    endpoint_cmd->callback([&] { run = [&] { return run_endpoint_cmd(opts, ep_x, ep_y); }; });

    // surface --------------------------------------------------------------------
    static std::string lib_name;
    static bool as_off = false;
    auto* surface_cmd = app.add_subcommand("surface", "write a library triangulation");
    surface_cmd->add_option("name", lib_name,
                            "sphere|torus|klein|rp2|disk|cylinder|moebius|two-spheres")
        ->required();
    add_output(surface_cmd);
    surface_cmd->add_flag("--off", as_off, "write OFF instead of JSON");
    surface_cmd->callback([&] { run = [&] { return run_surface_cmd(lib_name, opts.output, as_off); }; });

    // paper-examples ----------------------------------------------------------------
    auto* examples_cmd =
        app.add_subcommand("paper-examples", "regenerate the worked example fixtures and check them");
    add_output(examples_cmd);
    examples_cmd->callback([&] { run = [&] { return run_examples(opts.output); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run();
    } catch (const io_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
