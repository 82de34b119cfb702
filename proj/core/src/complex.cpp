#include "stringcx/complex.hpp"

#include "stringcx/homology.hpp"

#include <algorithm>
#include <functional>

namespace stringcx {

namespace {

const std::vector<std::vector<int>> kNoSimplices;
const std::vector<Scalar> kNoBirths;

std::vector<int> facet_without(const std::vector<int>& simplex, std::size_t skip) {
    std::vector<int> f;
    f.reserve(simplex.size() - 1);
    for (std::size_t i = 0; i < simplex.size(); ++i)
        if (i != skip) f.push_back(simplex[i]);
    return f;
}

/// Position of a sorted tuple in a lexicographically sorted list, or -1.
long index_of(const std::vector<std::vector<int>>& list, const std::vector<int>& tuple) {
    auto it = std::lower_bound(list.begin(), list.end(), tuple);
    if (it == list.end() || *it != tuple) return -1;
    return it - list.begin();
}

}  // namespace

StringComplex StringComplex::from_simplices(std::map<std::vector<int>, Scalar> simplices,
                                            std::vector<std::string> vertex_labels,
                                            ScalarMode mode, double tolerance) {
    StringComplex c;
    c.labels_ = std::move(vertex_labels);
    c.mode_ = mode;
    c.tolerance_ = tolerance;
    if (simplices.empty()) return c;

    std::size_t max_size = 0;
    for (const auto& [tuple, birth] : simplices) {
        if (tuple.empty()) throw std::invalid_argument("empty simplex");
        max_size = std::max(max_size, tuple.size());
    }
    c.by_dim_.resize(max_size);
    c.births_.resize(max_size);
    for (const auto& [tuple, birth] : simplices) {
        c.by_dim_[tuple.size() - 1].push_back(tuple);
        c.births_[tuple.size() - 1].push_back(birth);
    }

    // Face closure and birth monotonicity.
    for (std::size_t d = 1; d < c.by_dim_.size(); ++d)
        for (std::size_t i = 0; i < c.by_dim_[d].size(); ++i) {
            const auto& simplex = c.by_dim_[d][i];
            for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
                const std::vector<int> facet = facet_without(simplex, skip);
                const long fi = index_of(c.by_dim_[d - 1], facet);
                if (fi < 0)
                    throw std::invalid_argument("simplex family is not downward closed");
                if (!leq(c.births_[d - 1][fi], c.births_[d][i], tolerance))
                    throw std::invalid_argument("face born after its coface");
            }
        }
    return c;
}

std::size_t StringComplex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& list : by_dim_) total += list.size();
    return total;
}

const std::vector<std::vector<int>>& StringComplex::simplices(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kNoSimplices;
    return by_dim_[dim];
}

const std::vector<Scalar>& StringComplex::births(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(births_.size())) return kNoBirths;
    return births_[dim];
}

bool StringComplex::contains(const std::vector<int>& simplex) const {
    const int dim = static_cast<int>(simplex.size()) - 1;
    return index_of(simplices(dim), simplex) >= 0;
}

StringComplex build_complex(const StringSet& strings, std::vector<std::string> vertex_labels) {
    std::map<std::vector<int>, Scalar> simplices;
    for (const auto& [tuple, rec] : strings) simplices.emplace(tuple, rec.birth);
    if (vertex_labels.empty()) {
        vertex_labels.reserve(strings.point_count());
        for (int i = 0; i < strings.point_count(); ++i) vertex_labels.push_back(std::to_string(i));
    }
    return StringComplex::from_simplices(std::move(simplices), std::move(vertex_labels),
                                         strings.mode(), strings.tolerance());
}

long euler_characteristic(const StringComplex& complex) {
    long chi = 0;
    for (int d = 0; d <= complex.dimension(); ++d) {
        const long count = static_cast<long>(complex.simplices(d).size());
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

ComponentLabeling connected_components(const StringComplex& complex) {
    ComponentLabeling out;
    std::map<int, int> parent;
    for (const auto& v : complex.simplices(0)) parent[v[0]] = v[0];

    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& e : complex.simplices(1)) {
        const int a = find(e[0]);
        const int b = find(e[1]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::map<int, int> root_to_id;
    for (const auto& [v, p] : parent) {
        const int root = find(v);
        auto [it, fresh] = root_to_id.emplace(root, out.count);
        if (fresh) ++out.count;
        out.component_of_vertex[v] = it->second;
    }
    return out;
}

namespace {

/// Columns of the boundary map from dimension d to d-1 as GF(2) bitsets.
std::vector<std::vector<std::uint64_t>> boundary_mod2(const StringComplex& c, int d) {
    const auto& rows = c.simplices(d - 1);
    const auto& cols = c.simplices(d);
    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(cols.size());
    for (const auto& simplex : cols) {
        std::vector<std::uint64_t> col(words, 0);
        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            const long r = index_of(rows, facet_without(simplex, skip));
            col[static_cast<std::size_t>(r) / 64] |= std::uint64_t(1) << (r % 64);
        }
        m.push_back(std::move(col));
    }
    return m;
}

std::vector<std::vector<BigInt>> boundary_integer(const StringComplex& c, int d) {
    const auto& rows = c.simplices(d - 1);
    const auto& cols = c.simplices(d);
    std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& simplex = cols[j];
        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            const long r = index_of(rows, facet_without(simplex, skip));
            m[r][j] = (skip % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

HomologyResult homology(const StringComplex& complex, Coefficients coefficients) {
    HomologyResult res;
    const int dim = complex.dimension();
    if (dim < 0) return res;

    // rank of the boundary map leaving degree d, for d = 0..dim+1.
    std::vector<long> rank_mod2(dim + 2, 0);
    for (int d = 1; d <= dim; ++d) rank_mod2[d] = gf2_rank(boundary_mod2(complex, d));

    res.betti.resize(dim + 1);
    for (int d = 0; d <= dim; ++d)
        res.betti[d] = static_cast<long>(complex.simplices(d).size()) - rank_mod2[d] -
                       rank_mod2[d + 1];

    if (coefficients == Coefficients::integer) {
        res.integer_mode = true;
        std::vector<std::vector<BigInt>> snf(dim + 2);
        for (int d = 1; d <= dim; ++d) snf[d] = smith_normal_form(boundary_integer(complex, d));
        auto rank_of = [&](int d) {
            long r = 0;
            for (const BigInt& v : snf[d])
                if (v != 0) ++r;
            return r;
        };
        res.ranks.resize(dim + 1);
        res.torsion.resize(dim + 1);
        for (int d = 0; d <= dim; ++d) {
            res.ranks[d] =
                static_cast<long>(complex.simplices(d).size()) - rank_of(d) - rank_of(d + 1);
            for (const BigInt& v : snf[d + 1])
                if (v > 1) res.torsion[d].push_back(v);
        }
    }
    return res;
}

EndpointSubcomplex endpoint_subcomplex(const GapSpace& space, const StringSet& strings, int x,
                                       int y) {
    if (!space.metric())
        throw std::domain_error("endpoint subcomplex requires a metric space");
    if (x == y) throw std::invalid_argument("endpoint subcomplex requires two distinct points");
    if (x < 0 || y < 0 || x >= space.size() || y >= space.size())
        throw std::invalid_argument("point index out of range");

    const std::pair<int, int> target{std::min(x, y), std::max(x, y)};
    const Scalar zero = Scalar::zero(space.mode());

    EndpointSubcomplex out;
    std::map<std::vector<int>, Scalar> closed;
    for (const auto& [tuple, rec] : strings) {
        if (tuple.size() < 2) continue;
        if (!approx_eq(rec.birth, zero, space.tolerance())) continue;  // strings only
        if (endpoints(space, tuple) != target) continue;
        out.generators.push_back(tuple);
        // Downward closure: substrings keep their recorded births.
        const std::size_t m = tuple.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1) subset.push_back(tuple[i]);
            const StringRecord* rec_sub = strings.find(subset);
            closed.emplace(std::move(subset), rec_sub ? rec_sub->birth : rec.birth);
        }
    }

    std::vector<std::string> labels = space.labels();
    out.complex = StringComplex::from_simplices(std::move(closed), std::move(labels),
                                                space.mode(), space.tolerance());
    return out;
}

}  // namespace stringcx
