#include "stringcx/persistence.hpp"

#include <algorithm>
#include <map>

namespace stringcx {

namespace {

/// Lexicographically next k-combination of {0..n-1} in `c`; false when done.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Filtration build_filtration(const GapSpace& space, int max_dim) {
    const int n = space.size();
    const int cap = (max_dim < 0 ? n - 1 : std::min(max_dim, n - 1)) + 1;  // max subset size

    std::vector<FiltrationEntry> entries;
    if (n < 3 || cap < 1)
        return Filtration({}, space.mode(), space.tolerance(), n);

    // Guard against runaway subset counts; callers cap max_dim for large n.
    double budget = 0;
    for (int k = 1; k <= cap; ++k) {
        double c = 1;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        budget += c;
        if (budget > 8e6)
            throw std::invalid_argument(
                "filtration would have too many subsets; pass a smaller max_dim");
    }

    // Births of all triples, computed once; vertices and pairs inherit the
    // minimum over their containing triples.
    std::map<std::vector<int>, Scalar> triple_births;
    std::map<std::vector<int>, Scalar> small_births;
    {
        auto fold_min = [&](std::vector<int> key, const Scalar& b) {
            auto [it, fresh] = small_births.emplace(std::move(key), b);
            if (!fresh && b < it->second) it->second = b;
        };
        std::vector<int> c = {0, 1, 2};
        do {
            const Scalar b = *birth(space, c);
            triple_births.emplace(c, b);
            for (int v : c) fold_min({v}, b);
            fold_min({c[0], c[1]}, b);
            fold_min({c[0], c[2]}, b);
            fold_min({c[1], c[2]}, b);
        } while (next_combination(c, n));
    }

    // Births are clamped to the maximum facet birth while walking the sizes
    // upward. Exact births are already monotone under inclusion, so this
    // only repairs last-ulp rounding inversions in real mode, where two
    // theoretically equal births may round in opposite directions.
    std::map<std::vector<int>, Scalar> previous_size;
    for (int k = 1; k <= cap; ++k) {
        std::map<std::vector<int>, Scalar> current_size;
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) c[i] = i;
        do {
            std::optional<Scalar> b;
            if (k == 1 || k == 2) {
                auto it = small_births.find(c);
                if (it != small_births.end()) b = it->second;
            } else if (k == 3) {
                b = triple_births.at(c);
            } else {
                b = birth(space, c);
            }
            if (!b) continue;
            for (int skip = 0; skip < k && k > 1; ++skip) {
                std::vector<int> facet;
                facet.reserve(k - 1);
                for (int i = 0; i < k; ++i)
                    if (i != skip) facet.push_back(c[i]);
                auto it = previous_size.find(facet);
                if (it != previous_size.end() && *b < it->second) b = it->second;
            }
            current_size.emplace(c, *b);
            entries.push_back({c, *b});
        } while (next_combination(c, n));
        previous_size = std::move(current_size);
    }

    std::sort(entries.begin(), entries.end(), [](const FiltrationEntry& a, const FiltrationEntry& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return Filtration(std::move(entries), space.mode(), space.tolerance(), n);
}

Barcode barcode(const Filtration& filtration, const BarcodeOptions& options) {
    std::vector<FiltrationEntry> order = filtration.entries();
    if (options.tie_break == TieBreak::revlex)
        std::sort(order.begin(), order.end(),
                  [](const FiltrationEntry& a, const FiltrationEntry& b) {
                      if (a.birth != b.birth) return a.birth < b.birth;
                      if (a.vertices.size() != b.vertices.size())
                          return a.vertices.size() < b.vertices.size();
                      return b.vertices < a.vertices;
                  });

    const std::size_t m = order.size();
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < m; ++i) position.emplace(order[i].vertices, i);

    Barcode out;
    out.mode = filtration.mode();
    out.tolerance = filtration.tolerance();

    // Reduced columns stored by their low row; creators reduce to empty.
    std::map<std::size_t, std::vector<std::size_t>> by_low;
    std::vector<char> destroyed(m, 0);
    std::vector<char> creator(m, 0);

    for (std::size_t j = 0; j < m; ++j) {
        const auto& simplex = order[j].vertices;
        std::vector<std::size_t> col;
        if (simplex.size() > 1) {
            col.reserve(simplex.size());
            for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
                std::vector<int> facet;
                facet.reserve(simplex.size() - 1);
                for (std::size_t i = 0; i < simplex.size(); ++i)
                    if (i != skip) facet.push_back(simplex[i]);
                auto it = position.find(facet);
                if (it == position.end() || it->second >= j)
                    throw std::invalid_argument("filtration violates the face order");
                col.push_back(it->second);
            }
            std::sort(col.begin(), col.end());
        }

        while (!col.empty()) {
            auto it = by_low.find(col.back());
            if (it == by_low.end()) break;
            // Symmetric difference with the stored column (Z/2 addition).
            std::vector<std::size_t> merged;
            std::set_symmetric_difference(col.begin(), col.end(), it->second.begin(),
                                          it->second.end(), std::back_inserter(merged));
            col = std::move(merged);
        }

        if (col.empty()) {
            creator[j] = 1;
        } else {
            const std::size_t low = col.back();
            destroyed[low] = 1;
            const Scalar& birth_v = order[low].birth;
            const Scalar& death_v = order[j].birth;
            if (approx_eq(birth_v, death_v, filtration.tolerance()) &&
                !options.keep_zero_length)
                ++out.suppressed_zero_length;
            else
                out.intervals.push_back({order[low].dim(), birth_v, death_v});
            by_low.emplace(low, std::move(col));
        }
    }

    for (std::size_t j = 0; j < m; ++j)
        if (creator[j] && !destroyed[j])
            out.intervals.push_back({order[j].dim(), order[j].birth, std::nullopt});

    std::sort(out.intervals.begin(), out.intervals.end(),
              [](const Interval& a, const Interval& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
                  if (a.death && b.death && *a.death != *b.death) return *a.death < *b.death;
                  return false;
              });
    return out;
}

std::vector<std::pair<Scalar, long>> betti_curve(const Barcode& barcode, int degree,
                                                 const std::vector<Scalar>& grid) {
    std::vector<std::pair<Scalar, long>> out;
    out.reserve(grid.size());
    for (const Scalar& eps : grid) {
        long count = 0;
        for (const Interval& iv : barcode.intervals) {
            if (iv.degree != degree) continue;
            if (!leq(iv.birth, eps, barcode.tolerance)) continue;
            if (iv.death && leq(*iv.death, eps, barcode.tolerance)) continue;
            ++count;
        }
        out.emplace_back(eps, count);
    }
    return out;
}

}  // namespace stringcx
