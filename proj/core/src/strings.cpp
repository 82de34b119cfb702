#include "stringcx/strings.hpp"

#include <algorithm>
#include <functional>

namespace stringcx {

namespace {

std::vector<int> sorted_checked(const GapSpace& space, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    if (s.front() < 0 || s.back() >= space.size())
        throw std::invalid_argument("point index out of range");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) throw std::invalid_argument("repeated point index");
    return s;
}

Scalar eps_in_mode(const GapSpace& space, const Scalar& eps) {
    if (eps.mode() == space.mode()) return eps;
    if (space.mode() == ScalarMode::real) return Scalar::real(eps.as_double());
    throw std::invalid_argument("epsilon must be an exact scalar for an exact-mode space");
}

/// sum-of-gaps <= end gap + eps, up to the space tolerance.
bool within_eps(const GapSpace& space, const Scalar& sum, const Scalar& end_gap,
                const Scalar& eps) {
    return leq(sum, end_gap + eps, space.tolerance());
}

/// Depth-first search for one complete order of `pts` whose every prefix has
/// excess <= eps. Because the excess never decreases when a point is
/// appended, such an order exists iff the set is an eps-string.
std::optional<std::vector<int>> find_order_within(const GapSpace& space,
                                                  const std::vector<int>& pts,
                                                  const Scalar& eps) {
    const std::size_t m = pts.size();
    std::vector<int> path;
    path.reserve(m);
    std::vector<char> used(m, 0);

    std::function<bool(const Scalar&)> extend = [&](const Scalar& sum) -> bool {
        if (path.size() == m) return true;
        const int start = path.front();
        const int last = path.back();
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            const int next = pts[i];
            Scalar new_sum = sum + space.gap(last, next);
            if (!within_eps(space, new_sum, space.gap(start, next), eps)) continue;
            used[i] = 1;
            path.push_back(next);
            if (extend(new_sum)) return true;
            path.pop_back();
            used[i] = 0;
        }
        return false;
    };

    for (std::size_t i = 0; i < m; ++i) {
        path.assign(1, pts[i]);
        std::fill(used.begin(), used.end(), 0);
        used[i] = 1;
        if (extend(Scalar::zero(space.mode()))) return path;
    }
    return std::nullopt;
}

/// Minimal excess over the orders of a 3-element set.
Scalar triple_birth(const GapSpace& space, int a, int b, int c) {
    const int pts[3] = {a, b, c};
    std::optional<Scalar> best;
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        const int x = pts[perm[0]], y = pts[perm[1]], z = pts[perm[2]];
        Scalar exc = space.gap(x, y) + space.gap(y, z) - space.gap(x, z);
        if (!best || exc < *best) best = exc;
    } while (std::next_permutation(perm, perm + 3));
    return *best;
}

/// Adds the singletons and pairs licensed by the 3-element members, with
/// births inherited from the cheapest containing triple and witnesses
/// restricted from its direct order.
void license_small_sets(StringSet& out) {
    std::vector<std::pair<std::vector<int>, StringRecord>> triples;
    for (const auto& [key, rec] : out)
        if (key.size() == 3) triples.emplace_back(key, rec);

    for (const auto& [key, rec] : triples) {
        for (int a : key) out.insert_min({a}, rec.birth, {a});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                std::vector<int> pair = {key[i], key[j]};
                std::vector<int> witness;
                for (int p : rec.witness)
                    if (p == pair[0] || p == pair[1]) witness.push_back(p);
                out.insert_min(std::move(pair), rec.birth, std::move(witness));
            }
    }
}

}  // namespace

void StringSet::insert_min(std::vector<int> canonical_set, const Scalar& birth,
                           std::vector<int> witness) {
    auto it = members_.find(canonical_set);
    if (it == members_.end())
        members_.emplace(std::move(canonical_set), StringRecord{birth, std::move(witness)});
    else if (birth < it->second.birth)
        it->second = StringRecord{birth, std::move(witness)};
}

Scalar excess(const GapSpace& space, const std::vector<int>& order) {
    if (order.empty()) throw std::invalid_argument("order must be nonempty");
    std::vector<char> seen(space.size(), 0);
    for (int p : order) {
        if (p < 0 || p >= space.size()) throw std::invalid_argument("point index out of range");
        if (seen[p]) throw std::invalid_argument("repeated point index");
        seen[p] = 1;
    }
    Scalar sum = Scalar::zero(space.mode());
    if (order.size() == 1) return sum;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) sum = sum + space.gap(order[i], order[i + 1]);
    return sum - space.gap(order.front(), order.back());
}

bool is_eps_string(const GapSpace& space, const std::vector<int>& subset, const Scalar& eps_in) {
    const Scalar eps = eps_in_mode(space, eps_in);
    const Scalar zero = Scalar::zero(space.mode());
    if (lt(eps, zero, space.tolerance()))
        throw std::invalid_argument("epsilon must be nonnegative");
    std::vector<int> pts = sorted_checked(space, subset);
    const int n = space.size();

    if (pts.size() >= 3) return find_order_within(space, pts, eps).has_value();

    // Size 1 or 2: contained in some 3-element eps-string.
    if (n < 3) return false;
    auto triple_qualifies = [&](int a, int b, int c) {
        std::vector<int> t = {a, b, c};
        std::sort(t.begin(), t.end());
        return find_order_within(space, t, eps).has_value();
    };
    if (pts.size() == 2) {
        for (int c = 0; c < n; ++c) {
            if (c == pts[0] || c == pts[1]) continue;
            if (triple_qualifies(pts[0], pts[1], c)) return true;
        }
        return false;
    }
    for (int b = 0; b < n; ++b) {
        if (b == pts[0]) continue;
        for (int c = b + 1; c < n; ++c) {
            if (c == pts[0]) continue;
            if (triple_qualifies(pts[0], b, c)) return true;
        }
    }
    return false;
}

bool is_string(const GapSpace& space, const std::vector<int>& subset) {
    return is_eps_string(space, subset, Scalar::zero(space.mode()));
}

std::vector<OrderedString> direct_orders(const GapSpace& space, const std::vector<int>& subset) {
    const Scalar zero = Scalar::zero(space.mode());
    std::vector<int> pts = sorted_checked(space, subset);
    if (!is_string(space, subset)) throw std::invalid_argument("subset is not a string");

    if (pts.size() == 1) return {OrderedString{pts, zero}};

    if (pts.size() == 2) {
        // Orders of a pair are direct when they appear as a subsequence of a
        // direct order of some 3-element string.
        bool fwd = false, bwd = false;
        const int a = pts[0], b = pts[1];
        for (int c = 0; c < space.size() && !(fwd && bwd); ++c) {
            if (c == a || c == b) continue;
            int perm[3] = {a, b, c};
            std::sort(perm, perm + 3);
            do {
                Scalar sum = space.gap(perm[0], perm[1]) + space.gap(perm[1], perm[2]);
                if (!approx_eq(sum, space.gap(perm[0], perm[2]), space.tolerance())) continue;
                int ia = -1, ib = -1;
                for (int k = 0; k < 3; ++k) {
                    if (perm[k] == a) ia = k;
                    if (perm[k] == b) ib = k;
                }
                (ia < ib ? fwd : bwd) = true;
            } while (std::next_permutation(perm, perm + 3));
        }
        std::vector<OrderedString> res;
        if (fwd) res.push_back({{a, b}, zero});
        if (bwd) res.push_back({{b, a}, zero});
        return res;
    }

    // Size >= 3: enumerate every order with excess zero. Prefix pruning is
    // complete here because a direct order restricts to a direct order on
    // every prefix.
    std::vector<OrderedString> res;
    const std::size_t m = pts.size();
    std::vector<int> path;
    std::vector<char> used(m, 0);
    std::function<void(const Scalar&)> extend = [&](const Scalar& sum) {
        if (path.size() == m) {
            res.push_back({path, sum - space.gap(path.front(), path.back())});
            return;
        }
        const int start = path.front();
        const int last = path.back();
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            const int next = pts[i];
            Scalar new_sum = sum + space.gap(last, next);
            if (!approx_eq(new_sum, space.gap(start, next), space.tolerance())) continue;
            used[i] = 1;
            path.push_back(next);
            extend(new_sum);
            path.pop_back();
            used[i] = 0;
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        path.assign(1, pts[i]);
        std::fill(used.begin(), used.end(), 0);
        used[i] = 1;
        extend(zero);
    }
    return res;
}

std::pair<int, int> endpoints(const GapSpace& space, const std::vector<int>& str) {
    if (!space.metric())
        throw std::domain_error("endpoints are only canonical in metric spaces");
    std::vector<int> pts = sorted_checked(space, str);
    if (pts.size() < 2) throw std::invalid_argument("endpoints require a string of length >= 2");
    if (!is_string(space, str)) throw std::invalid_argument("subset is not a string");
    if (pts.size() == 2) return {pts[0], pts[1]};
    auto order = find_order_within(space, pts, Scalar::zero(space.mode()));
    const int a = order->front();
    const int b = order->back();
    return {std::min(a, b), std::max(a, b)};
}

StringSet enumerate_eps_strings(const GapSpace& space, const Scalar& eps_in, int max_size) {
    const Scalar eps = eps_in_mode(space, eps_in);
    const Scalar zero = Scalar::zero(space.mode());
    if (lt(eps, zero, space.tolerance()))
        throw std::invalid_argument("epsilon must be nonnegative");
    const int n = space.size();
    const int cap = max_size < 0 ? n : std::min(max_size, n);

    StringSet out(space.mode(), space.tolerance(), n);
    if (n < 3 || cap < 1) return out;
    const int depth_cap = std::max(cap, 3);

    std::vector<int> path;
    path.reserve(depth_cap);
    std::vector<char> used(n, 0);

    std::function<void(const Scalar&)> extend = [&](const Scalar& sum) {
        const int start = path.front();
        const int last = path.back();
        for (int next = 0; next < n; ++next) {
            if (used[next]) continue;
            Scalar new_sum = sum + space.gap(last, next);
            const Scalar& end_gap = space.gap(start, next);
            if (!within_eps(space, new_sum, end_gap, eps)) continue;
            used[next] = 1;
            path.push_back(next);
            if (path.size() >= 3) {
                std::vector<int> key = path;
                std::sort(key.begin(), key.end());
                out.insert_min(std::move(key), new_sum - end_gap, path);
            }
            if (static_cast<int>(path.size()) < depth_cap) extend(new_sum);
            path.pop_back();
            used[next] = 0;
        }
    };

    for (int start = 0; start < n; ++start) {
        path.assign(1, start);
        std::fill(used.begin(), used.end(), 0);
        used[start] = 1;
        extend(zero);
    }

    license_small_sets(out);

    if (cap < 3) {
        auto& members = out.members();
        for (auto it = members.begin(); it != members.end();)
            it = it->first.size() > static_cast<std::size_t>(cap) ? members.erase(it)
                                                                  : std::next(it);
    }
    return out;
}

std::optional<Scalar> birth(const GapSpace& space, const std::vector<int>& subset) {
    std::vector<int> pts = sorted_checked(space, subset);
    const int n = space.size();
    const std::size_t m = pts.size();

    if (m >= 3) {
        if (m > 22) throw std::invalid_argument("subset too large for the birth DP");
        // Held-Karp over subsets of pts: cheapest path from each start to
        // each end, then subtract the end gap.
        const int full = (1 << m) - 1;
        std::optional<Scalar> best;
        std::vector<std::optional<Scalar>> dp;
        for (std::size_t s = 0; s < m; ++s) {
            dp.assign(static_cast<std::size_t>(full + 1) * m, std::nullopt);
            dp[(static_cast<std::size_t>(1) << s) * m + s] = Scalar::zero(space.mode());
            for (int mask = 1 << s; mask <= full; ++mask) {
                if (!(mask & (1 << s))) continue;
                for (std::size_t e = 0; e < m; ++e) {
                    if (!(mask & (1 << e))) continue;
                    const auto& cur = dp[static_cast<std::size_t>(mask) * m + e];
                    if (!cur) continue;
                    for (std::size_t f = 0; f < m; ++f) {
                        if (mask & (1 << f)) continue;
                        Scalar cand = *cur + space.gap(pts[e], pts[f]);
                        auto& slot = dp[(static_cast<std::size_t>(mask) | (1 << f)) * m + f];
                        if (!slot || cand < *slot) slot = cand;
                    }
                }
            }
            for (std::size_t e = 0; e < m; ++e) {
                if (e == s) continue;
                const auto& v = dp[static_cast<std::size_t>(full) * m + e];
                if (!v) continue;
                Scalar b = *v - space.gap(pts[s], pts[e]);
                if (!best || b < *best) best = b;
            }
        }
        return best;
    }

    if (n < 3) return std::nullopt;
    std::optional<Scalar> best;
    auto consider = [&](const Scalar& b) {
        if (!best || b < *best) best = b;
    };
    if (m == 2) {
        for (int c = 0; c < n; ++c) {
            if (c == pts[0] || c == pts[1]) continue;
            consider(triple_birth(space, pts[0], pts[1], c));
        }
    } else {
        for (int b = 0; b < n; ++b) {
            if (b == pts[0]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (c == pts[0]) continue;
                consider(triple_birth(space, pts[0], b, c));
            }
        }
    }
    return best;
}

StringSet oracle_enumerate(const GapSpace& space, const Scalar& eps_in, int oracle_limit) {
    const int n = space.size();
    if (n > oracle_limit)
        throw std::invalid_argument("space exceeds the oracle size limit");
    const Scalar eps = eps_in_mode(space, eps_in);
    const Scalar zero = Scalar::zero(space.mode());
    if (lt(eps, zero, space.tolerance()))
        throw std::invalid_argument("epsilon must be nonnegative");

    StringSet out(space.mode(), space.tolerance(), n);

    // Sets of size >= 3, by the definition: some order with excess <= eps.
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> pts;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) pts.push_back(i);
        if (pts.size() < 3) continue;

        std::vector<int> perm = pts;
        std::optional<Scalar> min_excess;
        std::vector<int> best_order;
        bool qualifies = false;
        do {
            Scalar sum = zero;
            for (std::size_t i = 0; i + 1 < perm.size(); ++i)
                sum = sum + space.gap(perm[i], perm[i + 1]);
            const Scalar& end_gap = space.gap(perm.front(), perm.back());
            Scalar exc = sum - end_gap;
            if (!min_excess || exc < *min_excess) {
                min_excess = exc;
                best_order = perm;
            }
            if (within_eps(space, sum, end_gap, eps)) qualifies = true;
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (qualifies) out.insert_min(pts, *min_excess, best_order);
    }

    // Sizes 1 and 2, by the definition: containment in a 3-element member.
    std::vector<std::pair<std::vector<int>, StringRecord>> triples;
    for (const auto& [key, rec] : out)
        if (key.size() == 3) triples.emplace_back(key, rec);
    for (const auto& [key, rec] : triples) {
        for (int a : key) out.insert_min({a}, rec.birth, {a});
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                std::vector<int> pair = {key[i], key[j]};
                std::vector<int> witness;
                for (int p : rec.witness)
                    if (p == pair[0] || p == pair[1]) witness.push_back(p);
                out.insert_min(std::move(pair), rec.birth, std::move(witness));
            }
    }
    return out;
}

}  // namespace stringcx
