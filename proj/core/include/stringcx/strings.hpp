#pragma once

#include "stringcx/gap_space.hpp"

#include <map>
#include <optional>
#include <vector>

namespace stringcx {

/// An index sequence together with its excess: the amount by which the sum
/// of consecutive gaps exceeds the gap between the first and last point.
/// The excess is nonnegative in every valid gap space, and zero exactly for
/// direct orders of strings.
struct OrderedString {
    std::vector<int> order;
    Scalar excess;
};

struct StringRecord {
    Scalar birth;               // minimal eps for which the set is an eps-string
    std::vector<int> witness;   // one direct order at that eps
};

/// A downward-closed family of eps-strings keyed by canonical (sorted) index
/// tuple. Iteration order is lexicographic in the tuple.
class StringSet {
public:
    using Map = std::map<std::vector<int>, StringRecord>;

    StringSet() = default;
    StringSet(ScalarMode mode, double tolerance, int point_count)
        : mode_(mode), tolerance_(tolerance), point_count_(point_count) {}

    bool contains(const std::vector<int>& canonical_set) const {
        return members_.count(canonical_set) > 0;
    }
    const StringRecord* find(const std::vector<int>& canonical_set) const {
        auto it = members_.find(canonical_set);
        return it == members_.end() ? nullptr : &it->second;
    }

    /// Inserts, keeping the smaller birth (first witness wins on ties).
    void insert_min(std::vector<int> canonical_set, const Scalar& birth,
                    std::vector<int> witness);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Map::const_iterator begin() const { return members_.begin(); }
    Map::const_iterator end() const { return members_.end(); }
    const Map& members() const { return members_; }
    Map& members() { return members_; }

    ScalarMode mode() const { return mode_; }
    double tolerance() const { return tolerance_; }
    int point_count() const { return point_count_; }

private:
    Map members_;
    ScalarMode mode_ = ScalarMode::exact;
    double tolerance_ = 0.0;
    int point_count_ = 0;
};

/// Excess of an ordered sequence of distinct points: sum of consecutive gaps
/// minus the gap between the extremes; 0 for a single point. Throws on
/// repeated or out-of-range indices.
Scalar excess(const GapSpace& space, const std::vector<int>& order);

/// Whether the subset is an eps-string: for size >= 3, some order has excess
/// <= eps; sets of size 1 or 2 qualify exactly when they are contained in a
/// 3-element eps-string.
bool is_eps_string(const GapSpace& space, const std::vector<int>& subset, const Scalar& eps);
bool is_string(const GapSpace& space, const std::vector<int>& subset);

/// All direct orders of a string. A string of length >= 3 yields every order
/// with excess zero; a 2-element string yields the orders that extend (as a
/// subsequence) to a direct order of a 3-element string; a singleton yields
/// its unique order. Throws std::invalid_argument when the subset is not a
/// string.
std::vector<OrderedString> direct_orders(const GapSpace& space, const std::vector<int>& subset);

/// The unordered extreme pair of a string in a metric space: the two points
/// at maximal distance, which are the first and last point of every direct
/// order. Requires the metric flag and a string of length >= 2; returns the
/// pair with the smaller index first.
std::pair<int, int> endpoints(const GapSpace& space, const std::vector<int>& str);

/// Enumerates every eps-string of size <= max_size (default: no cap).
///
/// Works by depth-first extension of ordered sequences, pruning when the
/// running excess exceeds eps. Appending a point never decreases the excess
/// (the triangle inequality applied to the last step), so the pruned tree
/// visits exactly the orders whose every prefix qualifies, which by the
/// substring lemma is all orders of all eps-strings. The recorded birth is
/// therefore the exact minimum excess over all orders of each set.
/// Singletons and pairs are licensed by the 3-element sets found.
StringSet enumerate_eps_strings(const GapSpace& space, const Scalar& eps, int max_size = -1);

/// Minimal eps for which the subset is an eps-string, or absent when no
/// finite value exists (singletons and pairs in spaces with fewer than 3
/// points). For size >= 3 this runs a Held-Karp style bitmask DP: cheapest
/// Hamiltonian path for each endpoint pair, minus the end gap. Sizes 1 and 2
/// take the minimum over all 3-element supersets.
std::optional<Scalar> birth(const GapSpace& space, const std::vector<int>& subset);

/// Brute-force reference enumerator: every nonempty subset, every order,
/// straight from the definitions. Only for spaces with at most oracle_limit
/// points; throws above the limit.
StringSet oracle_enumerate(const GapSpace& space, const Scalar& eps, int oracle_limit = 8);

}  // namespace stringcx
