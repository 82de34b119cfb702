#include "stringcx/homology.hpp"

#include <map>

namespace stringcx {

namespace {

int top_bit(const std::vector<std::uint64_t>& col) {
    for (int w = static_cast<int>(col.size()) - 1; w >= 0; --w)
        if (col[w]) {
            int b = 63;
            while (!(col[w] >> b & 1)) --b;
            return w * 64 + b;
        }
    return -1;
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
}

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

long gf2_rank(std::vector<std::vector<std::uint64_t>> columns) {
    std::map<int, std::vector<std::uint64_t>> pivots;
    long rank = 0;
    for (auto& col : columns) {
        int p = top_bit(col);
        while (p >= 0) {
            auto it = pivots.find(p);
            if (it == pivots.end()) {
                pivots.emplace(p, std::move(col));
                ++rank;
                break;
            }
            xor_into(col, it->second);
            p = top_bit(col);
        }
    }
    return rank;
}

std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    const int bound = std::min(rows, cols);
    std::vector<BigInt> diag;

    for (int t = 0; t < bound; ++t) {
        // Pivot: minimal absolute nonzero entry of the trailing submatrix.
        int pr = -1, pc = -1;
        BigInt best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr < 0 || big_abs(a[i][j]) < best)) {
                    pr = i;
                    pc = j;
                    best = big_abs(a[i][j]);
                }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        if (pc != t)
            for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear the pivot column; a nonzero remainder has smaller
            // absolute value than the pivot, so swapping it up terminates.
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Clear the pivot row.
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility: the pivot must divide the trailing submatrix so
            // the diagonal forms a divisor chain.
            for (int i = t + 1; i < rows && !dirty; ++i)
                for (int j = t + 1; j < cols && !dirty; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int c = t; c < cols; ++c) a[t][c] += a[i][c];
                        dirty = true;
                    }
        }
        diag.push_back(big_abs(a[t][t]));
    }
    return diag;
}

}  // namespace stringcx
