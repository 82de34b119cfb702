#pragma once

#include "stringcx/scalar.hpp"

#include <cstdint>
#include <vector>

namespace stringcx {

/// Rank of a GF(2) matrix given as column bitsets (bit i of word i/64 set
/// when the row-i entry is 1).
long gf2_rank(std::vector<std::vector<std::uint64_t>> columns);

/// Diagonal of the Smith normal form of an integer matrix: nonnegative
/// entries d1 | d2 | ... | dr for the nonzero part. Elimination pivots on
/// the entry of minimal absolute value to limit coefficient growth.
std::vector<BigInt> smith_normal_form(std::vector<std::vector<BigInt>> m);

}  // namespace stringcx
