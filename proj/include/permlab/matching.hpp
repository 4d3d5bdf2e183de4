#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace permlab {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct BipartiteMatching {
    /// row_mate[r] is the column matched to row r, or kUnmatched.
    std::vector<std::size_t> row_mate;
    /// col_mate[c] is the row matched to column c, or kUnmatched.
    std::vector<std::size_t> col_mate;
    std::size_t size = 0;
};

/// Hopcroft-Karp maximum matching. `row_adj[r]` lists the columns adjacent to
/// row r; columns are numbered 0..cols-1.
BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& row_adj, std::size_t cols);

}  // namespace permlab
