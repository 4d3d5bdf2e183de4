#include "permlab/matching.hpp"

#include <queue>

namespace permlab {

namespace {

class HopcroftKarp {
public:
    HopcroftKarp(const std::vector<std::vector<std::size_t>>& adj, std::size_t cols)
        : adj_(adj), m_{std::vector<std::size_t>(adj.size(), kUnmatched), std::vector<std::size_t>(cols, kUnmatched), 0},
          level_(adj.size(), kInf) {}

    BipartiteMatching run() {
        while (bfs()) {
            for (std::size_t r = 0; r < adj_.size(); ++r) {
                if (m_.row_mate[r] == kUnmatched && dfs(r)) ++m_.size;
            }
        }
        return std::move(m_);
    }

private:
    static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    // Layers free rows at 0; returns whether some free column is reachable.
    bool bfs() {
        std::queue<std::size_t> q;
        for (std::size_t r = 0; r < adj_.size(); ++r) {
            if (m_.row_mate[r] == kUnmatched) {
                level_[r] = 0;
                q.push(r);
            } else {
                level_[r] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            auto r = q.front();
            q.pop();
            for (auto c : adj_[r]) {
                auto mate = m_.col_mate[c];
                if (mate == kUnmatched) {
                    found = true;
                } else if (level_[mate] == kInf) {
                    level_[mate] = level_[r] + 1;
                    q.push(mate);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t r) {
        for (auto c : adj_[r]) {
            auto mate = m_.col_mate[c];
            if (mate == kUnmatched || (level_[mate] == level_[r] + 1 && dfs(mate))) {
                m_.row_mate[r] = c;
                m_.col_mate[c] = r;
                return true;
            }
        }
        level_[r] = kInf;
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    BipartiteMatching m_;
    std::vector<std::size_t> level_;
};

}  // namespace

BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& row_adj, std::size_t cols) {
    return HopcroftKarp(row_adj, cols).run();
}

}  // namespace permlab
