#include "permlab/permanent.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <queue>
#include <thread>

#include "permlab/error.hpp"
#include "permlab/matching.hpp"

namespace permlab {

std::size_t default_max_n() {
    const char* env = std::getenv("PERMLAB_MAX_N");
    if (env == nullptr) return kDefaultMaxN;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        throw ParameterError(std::string("PERMLAB_MAX_N must be a positive integer, got '") + env + "'");
    }
    return value;
}

namespace {

using Int128 = __int128;

BigInt from_int128(Int128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    BigInt out = (hi << 64) + lo;
    return neg ? BigInt(-out) : out;
}

inline std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

/// Entries narrowed to int64 with per-row absolute sums, when every row sum of
/// |a_ij| fits comfortably in 62 bits.
struct NarrowMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> a;  // column-major: a[j * n + i]
    std::size_t product_bits = 0;  // sum_i bitlength(sum_j |a_ij|)
};

std::optional<NarrowMatrix> narrow(const ExactMatrix& m) {
    const auto n = m.dim();
    NarrowMatrix out;
    out.n = n;
    out.a.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_abs = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt& x = m(i, j);
            if (!x.fits_slong_p()) return std::nullopt;
            out.a[j * n + i] = x.get_si();
            row_abs += abs(x);
        }
        if (mpz_sizeinbase(row_abs.get_mpz_t(), 2) > 62) return std::nullopt;
        out.product_bits += sgn(row_abs) == 0 ? 0 : mpz_sizeinbase(row_abs.get_mpz_t(), 2);
    }
    return out;
}

// Each kernel sums sign(S) * prod_i rowsum_i(S) over Gray-code indices [lo, hi),
// lo >= 1, with sign(S) = (-1)^(n - |S|).

Int128 ryser_chunk_int128(const NarrowMatrix& m, std::uint64_t lo, std::uint64_t hi) {
    const auto n = m.n;
    std::vector<std::int64_t> rs(n, 0);
    std::uint64_t s = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
        if ((s >> j) & 1)
            for (std::size_t i = 0; i < n; ++i) rs[i] += m.a[j * n + i];
    Int128 total = 0;
    for (std::uint64_t k = lo;;) {
        Int128 prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rs[i];
        if (((n - std::popcount(s)) & 1) != 0) prod = -prod;
        total += prod;
        if (++k >= hi) break;
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        s ^= std::uint64_t{1} << j;
        const std::int64_t* col = &m.a[j * n];
        if ((s >> j) & 1) {
            for (std::size_t i = 0; i < n; ++i) rs[i] += col[i];
        } else {
            for (std::size_t i = 0; i < n; ++i) rs[i] -= col[i];
        }
    }
    return total;
}

BigInt ryser_chunk_narrow(const NarrowMatrix& m, std::uint64_t lo, std::uint64_t hi) {
    const auto n = m.n;
    std::vector<std::int64_t> rs(n, 0);
    std::uint64_t s = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
        if ((s >> j) & 1)
            for (std::size_t i = 0; i < n; ++i) rs[i] += m.a[j * n + i];
    BigInt total = 0;
    BigInt prod;
    for (std::uint64_t k = lo;;) {
        bool zero = std::find(rs.begin(), rs.end(), 0) != rs.end();
        if (!zero) {
            mpz_set_si(prod.get_mpz_t(), rs[0]);
            for (std::size_t i = 1; i < n; ++i) mpz_mul_si(prod.get_mpz_t(), prod.get_mpz_t(), rs[i]);
            if (((n - std::popcount(s)) & 1) != 0) {
                mpz_sub(total.get_mpz_t(), total.get_mpz_t(), prod.get_mpz_t());
            } else {
                mpz_add(total.get_mpz_t(), total.get_mpz_t(), prod.get_mpz_t());
            }
        }
        if (++k >= hi) break;
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        s ^= std::uint64_t{1} << j;
        const std::int64_t* col = &m.a[j * n];
        if ((s >> j) & 1) {
            for (std::size_t i = 0; i < n; ++i) rs[i] += col[i];
        } else {
            for (std::size_t i = 0; i < n; ++i) rs[i] -= col[i];
        }
    }
    return total;
}

BigInt ryser_chunk_big(const ExactMatrix& m, std::uint64_t lo, std::uint64_t hi) {
    const auto n = m.dim();
    std::vector<BigInt> rs(n, BigInt(0));
    std::uint64_t s = gray(lo);
    for (std::size_t j = 0; j < n; ++j)
        if ((s >> j) & 1)
            for (std::size_t i = 0; i < n; ++i) rs[i] += m(i, j);
    BigInt total = 0;
    BigInt prod;
    for (std::uint64_t k = lo;;) {
        prod = 1;
        for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= rs[i];
        if (((n - std::popcount(s)) & 1) != 0) {
            total -= prod;
        } else {
            total += prod;
        }
        if (++k >= hi) break;
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        s ^= std::uint64_t{1} << j;
        if ((s >> j) & 1) {
            for (std::size_t i = 0; i < n; ++i) rs[i] += m(i, j);
        } else {
            for (std::size_t i = 0; i < n; ++i) rs[i] -= m(i, j);
        }
    }
    return total;
}

}  // namespace

BigInt permanent(const ExactMatrix& a, const PermanentOptions& options) {
    const auto n = a.dim();
    if (n > options.max_n) {
        throw SizeLimitError("permanent: dimension " + std::to_string(n) + " exceeds the size cap " +
                             std::to_string(options.max_n) + " (set PERMLAB_MAX_N to raise it)");
    }
    if (n > 62) throw SizeLimitError("permanent: dimension above 62 is not supported");
    if (n == 0) return 1;

    const std::uint64_t steps = std::uint64_t{1} << n;
    const auto narrowed = narrow(a);
    const bool fits128 = narrowed && narrowed->product_bits + n + 1 <= 126;

    auto run = [&](std::uint64_t lo, std::uint64_t hi) -> BigInt {
        if (lo >= hi) return 0;
        if (fits128) return from_int128(ryser_chunk_int128(*narrowed, lo, hi));
        if (narrowed) return ryser_chunk_narrow(*narrowed, lo, hi);
        return ryser_chunk_big(a, lo, hi);
    };

    // Chunks are contiguous Gray-code index ranges; partial sums are exact so
    // the total does not depend on how the range is split.
    const std::uint64_t jobs = std::max<unsigned>(1, options.jobs);
    const std::uint64_t chunks = std::min<std::uint64_t>(jobs, steps - 1);
    if (chunks <= 1 || n < 12) return run(1, steps);

    std::vector<BigInt> partial(chunks);
    std::vector<std::thread> workers;
    const std::uint64_t span = (steps - 1) / chunks;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = 1 + c * span;
        const std::uint64_t hi = c + 1 == chunks ? steps : lo + span;
        workers.emplace_back([&, c, lo, hi] { partial[c] = run(lo, hi); });
    }
    for (auto& w : workers) w.join();
    BigInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

BigInt permanent_naive(const ExactMatrix& a) {
    const auto n = a.dim();
    if (n > kNaiveMaxN) {
        throw SizeLimitError("permanent_naive: dimension " + std::to_string(n) + " exceeds " +
                             std::to_string(kNaiveMaxN));
    }
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    BigInt total = 0;
    BigInt term;
    do {
        term = 1;
        for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= a(i, sigma[i]);
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

BigInt permanent_column_expansion(const ExactMatrix& a, std::size_t j, const PermanentOptions& options) {
    const auto n = a.dim();
    if (j >= n) throw ParameterError("permanent_column_expansion: column out of range");
    BigInt total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a(i, j)) == 0) continue;
        std::vector<BigInt> minor;
        minor.reserve((n - 1) * (n - 1));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor.push_back(a(r, c));
        }
        total += a(i, j) * permanent(ExactMatrix(n - 1, std::move(minor)), options);
    }
    return total;
}

// ---------------------------------------------------------------------------

PermutationTerms::PermutationTerms(const ExactMatrix& a, bool nonzero_only)
    : matrix_(std::make_shared<const ExactMatrix>(a)), nonzero_only_(nonzero_only) {}

PermutationTerms::iterator PermutationTerms::begin() const { return iterator(matrix_, nonzero_only_); }

PermutationTerms::iterator::iterator(std::shared_ptr<const ExactMatrix> m, bool nonzero_only)
    : m_(std::move(m)), nonzero_only_(nonzero_only), done_(false) {
    const auto n = m_->dim();
    next_col_.assign(n, 0);
    used_.assign(n, false);
    prefix_.assign(n + 1, BigInt(1));
    current_.sigma.assign(n, 0);
    advance();
}

void PermutationTerms::iterator::advance() {
    if (done_) return;
    const auto n = m_->dim();
    if (n == 0) {
        // The empty permutation is the single term, produced once.
        if (started_) {
            done_ = true;
        } else {
            started_ = true;
            current_.value = 1;
        }
        return;
    }
    auto& sigma = current_.sigma;
    std::size_t row = 0;
    if (!started_) {
        started_ = true;
        next_col_[0] = 0;
    } else {
        row = n - 1;
        used_[sigma[row]] = false;
        next_col_[row] = sigma[row] + 1;
    }
    for (;;) {
        bool placed = false;
        for (std::size_t c = next_col_[row]; c < n; ++c) {
            if (used_[c]) continue;
            if (nonzero_only_ && sgn((*m_)(row, c)) == 0) continue;
            sigma[row] = c;
            used_[c] = true;
            prefix_[row + 1] = prefix_[row] * (*m_)(row, c);
            placed = true;
            break;
        }
        if (placed) {
            if (row + 1 == n) {
                current_.value = prefix_[n];
                return;
            }
            ++row;
            next_col_[row] = 0;
        } else {
            if (row == 0) {
                done_ = true;
                return;
            }
            --row;
            used_[sigma[row]] = false;
            next_col_[row] = sigma[row] + 1;
        }
    }
}

PermutationTerms permutation_terms(const ExactMatrix& a, bool nonzero_only) {
    if (a.dim() > kNaiveMaxN) {
        throw SizeLimitError("permutation_terms: dimension " + std::to_string(a.dim()) + " exceeds " +
                             std::to_string(kNaiveMaxN));
    }
    return PermutationTerms(a, nonzero_only);
}

// ---------------------------------------------------------------------------

std::optional<ZeroBlockWitness> structural_zero(const ExactMatrix& a) {
    const auto n = a.dim();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(a(i, j)) != 0) adj[i].push_back(j);

    const auto m = hopcroft_karp(adj, n);
    if (m.size == n) return std::nullopt;

    // Alternating search from unmatched rows: row -> any column, column -> its mate.
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    std::queue<std::size_t> q;
    for (std::size_t r = 0; r < n; ++r) {
        if (m.row_mate[r] == kUnmatched) {
            row_seen[r] = true;
            q.push(r);
        }
    }
    while (!q.empty()) {
        auto r = q.front();
        q.pop();
        for (auto c : adj[r]) {
            if (col_seen[c]) continue;
            col_seen[c] = true;
            // Every reachable column is matched, otherwise the matching was not maximum.
            auto mate = m.col_mate[c];
            if (mate != kUnmatched && !row_seen[mate]) {
                row_seen[mate] = true;
                q.push(mate);
            }
        }
    }
    ZeroBlockWitness w;
    for (std::size_t r = 0; r < n; ++r)
        if (row_seen[r]) w.rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c)
        if (!col_seen[c]) w.cols.push_back(c);
    return w;
}

bool is_valid_zero_block(const ExactMatrix& a, const ZeroBlockWitness& w) {
    const auto n = a.dim();
    auto strictly_increasing_in_range = [n](const std::vector<std::size_t>& v) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] >= n || (k > 0 && v[k] <= v[k - 1])) return false;
        }
        return true;
    };
    if (!strictly_increasing_in_range(w.rows) || !strictly_increasing_in_range(w.cols)) return false;
    if (w.rows.size() + w.cols.size() <= n) return false;
    for (auto r : w.rows)
        for (auto c : w.cols)
            if (sgn(a(r, c)) != 0) return false;
    return true;
}

}  // namespace permlab
