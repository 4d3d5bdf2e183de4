#pragma once

#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab {

/// Default subset-iteration ceiling for Ryser.
inline constexpr std::size_t kDefaultMaxN = 30;
/// Dimension guard for the factorial-time routines.
inline constexpr std::size_t kNaiveMaxN = 12;

/// kDefaultMaxN, or the value of the PERMLAB_MAX_N environment variable when
/// it holds a positive integer.
std::size_t default_max_n();

struct PermanentOptions {
    std::size_t max_n = default_max_n();
    /// Worker threads. The result does not depend on this value.
    unsigned jobs = 1;
};

/// Ryser inclusion-exclusion over column subsets in Gray-code order, so each
/// step adds or removes one column from the running row sums. Throws
/// SizeLimitError when dim() > options.max_n.
BigInt permanent(const ExactMatrix& a, const PermanentOptions& options = {});

/// Sum over all n! permutations. Throws SizeLimitError above kNaiveMaxN.
BigInt permanent_naive(const ExactMatrix& a);

/// Expansion along column j: sum_i a(i,j) * per(A with row i, column j removed).
/// Minors are evaluated with `permanent`.
BigInt permanent_column_expansion(const ExactMatrix& a, std::size_t j, const PermanentOptions& options = {});

struct PermTerm {
    std::vector<std::size_t> sigma;
    BigInt value;
};

/// Lazily enumerates (sigma, prod_i a(i, sigma(i))) in lexicographic order of
/// sigma. With `nonzero_only`, branches that hit a zero entry are pruned, so
/// exactly the terms with nonzero value are produced.
class PermutationTerms {
public:
    class iterator;

    PermutationTerms(const ExactMatrix& a, bool nonzero_only = false);

    iterator begin() const;
    static std::default_sentinel_t end() { return {}; }

private:
    std::shared_ptr<const ExactMatrix> matrix_;
    bool nonzero_only_;
};

class PermutationTerms::iterator {
public:
    using value_type = PermTerm;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::shared_ptr<const ExactMatrix> m, bool nonzero_only);

    const PermTerm& operator*() const { return current_; }
    const PermTerm* operator->() const { return &current_; }
    iterator& operator++() {
        advance();
        return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

private:
    void advance();

    std::shared_ptr<const ExactMatrix> m_;
    bool nonzero_only_ = false;
    bool started_ = false;
    bool done_ = true;
    std::vector<std::size_t> next_col_;
    std::vector<bool> used_;
    std::vector<BigInt> prefix_;
    PermTerm current_;
};

/// Throws SizeLimitError above kNaiveMaxN.
PermutationTerms permutation_terms(const ExactMatrix& a, bool nonzero_only = false);

/// Rows R and columns S with a(r, s) = 0 for all r in R, s in S.
struct ZeroBlockWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Returns a zero block with |R| + |S| > n exactly when the nonzero pattern of
/// `a` has no perfect matching. The block is read off a maximum matching of the
/// support (Koenig): R = rows reachable from unmatched rows by alternating
/// paths, S = columns not reachable. |R| + |S| = 2n - (matching size).
std::optional<ZeroBlockWitness> structural_zero(const ExactMatrix& a);

/// Checks the witness conditions: all entries zero and |R| + |S| > n.
bool is_valid_zero_block(const ExactMatrix& a, const ZeroBlockWitness& w);

}  // namespace permlab
