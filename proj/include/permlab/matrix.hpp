#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/graph.hpp"

namespace permlab {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& x);
/// Strict decimal parse (optional leading '-'); throws ParameterError otherwise.
BigInt parse_decimal(std::string_view text);

/// Dense square matrix of arbitrary-precision integers, stored row-major.
///
/// The 0x0 matrix is a valid value; its permanent is 1.
class ExactMatrix {
public:
    ExactMatrix() = default;
    /// n x n zero matrix.
    explicit ExactMatrix(std::size_t n);
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);
    ExactMatrix(std::size_t n, std::vector<BigInt> row_major);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix ones(std::size_t n);

    std::size_t dim() const noexcept { return n_; }

    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    std::span<const BigInt> data() const noexcept { return data_; }

    bool is_symmetric() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

/// Laplacian D - A of a simple graph.
ExactMatrix laplacian(const Graph& g);

/// Entrywise product; throws ParameterError on a dimension mismatch.
ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b);

/// Rows and columns restricted to `keep` (must be strictly increasing).
ExactMatrix principal_submatrix(const ExactMatrix& a, std::span<const std::size_t> keep);

/// Deletes row i and column i.
ExactMatrix delete_index(const ExactMatrix& a, std::size_t i);

/// Returns a + alpha * E_ii. Requires alpha >= 0.
ExactMatrix add_to_diagonal(const ExactMatrix& a, std::size_t i, const BigInt& alpha);

ExactMatrix entrywise_abs(const ExactMatrix& a);

/// Simultaneous row/column permutation: result(p[i], p[j]) = a(i, j).
ExactMatrix permute_symmetric(const ExactMatrix& a, std::span<const std::size_t> p);

/// Returns B * B^T for a rectangular `rows x cols` integer matrix given row-major.
ExactMatrix gram(std::size_t rows, std::size_t cols, std::span<const BigInt> entries);

struct ZMatrixProfile {
    bool is_symmetric = false;
    bool diag_nonneg = false;
    bool offdiag_nonpos = false;
    /// Edge {i,j} iff i != j and a_ij != 0 (or a_ji != 0 when not symmetric).
    Graph support;

    bool is_z_matrix() const noexcept { return offdiag_nonpos; }
    /// The class on which the sign property is claimed.
    bool bipartite_sign_class() const;
};

ZMatrixProfile z_profile(const ExactMatrix& a);

/// First line "n", then n rows of n integers.
std::string to_matrix_text(const ExactMatrix& a);
ExactMatrix from_matrix_text(std::string_view text);

}  // namespace permlab
