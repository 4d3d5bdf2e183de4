#include "permlab/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "permlab/error.hpp"
#include "text_util.hpp"

namespace permlab {

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParameterError("not a decimal integer: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text), 10);
}

ExactMatrix::ExactMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw ParameterError("ExactMatrix: rows must form a square matrix");
        for (long v : r) data_.emplace_back(v);
    }
}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<BigInt> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) {
        throw ParameterError("ExactMatrix: expected " + std::to_string(n * n) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(std::size_t n) {
    return ExactMatrix(n, std::vector<BigInt>(n * n, BigInt(1)));
}

bool ExactMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

ExactMatrix laplacian(const Graph& g) {
    ExactMatrix l(g.order());
    for (const auto& e : g.edges()) {
        l(e.u, e.v) = -1;
        l(e.v, e.u) = -1;
        l(e.u, e.u) += 1;
        l(e.v, e.v) += 1;
    }
    return l;
}

ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ParameterError("hadamard: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
    }
    ExactMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) * b(i, j);
    return out;
}

ExactMatrix principal_submatrix(const ExactMatrix& a, std::span<const std::size_t> keep) {
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= a.dim()) {
            throw ParameterError("principal_submatrix: index " + std::to_string(keep[k]) +
                                 " out of range for dimension " + std::to_string(a.dim()));
        }
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw ParameterError("principal_submatrix: index set must be strictly increasing");
        }
    }
    ExactMatrix out(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = a(keep[r], keep[c]);
    return out;
}

ExactMatrix delete_index(const ExactMatrix& a, std::size_t i) {
    if (i >= a.dim()) {
        throw ParameterError("delete_index: index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(a.dim()));
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (k != i) keep.push_back(k);
    return principal_submatrix(a, keep);
}

ExactMatrix add_to_diagonal(const ExactMatrix& a, std::size_t i, const BigInt& alpha) {
    if (i >= a.dim()) {
        throw ParameterError("add_to_diagonal: index " + std::to_string(i) + " out of range for dimension " +
                             std::to_string(a.dim()));
    }
    if (sgn(alpha) < 0) throw ParameterError("add_to_diagonal: alpha must be nonnegative");
    ExactMatrix out = a;
    out(i, i) += alpha;
    return out;
}

ExactMatrix entrywise_abs(const ExactMatrix& a) {
    ExactMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = abs(a(i, j));
    return out;
}

ExactMatrix permute_symmetric(const ExactMatrix& a, std::span<const std::size_t> p) {
    const auto n = a.dim();
    if (p.size() != n) throw ParameterError("permute_symmetric: permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (auto v : p) {
        if (v >= n || hit[v]) throw ParameterError("permute_symmetric: not a permutation");
        hit[v] = true;
    }
    ExactMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(p[i], p[j]) = a(i, j);
    return out;
}

ExactMatrix gram(std::size_t rows, std::size_t cols, std::span<const BigInt> entries) {
    if (entries.size() != rows * cols) throw ParameterError("gram: entry count does not match shape");
    ExactMatrix out(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i; j < rows; ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k < cols; ++k) s += entries[i * cols + k] * entries[j * cols + k];
            out(i, j) = s;
            out(j, i) = s;
        }
    }
    return out;
}

bool ZMatrixProfile::bipartite_sign_class() const {
    return is_symmetric && diag_nonneg && offdiag_nonpos && bipartition(support).has_value();
}

ZMatrixProfile z_profile(const ExactMatrix& a) {
    ZMatrixProfile p;
    p.is_symmetric = a.is_symmetric();
    p.diag_nonneg = true;
    p.offdiag_nonpos = true;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (sgn(a(i, i)) < 0) p.diag_nonneg = false;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            if (sgn(a(i, j)) > 0) p.offdiag_nonpos = false;
            if (i < j && (sgn(a(i, j)) != 0 || sgn(a(j, i)) != 0)) edges.emplace_back(i, j);
        }
    }
    p.support = Graph(a.dim(), std::move(edges));
    return p;
}

std::string to_matrix_text(const ExactMatrix& a) {
    std::ostringstream out;
    out << a.dim() << '\n';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j) out << ' ';
            out << to_decimal(a(i, j));
        }
        out << '\n';
    }
    return out.str();
}

ExactMatrix from_matrix_text(std::string_view text) {
    auto lines = detail::split_content_lines(text);
    if (lines.empty()) throw ParseError("matrix: missing dimension line", 1);
    auto head = detail::split_ws(lines.front().text);
    if (head.size() != 1) {
        throw ParseError("matrix: line " + std::to_string(lines.front().number) + ": expected 'n'",
                         lines.front().number);
    }
    const auto n = detail::parse_size(head[0], "matrix", lines.front().number);
    if (lines.size() != n + 1) {
        std::size_t where = lines.size() > n + 1 ? lines[n + 1].number : lines.back().number + 1;
        throw ParseError("matrix: expected " + std::to_string(n) + " rows, got " +
                             std::to_string(lines.size() - 1) + " (line " + std::to_string(where) + ")",
                         where);
    }
    std::vector<BigInt> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& line = lines[r + 1];
        auto tok = detail::split_ws(line.text);
        if (tok.size() != n) {
            throw ParseError("matrix: line " + std::to_string(line.number) + ": expected " +
                                 std::to_string(n) + " entries, got " + std::to_string(tok.size()),
                             line.number);
        }
        for (auto t : tok) {
            try {
                entries.push_back(parse_decimal(t));
            } catch (const ParameterError&) {
                throw ParseError("matrix: line " + std::to_string(line.number) + ": bad integer '" +
                                     std::string(t) + "'",
                                 line.number);
            }
        }
    }
    return ExactMatrix(n, std::move(entries));
}

}  // namespace permlab
