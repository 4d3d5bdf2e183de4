#include "permlab/closed_forms.hpp"

#include <stdexcept>

#include "permlab/error.hpp"

namespace permlab {

namespace {

void require_cycle(std::size_t n, const char* what) {
    if (n < 3) throw ParameterError(std::string(what) + ": cycle length must be >= 3");
}

BigInt pow_ui(long base, std::size_t exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return out;
}

}  // namespace

std::vector<BigInt> cycle_matching_counts(std::size_t n) {
    require_cycle(n, "cycle_matching_counts");
    std::vector<BigInt> prev2{1, 3};     // C_3
    std::vector<BigInt> prev1{1, 4, 2};  // C_4
    if (n == 3) return prev2;
    for (std::size_t k = 5; k <= n; ++k) {
        std::vector<BigInt> cur(k / 2 + 1, BigInt(0));
        for (std::size_t t = 0; t < cur.size(); ++t) {
            if (t < prev1.size()) cur[t] += prev1[t];
            if (t >= 1 && t - 1 < prev2.size()) cur[t] += prev2[t - 1];
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

std::pair<BigInt, BigInt> cycle_uv_by_recurrence(std::size_t n) {
    require_cycle(n, "cycle_uv_by_recurrence");
    BigInt u2 = 14, u1 = 34;
    BigInt v2 = 76, v1 = 322;
    if (n == 3) return {u2, v2};
    for (std::size_t k = 5; k <= n; ++k) {
        BigInt u = 2 * u1 + u2;
        BigInt v = 4 * v1 + v2;
        u2 = std::move(u1);
        u1 = std::move(u);
        v2 = std::move(v1);
        v1 = std::move(v);
    }
    return {u1, v1};
}

CycleSeries cycle_series(std::size_t n) {
    require_cycle(n, "cycle_series");
    CycleSeries s;
    s.n = n;
    s.matchings = cycle_matching_counts(n);
    s.U = 0;
    s.V = 0;
    for (std::size_t t = 0; t < s.matchings.size(); ++t) {
        s.U += s.matchings[t] * pow_ui(2, n - 2 * t);
        s.V += s.matchings[t] * pow_ui(4, n - 2 * t);
    }
    auto [u, v] = cycle_uv_by_recurrence(n);
    if (u != s.U || v != s.V) {
        throw std::logic_error("cycle_series: weighted sums disagree with the recurrence at n=" +
                               std::to_string(n));
    }
    s.F = s.U * s.U - s.V - 4 * s.U;
    return s;
}

CyclePermanents cycle_laplacian_permanents(std::size_t n) {
    require_cycle(n, "cycle_laplacian_permanents");
    auto s = cycle_series(n);
    // The two oriented n-cycles each weigh (-1)^n in per(L) and 1 in per(L o L).
    const bool odd = n % 2 == 1;
    return CyclePermanents{odd ? BigInt(s.U - 2) : BigInt(s.U + 2), s.V + 2, !odd};
}

BigInt odd_cycle_gap(std::size_t n) {
    if (n < 3 || n % 2 == 0) throw ParameterError("odd_cycle_gap: n must be odd and >= 3");
    auto s = cycle_series(n);
    auto p = cycle_laplacian_permanents(n);
    BigInt gap = p.per * p.per - p.per_hadamard;
    if (gap != s.F + 2) throw std::logic_error("odd_cycle_gap: gap differs from F_n + 2");
    return gap;
}

CliqueFormValues clique_form(std::size_t n, std::size_t s) {
    if (n < 2) throw ParameterError("clique_form: n must be >= 2");
    if (s < 1) throw ParameterError("clique_form: s must be >= 1");
    CliqueFormValues out;
    out.n = n;
    out.s = s;
    const BigInt x = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n - 2);
    const BigInt y = -BigInt(static_cast<unsigned long>(n));
    // Walk k downwards so that s!/k! = (k+1)(k+2)...s is a running product.
    BigInt p = 0, q = 0;
    BigInt fall = 1;  // s!/k!
    BigInt xk, yk;
    for (std::size_t k = s + 1; k-- > 0;) {
        mpz_pow_ui(xk.get_mpz_t(), x.get_mpz_t(), k);
        mpz_pow_ui(yk.get_mpz_t(), y.get_mpz_t(), k);
        p += fall * xk;
        q += fall * yk;
        fall *= static_cast<unsigned long>(k);
    }
    out.P = p;
    out.Q = q;
    out.per_MM = p;
    out.per_M = s % 2 == 0 ? q : BigInt(-q);
    return out;
}

CliqueScalarResult clique_scalar_holds(std::size_t n, std::size_t m) {
    if (n < 2) throw ParameterError("clique_scalar_holds: n must be >= 2");
    if (m != n && m + 1 != n) throw ParameterError("clique_scalar_holds: m must be n-1 or n");
    auto f = clique_form(n, m);
    return CliqueScalarResult{f.P <= f.Q * f.Q, f.P, f.Q};
}

}  // namespace permlab
