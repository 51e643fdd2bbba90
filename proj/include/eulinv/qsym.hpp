#pragma once

/**
 * @file qsym.hpp
 * @brief Principal specializations of fundamental and signed (Poirier)
 *        quasisymmetric functions, and of Schur functions.
 *
 * F_{n,S}(1^m) counts index chains 1 <= i_1 <= ... <= i_n <= m, strict at the
 * positions of S. The signed version evaluated at (x, y) = (1^m, 0 1^{m-1})
 * additionally forces i_j >= 2 wherever the sign epsilon_j is negative.
 * Both are counted by dynamic programming over chain positions.
 */

#include <string>
#include <vector>

#include "report.hpp"
#include "tableaux.hpp"

namespace eulinv {

struct SpecializationCount {
    BigInt value;
    int n = 0;
    int m = 0;

    friend bool operator==(const SpecializationCount&, const SpecializationCount&) = default;
};

namespace detail {

/// Chains of length n with values in [1, m]; strict_after[j] forces
/// i_{j+1} < i_{j+2} (0-based j), lower_bound[j] bounds i_{j+1} from below.
inline BigInt count_chains(int n, int m, const std::vector<bool>& strict_after, const std::vector<int>& lower_bound) {
    if (n == 0) return 1;
    if (m <= 0) return 0;
    std::vector<BigInt> ways(m + 1);
    for (int v = lower_bound[0]; v <= m; ++v) ways[v] = 1;
    for (int j = 1; j < n; ++j) {
        std::vector<BigInt> next(m + 1);
        BigInt running = 0;  // sum of ways[u] for u < v (strict) or u <= v (weak)
        for (int v = 1; v <= m; ++v) {
            if (!strict_after[j - 1]) running += ways[v];
            if (v >= lower_bound[j]) next[v] = running;
            if (strict_after[j - 1]) running += ways[v];
        }
        ways = std::move(next);
    }
    BigInt total = 0;
    for (int v = 1; v <= m; ++v) total += ways[v];
    return total;
}

}  // namespace detail

/// F_{n,S}(1^m).
inline SpecializationCount fundamental_spec(int n, const DescentSet& s, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("fundamental_spec: negative size");
    std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
    for (int i : s) {
        if (i < 1 || i >= n) throw std::invalid_argument("fundamental_spec: S must be a subset of [n-1]");
        strict[i - 1] = true;
    }
    std::vector<int> lower(n, 1);
    return {detail::count_chains(n, m, strict, lower), n, m};
}

/// F_w(1^m, 0 1^{m-1}) for a signed descent set.
inline SpecializationCount signed_fundamental_spec(const SignedDescentSet& sdes, int m) {
    const int n = sdes.size();
    if (m < 0) throw std::invalid_argument("signed_fundamental_spec: negative m");
    std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
    for (int i : sdes.descents) {
        if (i < 1 || i >= n) throw std::invalid_argument("signed_fundamental_spec: descent out of range");
        strict[i - 1] = true;
    }
    std::vector<int> lower(n, 1);
    for (int j = 0; j < n; ++j)
        if (sdes.signs[j] == Sign::minus) lower[j] = 2;
    return {detail::count_chains(n, m, strict, lower), n, m};
}

/// s_lambda(1^m) as the sum over standard tableaux of F_{n,Des(Q)}(1^m).
inline SpecializationCount schur_spec(const Partition& shape, int m) {
    const int n = shape.weight();
    BigInt total = 0;
    for_each_syt(shape, [&](const StandardTableau& q) { total += fundamental_spec(n, syt_descent_set(q), m).value; });
    return {total, n, m};
}

/// Sum over lambda |- n of s_lambda(1^m) against [t^n] (1-t)^{-m} (1-t^2)^{-C(m,2)}.
inline Report verify_cauchy_spec(int n_max, int m_max) {
    Report report("cauchy");
    for (int m = 0; m <= m_max; ++m) {
        const auto rhs_series =
            expand_negative_binomial_product(m, static_cast<long long>(binomial(m, 2)), static_cast<std::size_t>(n_max));
        for (int n = 0; n <= n_max; ++n) {
            BigInt lhs = 0;
            for (const auto& lam : partitions(n)) lhs += schur_spec(lam, m).value;
            report.expect_equal("cauchy", params({{"n", n}, {"m", m}}), lhs, rhs_series[static_cast<std::size_t>(n)]);
        }
    }
    return report;
}

/// Sum over Q in SYB(lambda, mu) of F_Q(1^m, 0 1^{m-1}) against s_lambda(1^m) s_mu(1^{m-1}).
inline Report verify_signed_schur_spec(int n_max, int m_max) {
    Report report("signed-schur");
    for (int n = 0; n <= n_max; ++n)
        for (const auto& shape : bipartitions(n)) {
            const auto sybs = enumerate_syb(shape);
            for (int m = 1; m <= m_max; ++m) {
                BigInt lhs = 0;
                for (const auto& q : sybs) lhs += signed_fundamental_spec(syb_signed_descent_set(q), m).value;
                const BigInt rhs = schur_spec(shape.plus, m).value * schur_spec(shape.minus, m - 1).value;
                Params p{{"lambda", shape.plus.to_string()}, {"mu", shape.minus.to_string()}, {"m", std::to_string(m)}};
                report.expect_equal("signed-schur", std::move(p), lhs, rhs);
            }
        }
    return report;
}

}  // namespace eulinv
