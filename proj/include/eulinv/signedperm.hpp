#pragma once

/**
 * @file signedperm.hpp
 * @brief Permutations of S_n, signed permutations of B_n, descent statistics
 *        and constructive enumeration of involutions.
 *
 * Permutations are stored in window notation w(1..n). For signed permutations
 * the values at negative arguments follow from w(-a) = -w(a), and w(0) = 0.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace eulinv {

/// Default cap on the number of objects a single enumeration may generate.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int n, const BigInt& needed, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded at n=" + std::to_string(n) + ": " +
                             needed.str() + " objects needed, budget is " +
                             std::to_string(budget)),
          n_(n) {}
    int n() const { return n_; }

private:
    int n_;
};

enum class Sign : std::int8_t { minus = -1, plus = 1 };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Sorted subset of [n-1].
using DescentSet = std::vector<int>;

/// (Des, epsilon) shared by signed permutations and bitableaux.
struct SignedDescentSet {
    DescentSet descents;
    std::vector<Sign> signs;

    int size() const { return static_cast<int>(signs.size()); }

    /// |Des| plus one when the first sign is negative.
    int des_B() const {
        return static_cast<int>(descents.size()) + (!signs.empty() && signs.front() == Sign::minus ? 1 : 0);
    }

    /// A (-, +) sign step is never a descent.
    bool well_formed() const {
        for (int i : descents) {
            if (i < 1 || i >= size()) return false;
            if (signs[i - 1] == Sign::minus && signs[i] == Sign::plus) return false;
        }
        return std::is_sorted(descents.begin(), descents.end()) &&
               std::adjacent_find(descents.begin(), descents.end()) == descents.end();
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < descents.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(descents[i]);
        }
        s += "} ";
        for (Sign e : signs) s += sign_char(e);
        return s;
    }

    friend auto operator<=>(const SignedDescentSet&, const SignedDescentSet&) = default;
    friend bool operator==(const SignedDescentSet&, const SignedDescentSet&) = default;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window) : window_(std::move(window)) {
        const int n = size();
        std::vector<bool> seen(n + 1, false);
        for (int v : window_) {
            if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of [n]");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(window_.size()); }
    /// w(i) for 1 <= i <= n.
    int operator()(int i) const { return window_.at(i - 1); }
    const std::vector<int>& window() const { return window_; }

    Permutation inverse() const {
        std::vector<int> inv(window_.size());
        for (int i = 0; i < size(); ++i) inv[window_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> window_;
};

class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
        const int n = size();
        std::vector<bool> seen(n + 1, false);
        for (int v : window_) {
            const int a = v < 0 ? -v : v;
            if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation of [n]");
            seen[a] = true;
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return SignedPermutation(std::move(w));
    }

    int size() const { return static_cast<int>(window_.size()); }

    /// w(i) for -n <= i <= n, with w(0) = 0 and w(-a) = -w(a).
    int operator()(int i) const {
        if (i == 0) return 0;
        return i > 0 ? window_.at(i - 1) : -window_.at(-i - 1);
    }
    const std::vector<int>& window() const { return window_; }

    SignedPermutation inverse() const {
        std::vector<int> inv(window_.size());
        for (int i = 0; i < size(); ++i) {
            const int v = window_[i];
            if (v > 0) inv[v - 1] = i + 1;
            else inv[-v - 1] = -(i + 1);
        }
        return SignedPermutation(std::move(inv));
    }

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

inline DescentSet descent_set(const Permutation& w) {
    DescentSet d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.push_back(i);
    return d;
}

inline int des(const Permutation& w) { return static_cast<int>(descent_set(w).size()); }

inline SignedDescentSet signed_descent_set(const SignedPermutation& w) {
    SignedDescentSet s;
    const int n = w.size();
    s.signs.reserve(n);
    for (int i = 1; i <= n; ++i) s.signs.push_back(w(i) > 0 ? Sign::plus : Sign::minus);
    for (int i = 1; i < n; ++i) {
        const Sign a = s.signs[i - 1];
        const Sign b = s.signs[i];
        const bool sign_drop = a == Sign::plus && b == Sign::minus;
        const bool same_sign_drop = a == b && std::abs(w(i)) > std::abs(w(i + 1));
        if (sign_drop || same_sign_drop) s.descents.push_back(i);
    }
    return s;
}

/// Colored-permutation descent number, computed from the signed descent set.
inline int des_B(const SignedPermutation& w) { return signed_descent_set(w).des_B(); }

/// a <_r b in the order -1 < -2 < ... < 0 < 1 < 2 < ...
inline bool colored_less(int a, int b) {
    if (a < 0 && b < 0) return a > b;
    if (a < 0) return true;
    if (b < 0) return false;
    return a < b;
}

/// des_B counted directly as #{0 <= i < n : w(i) >_r w(i+1)} with w(0) = 0.
inline int des_B_colored_order(const SignedPermutation& w) {
    int count = 0;
    for (int i = 0; i < w.size(); ++i)
        if (colored_less(w(i + 1), w(i))) ++count;
    return count;
}

/// Coxeter descent number #{0 <= i < n : w(i) > w(i+1)} with w(0) = 0.
inline int des_coxeter(const SignedPermutation& w) {
    int count = 0;
    for (int i = 0; i < w.size(); ++i)
        if (w(i) > w(i + 1)) ++count;
    return count;
}

inline bool is_involution(const Permutation& w) {
    for (int i = 1; i <= w.size(); ++i)
        if (w(w(i)) != i) return false;
    return true;
}

inline bool is_involution(const SignedPermutation& w) {
    for (int i = 1; i <= w.size(); ++i)
        if (w(w(i)) != i) return false;
    return true;
}

/// Number of involutions of S_n: T(n) = T(n-1) + (n-1) T(n-2).
inline BigInt involution_count(int n) {
    BigInt prev = 1, cur = 1;  // T(0), T(1)
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        BigInt next = cur + (k - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Number of involutions of B_n: b(n) = 2 b(n-1) + 2(n-1) b(n-2).
inline BigInt signed_involution_count(int n) {
    BigInt prev = 1, cur = 2;  // b(0), b(1)
    if (n == 0) return prev;
    for (int k = 2; k <= n; ++k) {
        BigInt next = 2 * cur + 2 * (k - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline void check_budget(int n, const BigInt& needed, std::uint64_t budget) {
    if (needed > budget) throw BudgetExceeded(n, needed, budget);
}

namespace detail {

// Fills the smallest unassigned position i. Choices are visited in increasing
// order of w(i), which makes the output lexicographic on the window.
template <class Visit>
void involution_step(std::vector<int>& w, int n, bool allow_negative, Visit& visit) {
    int i = 0;
    while (i < n && w[i] != 0) ++i;
    if (i == n) {
        visit(w);
        return;
    }
    const int pos = i + 1;
    auto pair_with = [&](int j, int s) {
        w[pos - 1] = s * j;
        w[j - 1] = s * pos;
        involution_step(w, n, allow_negative, visit);
        w[pos - 1] = 0;
        w[j - 1] = 0;
    };
    if (allow_negative) {
        for (int j = n; j > pos; --j)
            if (w[j - 1] == 0) pair_with(j, -1);
        w[pos - 1] = -pos;
        involution_step(w, n, allow_negative, visit);
        w[pos - 1] = 0;
    }
    w[pos - 1] = pos;
    involution_step(w, n, allow_negative, visit);
    w[pos - 1] = 0;
    for (int j = pos + 1; j <= n; ++j)
        if (w[j - 1] == 0) pair_with(j, 1);
}

template <class Visit>
void group_step(std::vector<int>& w, std::vector<bool>& used, int n, bool is_signed, Visit& visit) {
    const int pos = static_cast<int>(w.size());
    if (pos == n) {
        visit(w);
        return;
    }
    auto place = [&](int v) {
        const int a = v < 0 ? -v : v;
        if (used[a]) return;
        used[a] = true;
        w.push_back(v);
        group_step(w, used, n, is_signed, visit);
        w.pop_back();
        used[a] = false;
    };
    if (is_signed)
        for (int v = -n; v <= -1; ++v) place(v);
    for (int v = 1; v <= n; ++v) place(v);
}

}  // namespace detail

/// Visits every involution of S_n once, in lexicographic order of the window.
template <class F>
void for_each_involution(int n, F&& f, std::uint64_t budget = kDefaultBudget) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_budget(n, involution_count(n), budget);
    std::vector<int> w(n, 0);
    auto visit = [&](const std::vector<int>& win) { f(Permutation(win)); };
    detail::involution_step(w, n, false, visit);
}

/// Visits every involution of B_n once: fixed points carry a free sign and
/// both positions of a 2-cycle carry the same sign.
template <class F>
void for_each_signed_involution(int n, F&& f, std::uint64_t budget = kDefaultBudget) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_budget(n, signed_involution_count(n), budget);
    std::vector<int> w(n, 0);
    auto visit = [&](const std::vector<int>& win) { f(SignedPermutation(win)); };
    detail::involution_step(w, n, true, visit);
}

/// Visits all n! permutations of S_n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f, std::uint64_t budget = kDefaultBudget) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_budget(n, factorial(n), budget);
    std::vector<int> w;
    std::vector<bool> used(n + 1, false);
    auto visit = [&](const std::vector<int>& win) { f(Permutation(win)); };
    detail::group_step(w, used, n, false, visit);
}

/// Visits all 2^n n! signed permutations of B_n in lexicographic order.
template <class F>
void for_each_signed_permutation(int n, F&& f, std::uint64_t budget = kDefaultBudget) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    check_budget(n, factorial(n) * (BigInt(1) << n), budget);
    std::vector<int> w;
    std::vector<bool> used(n + 1, false);
    auto visit = [&](const std::vector<int>& win) { f(SignedPermutation(win)); };
    detail::group_step(w, used, n, true, visit);
}

inline std::vector<Permutation> enumerate_involutions(int n, std::uint64_t budget = kDefaultBudget) {
    std::vector<Permutation> out;
    for_each_involution(n, [&](Permutation w) { out.push_back(std::move(w)); }, budget);
    return out;
}

inline std::vector<SignedPermutation> enumerate_signed_involutions(int n,
                                                                   std::uint64_t budget = kDefaultBudget) {
    std::vector<SignedPermutation> out;
    for_each_signed_involution(n, [&](SignedPermutation w) { out.push_back(std::move(w)); }, budget);
    return out;
}

inline std::vector<Permutation> enumerate_group(int n, std::uint64_t budget = kDefaultBudget) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](Permutation w) { out.push_back(std::move(w)); }, budget);
    return out;
}

inline std::vector<SignedPermutation> enumerate_signed_group(int n, std::uint64_t budget = kDefaultBudget) {
    std::vector<SignedPermutation> out;
    for_each_signed_permutation(n, [&](SignedPermutation w) { out.push_back(std::move(w)); }, budget);
    return out;
}

}  // namespace eulinv
