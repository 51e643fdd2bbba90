#pragma once

/**
 * @file tableaux.hpp
 * @brief Partitions, bipartitions, standard Young tableaux and bitableaux.
 *
 * Rows are indexed from the top (English convention): "lower row" means a
 * strictly larger row index.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "signedperm.hpp"

namespace eulinv {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty())
            for (int j = 0; j < parts_.front(); ++j) {
                int len = 0;
                while (len < length() && parts_[len] > j) ++len;
                c.push_back(len);
            }
        return Partition(std::move(c));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct Bipartition {
    Partition plus;
    Partition minus;

    int weight() const { return plus.weight() + minus.weight(); }
    std::string to_string() const { return "(" + plus.to_string() + "," + minus.to_string() + ")"; }

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// All partitions of n, parts listed in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    rec(n, n);
    return out;
}

inline std::vector<Bipartition> bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a)
        for (const auto& lam : partitions(a))
            for (const auto& mu : partitions(n - a)) out.push_back({lam, mu});
    return out;
}

/// A tableau strictly increasing along rows and down columns. Entries are
/// distinct positive integers; a standalone standard tableau of size n holds [n].
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& row = rows_[r];
            if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
            if (r > 0 && row.size() > rows_[r - 1].size())
                throw std::invalid_argument("tableau row lengths must be weakly decreasing");
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (row[c] <= 0) throw std::invalid_argument("tableau entries must be positive");
                if (c > 0 && row[c] <= row[c - 1]) throw std::invalid_argument("rows must strictly increase");
                if (r > 0 && row[c] <= rows_[r - 1][c]) throw std::invalid_argument("columns must strictly increase");
            }
        }
        auto e = entries();
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("tableau entries must be distinct");
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int size() const {
        int s = 0;
        for (const auto& r : rows_) s += static_cast<int>(r.size());
        return s;
    }

    Partition shape() const {
        std::vector<int> p;
        for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(std::move(p));
    }

    /// Sorted list of entries.
    std::vector<int> entries() const {
        std::vector<int> e;
        for (const auto& r : rows_) e.insert(e.end(), r.begin(), r.end());
        std::sort(e.begin(), e.end());
        return e;
    }

    /// 0-based row index of an entry, or -1 when absent.
    int row_of(int entry) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (std::binary_search(rows_[r].begin(), rows_[r].end(), entry)) return static_cast<int>(r);
        return -1;
    }

    /// Entries exactly [n].
    bool is_standard() const {
        auto e = entries();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r) s += '/';
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c) s += ',';
                s += std::to_string(rows_[r][c]);
            }
        }
        return s + "]";
    }

    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct Bitableau {
    StandardTableau plus;
    StandardTableau minus;

    int size() const { return plus.size() + minus.size(); }
    Bipartition shape() const { return {plus.shape(), minus.shape()}; }

    /// Every element of [n] appears exactly once across the two parts.
    bool is_standard() const {
        auto e = plus.entries();
        auto m = minus.entries();
        e.insert(e.end(), m.begin(), m.end());
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    std::string to_string() const { return "(" + plus.to_string() + "," + minus.to_string() + ")"; }

    friend auto operator<=>(const Bitableau&, const Bitableau&) = default;
    friend bool operator==(const Bitableau&, const Bitableau&) = default;
};

/// Visits every standard tableau of the given shape once, built by placing
/// 1, 2, ..., n successively into addable corner cells.
template <class F>
void for_each_syt(const Partition& shape, F&& f) {
    const int n = shape.weight();
    const auto& target = shape.parts();
    std::vector<std::vector<int>> rows(target.size());
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            f(StandardTableau(rows));
            return;
        }
        for (std::size_t r = 0; r < target.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= target[r]) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            rows[r].push_back(k);
            place(k + 1);
            rows[r].pop_back();
        }
    };
    place(1);
}

inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](StandardTableau q) { out.push_back(std::move(q)); });
    return out;
}

/// Number of standard tableaux of the shape, via the hook length formula.
inline BigInt syt_count(const Partition& shape) {
    const auto conj = shape.conjugate();
    BigInt hooks = 1;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.parts()[r]; ++c)
            hooks *= (shape.parts()[r] - c - 1) + (conj.parts()[c] - r - 1) + 1;
    return factorial(shape.weight()) / hooks;
}

/// Descents of a tableau: i with i+1 strictly lower than i.
inline DescentSet syt_descent_set(const StandardTableau& q) {
    const int n = q.size();
    std::vector<int> row(n + 2, -1);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (int v : q.rows()[r])
            if (v <= n) row[v] = static_cast<int>(r);
    DescentSet d;
    for (int i = 1; i < n; ++i)
        if (row[i + 1] > row[i]) d.push_back(i);
    return d;
}

inline int syt_des(const StandardTableau& q) { return static_cast<int>(syt_descent_set(q).size()); }

/// Rows of the result are the columns of q.
inline StandardTableau syt_transpose(const StandardTableau& q) {
    const auto& rows = q.rows();
    std::vector<std::vector<int>> t;
    if (!rows.empty()) {
        t.resize(rows.front().size());
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c) t[c].push_back(row[c]);
    }
    return StandardTableau(std::move(t));
}

namespace detail {

inline StandardTableau relabel(const StandardTableau& q, const std::vector<int>& labels) {
    auto rows = q.rows();
    for (auto& row : rows)
        for (int& v : row) v = labels[v - 1];
    return StandardTableau(std::move(rows));
}

}  // namespace detail

/// Visits every standard bitableau of shape (lambda, mu) once: the entry set of
/// the plus part is chosen first, then each part is filled by relabelling a
/// standard tableau of its shape.
template <class F>
void for_each_syb(const Bipartition& shape, F&& f) {
    const int a = shape.plus.weight();
    const int n = shape.weight();
    const auto plus_fillings = enumerate_syt(shape.plus);
    const auto minus_fillings = enumerate_syt(shape.minus);

    std::vector<bool> chosen(n, false);
    std::fill(chosen.begin(), chosen.begin() + a, true);
    // prev_permutation over a sorted-descending mask visits every a-subset once
    do {
        std::vector<int> plus_labels, minus_labels;
        for (int i = 0; i < n; ++i) (chosen[i] ? plus_labels : minus_labels).push_back(i + 1);
        for (const auto& p : plus_fillings) {
            auto plus = detail::relabel(p, plus_labels);
            for (const auto& m : minus_fillings) f(Bitableau{plus, detail::relabel(m, minus_labels)});
        }
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
}

inline std::vector<Bitableau> enumerate_syb(const Bipartition& shape) {
    std::vector<Bitableau> out;
    for_each_syb(shape, [&](Bitableau q) { out.push_back(std::move(q)); });
    return out;
}

/// Every standard bitableau of size n, over all bipartitions of n.
template <class F>
void for_each_syb_of_size(int n, F&& f) {
    for (const auto& shape : bipartitions(n)) for_each_syb(shape, f);
}

/// Every standard tableau of size n, over all partitions of n.
template <class F>
void for_each_syt_of_size(int n, F&& f) {
    for (const auto& shape : partitions(n)) for_each_syt(shape, f);
}

inline SignedDescentSet syb_signed_descent_set(const Bitableau& q) {
    const int n = q.size();
    std::vector<Sign> sign(n + 1, Sign::plus);
    std::vector<int> row(n + 1, -1);
    auto record = [&](const StandardTableau& t, Sign s) {
        for (std::size_t r = 0; r < t.rows().size(); ++r)
            for (int v : t.rows()[r]) {
                if (v < 1 || v > n) throw std::invalid_argument("bitableau entries must be [n]");
                sign[v] = s;
                row[v] = static_cast<int>(r);
            }
    };
    record(q.plus, Sign::plus);
    record(q.minus, Sign::minus);

    SignedDescentSet s;
    s.signs.assign(sign.begin() + 1, sign.end());
    for (int i = 1; i < n; ++i) {
        const bool sign_drop = sign[i] == Sign::plus && sign[i + 1] == Sign::minus;
        const bool lower = sign[i] == sign[i + 1] && row[i + 1] > row[i];
        if (sign_drop || lower) s.descents.push_back(i);
    }
    return s;
}

inline int syb_des_B(const Bitableau& q) { return syb_signed_descent_set(q).des_B(); }

/// Swaps the parts and transposes each of them.
inline Bitableau syb_transpose(const Bitableau& q) {
    return Bitableau{syt_transpose(q.minus), syt_transpose(q.plus)};
}

}  // namespace eulinv
