#include <catch_amalgamated.hpp>

#include <functional>
#include <vector>

#include "eulinv/qsym.hpp"

using namespace eulinv;

namespace {

using S = Sign;

// Brute-force chain count: enumerate every weakly increasing sequence in [1, m]^n.
long long brute_chains(int n, int m, const std::vector<bool>& strict_after, const std::vector<int>& lower) {
    long long count = 0;
    std::vector<int> seq;
    std::function<void(int)> rec = [&](int) {
        const int j = static_cast<int>(seq.size());
        if (j == n) {
            ++count;
            return;
        }
        const int from = j == 0 ? 1 : (strict_after[j - 1] ? seq.back() + 1 : seq.back());
        for (int v = std::max(from, lower[j]); v <= m; ++v) {
            seq.push_back(v);
            rec(v);
            seq.pop_back();
        }
    };
    rec(1);
    return count;
}

long long brute_signed(const SignedDescentSet& s, int m) {
    const int n = s.size();
    std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
    for (int i : s.descents) strict[i - 1] = true;
    std::vector<int> lower(n, 1);
    for (int j = 0; j < n; ++j)
        if (s.signs[j] == S::minus) lower[j] = 2;
    return brute_chains(n, m, strict, lower);
}

// Semistandard tableaux of the shape with entries <= m, by cell-by-cell filling.
long long ssyt_count(const Partition& shape, int m) {
    const auto& parts = shape.parts();
    std::vector<std::vector<int>> t;
    for (int len : parts) t.emplace_back(len, 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < parts[r]; ++c) cells.emplace_back(r, c);
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        for (int v = 1; v <= m; ++v) {
            if (c > 0 && v < t[r][c - 1]) continue;
            if (r > 0 && v <= t[r - 1][c]) continue;
            t[r][c] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return count;
}

std::vector<DescentSet> subsets(int n) {
    std::vector<DescentSet> out;
    const int k = n > 0 ? n - 1 : 0;
    for (int mask = 0; mask < (1 << k); ++mask) {
        DescentSet s;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("fundamental_spec examples", "[qsym]") {
    CHECK(fundamental_spec(2, {}, 2).value == 3);
    CHECK(fundamental_spec(2, {1}, 2).value == 1);
    CHECK(fundamental_spec(3, {}, 1).value == 1);
    CHECK(fundamental_spec(0, {}, 0).value == 1);
    CHECK(fundamental_spec(2, {}, 0).value == 0);
    CHECK_THROWS_AS(fundamental_spec(3, {3}, 2), std::invalid_argument);
}

TEST_CASE("fundamental_spec equals the closed form and brute force", "[qsym][property]") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& s : subsets(n))
            for (int m = 1; m <= 8; ++m) {
                const auto got = fundamental_spec(n, s, m).value;
                const long long top = n + m - 1 - static_cast<long long>(s.size());
                REQUIRE(got == (top < 0 ? BigInt(0) : binomial(top, n)));
                std::vector<bool> strict(n > 0 ? n - 1 : 0, false);
                for (int i : s) strict[i - 1] = true;
                REQUIRE(got == brute_chains(n, m, strict, std::vector<int>(n, 1)));
            }
}

TEST_CASE("signed_fundamental_spec examples", "[qsym]") {
    const auto minus_one = signed_descent_set(SignedPermutation({-1}));
    CHECK(signed_fundamental_spec(minus_one, 3).value == 2);
    CHECK(brute_signed(minus_one, 3) == 2);
    for (int n = 0; n <= 4; ++n)
        for (int m = 1; m <= 5; ++m)
            CHECK(signed_fundamental_spec(signed_descent_set(SignedPermutation::identity(n)), m).value ==
                  binomial(n + m - 1, n));
    const auto w = signed_descent_set(SignedPermutation({2, -1}));
    CHECK(w == SignedDescentSet{{1}, {S::plus, S::minus}});
    CHECK(brute_signed(w, 2) == 1);
    CHECK(signed_fundamental_spec(w, 2).value == 1);
    CHECK(binomial(2 + 2 - 1 - 1, 2) == 1);
}

TEST_CASE("signed_fundamental_spec agrees with brute force on B_n", "[qsym][property]") {
    for (int n = 0; n <= 4; ++n)
        for_each_signed_permutation(n, [&](const SignedPermutation& w) {
            const auto s = signed_descent_set(w);
            for (int m = 1; m <= 6; ++m) REQUIRE(signed_fundamental_spec(s, m).value == brute_signed(s, m));
        });
}

TEST_CASE("schur_spec examples", "[qsym]") {
    CHECK(schur_spec(Partition({1, 1}), 2).value == 1);
    CHECK(schur_spec(Partition({4}), 1).value == 1);
    CHECK(schur_spec(Partition({2, 1}), 2).value == 2);
    CHECK(schur_spec(Partition{}, 0).value == 1);
    CHECK(schur_spec(Partition({1}), 0).value == 0);
    CHECK(ssyt_count(Partition({2, 1}), 2) == 2);
    CHECK(ssyt_count(Partition({1, 1}), 2) == 1);
}

TEST_CASE("schur_spec matches the SSYT oracle and is monotone in m", "[qsym][property]") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& shape : partitions(n)) {
            BigInt prev = 0;
            for (int m = 0; m <= 4; ++m) {
                const auto got = schur_spec(shape, m).value;
                INFO("shape " << shape.to_string() << " m=" << m);
                REQUIRE(got == ssyt_count(shape, m));
                REQUIRE(got >= prev);
                prev = got;
            }
        }
}

TEST_CASE("Cauchy specialization", "[qsym]") {
    // n=2, m=2: s_(2) + s_(1,1) = 3 + 1, and [t^2] (1-t)^-2 (1-t^2)^-1 = 4
    CHECK(schur_spec(Partition({2}), 2).value + schur_spec(Partition({1, 1}), 2).value == 4);
    CHECK(expand_negative_binomial_product(2, 1, 2)[2] == 4);
    CHECK(expand_negative_binomial_product(2, 1, 2)[1] == 2);
    const auto report = verify_cauchy_spec(6, 4);
    CHECK(report.ok());
    CHECK(report.count(Status::pass) == 7 * 5);
}

TEST_CASE("signed Schur specialization", "[qsym]") {
    auto lhs = [](const Bipartition& shape, int m) {
        BigInt total = 0;
        for (const auto& q : enumerate_syb(shape)) total += signed_fundamental_spec(syb_signed_descent_set(q), m).value;
        return total;
    };
    CHECK(lhs({Partition({1}), Partition{}}, 2) == 2);
    CHECK(lhs({Partition{}, Partition({1})}, 2) == 1);
    CHECK(lhs({Partition({1}), Partition({1})}, 2) == 2);
    const auto report = verify_signed_schur_spec(5, 4);
    CHECK(report.ok());
    CHECK(report.first_failure() == nullptr);
}
