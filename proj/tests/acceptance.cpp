// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "eulinv/eulinv.hpp"

using namespace eulinv;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from_report(const Report& r) {
    if (const auto* f = r.first_failure()) return {false, f->check + " " + f->params_string() + ": " + f->lhs + " vs " + f->rhs};
    return {true, std::to_string(r.count(Status::pass)) + " checks"};
}

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

Outcome small_tables() {
    for (int n = 1; n <= 6; ++n)
        if (involution_eulerian(n).poly != reference::involution_rows()[n - 1])
            return {false, "I_" + std::to_string(n)};
    for (int n = 1; n <= 5; ++n)
        if (signed_involution_eulerian(n).poly != reference::signed_involution_rows()[n - 1])
            return {false, "I^B_" + std::to_string(n)};
    return {true, "I_1..I_6, I^B_1..I^B_5"};
}

Outcome n6_reconciliation() {
    const auto p = signed_involution_eulerian(6).poly;
    if (p.evaluate(1) != 1384) return {false, "sum " + p.evaluate(1).str()};
    if (p != IntPolynomial{1, 43, 331, 634, 331, 43, 1}) return {false, p.to_string(',')};
    const auto table = reference_table_report();
    const auto& recs = table.records();
    const bool flagged = std::any_of(recs.begin(), recs.end(), [](const Record& r) {
        return r.status == Status::flag && r.rhs.find("632") != std::string::npos;
    });
    if (!table.ok() || !flagged) return {false, "printed 632 not flagged"};
    return {true, p.to_string(',') + ", printed 632 flagged"};
}

Outcome recurrence_vs_enumeration() {
    try {
        return from_report(verify_recurrence(9));
    } catch (const InexactDivision& e) {
        return {false, e.what()};
    }
}

Outcome generating_functions() {
    auto r = verify_genfun_B(8, 8);
    r.merge(verify_genfun_A(8, 6));
    return from_report(r);
}

Outcome signed_fundamental() { return from_report(verify_lemma31(4, 6)); }

Outcome schur_specializations() {
    for (int n = 0; n <= 5; ++n)
        for (const auto& shape : partitions(n))
            for (int m = 0; m <= 4; ++m)
                if (schur_spec(shape, m).value != ssyt_count(shape, m))
                    return {false, "shape " + shape.to_string() + " m=" + std::to_string(m)};
    auto r = verify_cauchy_spec(6, 4);
    r.merge(verify_signed_schur_spec(5, 4));
    return from_report(r);
}

Outcome descent_multisets() { return from_report(verify_sdes_bijection(6, 7)); }

Outcome transpose_maps() { return from_report(verify_transpose(6, 7)); }

Outcome unimodality_and_proof() {
    auto r = verify_unimodality(40);
    r.merge(verify_proof_identity(20));
    return from_report(r);
}

Outcome counterexample() {
    const auto r = verify_counterexample_89(8);
    const auto& recs = r.records();
    const bool verdict = std::any_of(recs.begin(), recs.end(),
                                     [](const Record& x) { return x.check == "verdict" && x.lhs == "NOT log-concave"; });
    if (!verdict) return {false, "no verdict"};
    auto o = from_report(r);
    if (o.ok) o.detail = reference::r89_2_squared.str() + " < " + reference::r89_1_times_r89_3.str();
    return o;
}

Outcome gamma_table() { return from_report(gamma_positivity_report(30)); }

Outcome statistic_coincidence() {
    const auto r = check_des_statistic_conjecture(7);
    auto o = from_report(r);
    if (o.ok) o.detail += ", " + std::to_string(r.count(Status::info)) + " reported beyond n=5";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"01 small-n tables", small_tables},
        {"02 n=6 reconciliation", n6_reconciliation},
        {"03 recurrence equals enumeration, n<=9", recurrence_vs_enumeration},
        {"04 generating-function identities", generating_functions},
        {"05 signed fundamental specialization on B_n, n<=4", signed_fundamental},
        {"06 Schur, Cauchy and signed Schur specializations", schur_specializations},
        {"07 descent multisets of involutions and tableaux", descent_multisets},
        {"08 transpose reflects descents", transpose_maps},
        {"09 unimodality to n=40 and difference identity to n=20", unimodality_and_proof},
        {"10 r(89, .) non-log-concavity", counterexample},
        {"11 gamma-vectors", gamma_table},
        {"12 des_B and des^B over involutions", statistic_coincidence},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name << " (" << o.detail << "; " << ms << " ms)\n";
        if (!o.ok) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
