#pragma once

/**
 * @file report.hpp
 * @brief Verification reports and their line-oriented serialization.
 *
 * One record per checked identity. Structured form, one record per line:
 *
 *     check=<name>\tparams=<k=v;...>\tstatus=<pass|fail|flag|info>\tlhs=<...>\trhs=<...>
 *
 * Integers are printed in decimal without grouping; polynomials as
 * comma-separated coefficients, lowest degree first.
 */

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "exactnum.hpp"

namespace eulinv {

/// pass/fail are hard assertions; flag marks a reported discrepancy that is
/// not a failure; info carries values only.
enum class Status { pass, fail, flag, info };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::flag: return "flag";
        case Status::info: return "info";
    }
    return "?";
}

using Params = std::vector<std::pair<std::string, std::string>>;

struct Record {
    std::string check;
    Params params;
    Status status = Status::info;
    std::string lhs;
    std::string rhs;

    std::string params_string() const {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) s += ';';
            s += params[i].first + '=' + params[i].second;
        }
        return s;
    }

    std::string structured() const {
        return "check=" + check + "\tparams=" + params_string() + "\tstatus=" + status_name(status) +
               "\tlhs=" + lhs + "\trhs=" + rhs;
    }
};

inline std::string render(const BigInt& v) { return v.str(); }
inline std::string render(const IntPolynomial& p) { return p.to_string(','); }
inline std::string render(long long v) { return std::to_string(v); }
inline std::string render(const std::string& s) { return s; }

class Report {
public:
    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<Record>& records() const { return records_; }

    Record& add(Record r) {
        records_.push_back(std::move(r));
        return records_.back();
    }

    /// Hard equality check: pass iff lhs == rhs.
    template <class T>
    bool expect_equal(std::string check, Params params, const T& lhs, const T& rhs) {
        const bool ok = lhs == rhs;
        add({std::move(check), std::move(params), ok ? Status::pass : Status::fail, render(lhs), render(rhs)});
        return ok;
    }

    bool expect(std::string check, Params params, bool ok, std::string lhs = {}, std::string rhs = {}) {
        add({std::move(check), std::move(params), ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs)});
        return ok;
    }

    void info(std::string check, Params params, std::string lhs, std::string rhs = {}) {
        add({std::move(check), std::move(params), Status::info, std::move(lhs), std::move(rhs)});
    }

    void flag(std::string check, Params params, std::string lhs, std::string rhs = {}) {
        add({std::move(check), std::move(params), Status::flag, std::move(lhs), std::move(rhs)});
    }

    void merge(const Report& other) {
        records_.insert(records_.end(), other.records_.begin(), other.records_.end());
    }

    bool ok() const {
        return std::none_of(records_.begin(), records_.end(),
                            [](const Record& r) { return r.status == Status::fail; });
    }

    const Record* first_failure() const {
        for (const auto& r : records_)
            if (r.status == Status::fail) return &r;
        return nullptr;
    }

    std::size_t count(Status s) const {
        return static_cast<std::size_t>(
            std::count_if(records_.begin(), records_.end(), [s](const Record& r) { return r.status == s; }));
    }

    void write_structured(std::ostream& os) const {
        for (const auto& r : records_) os << r.structured() << '\n';
    }

    std::string structured() const {
        std::ostringstream os;
        write_structured(os);
        return os.str();
    }

    /// Non-pass records in full, followed by one summary line.
    void write_plain(std::ostream& os) const {
        for (const auto& r : records_) {
            if (r.status == Status::pass) continue;
            os << '[' << status_name(r.status) << "] " << r.check;
            if (!r.params.empty()) os << ' ' << r.params_string();
            if (!r.lhs.empty()) os << ": " << r.lhs;
            if (!r.rhs.empty()) os << (r.status == Status::info ? " | " : " vs ") << r.rhs;
            os << '\n';
        }
        os << (title_.empty() ? std::string("report") : title_) << ": " << count(Status::pass) << " passed, "
           << count(Status::fail) << " failed, " << count(Status::flag) << " flagged\n";
    }

private:
    std::string title_;
    std::vector<Record> records_;
};

inline Params params(std::initializer_list<std::pair<std::string, long long>> kv) {
    Params p;
    for (const auto& [k, v] : kv) p.emplace_back(k, std::to_string(v));
    return p;
}

}  // namespace eulinv
