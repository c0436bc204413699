#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace xherm {

struct Failure {
    std::string check;   // which identity
    std::string where;   // e.g. "j=3"
    std::string detail;  // residual or message
};

/// Outcome of a verification sweep; failures are kept in the order the
/// checks ran.
struct Report {
    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checks = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    void record(bool pass, std::string check, std::string where, std::string detail = {}) {
        ++checks;
        if (!pass) failures.push_back({std::move(check), std::move(where), std::move(detail)});
    }

    /// Like record, but the detail is only built for failures.
    template <class DetailFn>
    void check(bool pass, std::string check, std::string where, DetailFn&& detail) {
        ++checks;
        if (!pass) failures.push_back({std::move(check), std::move(where), detail()});
    }

    void merge(const Report& other) {
        checks += other.checks;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace xherm
