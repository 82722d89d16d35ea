#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

namespace lssa {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double ms = 0.0;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void print(std::ostream& os) const {
        for (const auto& c : checks) {
            os << (c.pass ? "[PASS] " : "[FAIL] ") << suite << ": " << c.name;
            if (!c.details.empty()) os << " — " << c.details;
            os << "\n";
        }
    }
};

/* Runs f, records pass/fail plus timing; exceptions become failures. */
template <typename F>
void run_check(Report& report, const std::string& name, F&& f) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        auto&& [ok, details] = f();
        r.pass = ok;
        r.details = details;
    } catch (const std::exception& e) {
        r.pass = false;
        r.details = std::string("exception: ") + e.what();
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
    report.checks.push_back(std::move(r));
}

} // namespace lssa
