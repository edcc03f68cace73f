#pragma once

#include <string>
#include <vector>

namespace bcv {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

struct VerifyConfig {
    double tol_first = 1e-6;  // first-order finite differences
    double tol_second = 1e-4; // nested finite differences
    double tol_exact = 1e-10; // closed-form / polynomial identities
    double fd_step = 1e-3;
    unsigned seed = 20240815;
};

SuiteReport verify_core(const VerifyConfig& cfg = {});
SuiteReport verify_hopf(const VerifyConfig& cfg = {});
SuiteReport verify_classify(const VerifyConfig& cfg = {});
SuiteReport verify_surface(const VerifyConfig& cfg = {});
SuiteReport verify_helicoid(const VerifyConfig& cfg = {});

// All suites, in the order above.
std::vector<SuiteReport> verify_all(const VerifyConfig& cfg = {});

// Resolve a suite by name ("core", "hopf", "classify", "surface",
// "helicoid", "all"). Throws InvalidParams for unknown names.
std::vector<SuiteReport> verify_by_name(const std::string& name, const VerifyConfig& cfg = {});

} // namespace bcv
