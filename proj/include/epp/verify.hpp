#pragma once

#include <string>
#include <vector>

namespace epp::verify {

/// Test-only fault injection, used to prove the suite catches real sign bugs.
enum class Fault { None, AltrepSign };

struct Options {
    int max_n = 10;      // scale knob: partition sizes / levels the grids run to
    Fault fault = Fault::None;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample on failure, optional notes on pass
    double millis = 0.0;
};

/// Names of every registered invariant check, in execution order.
std::vector<std::string> check_names();

/// Runs one named check.
CheckResult run_check(const std::string& name, const Options& opts);

/// Runs the whole suite.
std::vector<CheckResult> run_all(const Options& opts);

} // namespace epp::verify
