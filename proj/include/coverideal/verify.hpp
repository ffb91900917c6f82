#ifndef COVERIDEAL_VERIFY_HPP
#define COVERIDEAL_VERIFY_HPP

#include <string>
#include <vector>

#include "coverideal/homological.hpp"

namespace cvi {

/// One assertion inside a verification suite.
struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail; // expected/actual summary on failure, metrics on success
};

struct VerifySuiteResult {
    std::string suite;
    bool passed = false;
    std::vector<VerifyCheck> checks;
    double seconds = 0.0;
};

/// Suite identifiers accepted by run_verify_suite, in canonical order.
const std::vector<std::string>& verify_suite_ids();

/// Runs one named suite. `data_dir` points at the shipped instance files
/// (the paper/ directory); when non-empty, file-based instances are loaded
/// and cross-checked against the programmatic constructions.
VerifySuiteResult run_verify_suite(const std::string& id, const Budget& budget = {},
                                   unsigned threads = 1, const std::string& data_dir = "");

/// Runs every suite in canonical order.
std::vector<VerifySuiteResult> run_all_verify_suites(const Budget& budget = {},
                                                     unsigned threads = 1,
                                                     const std::string& data_dir = "");

} // namespace cvi

#endif
