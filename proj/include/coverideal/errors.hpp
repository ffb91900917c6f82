#ifndef COVERIDEAL_ERRORS_HPP
#define COVERIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvi {

// Invalid input, mismatched rings, violated preconditions, size caps.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A search ran out of its node or time budget. Distinct from refutation:
// refutation means the search space was exhausted.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cvi

#endif
