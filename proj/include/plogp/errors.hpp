#ifndef PLOGP_ERRORS_HPP
#define PLOGP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plogp {

// Error taxonomy shared by every module; the CLI maps each kind to a fixed
// process exit code.

struct domain_error : std::runtime_error { // exit 2
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct capacity_error : std::runtime_error { // exit 3
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct accuracy_error : std::runtime_error { // exit 4
    double achieved; // best error bound reached before giving up
    accuracy_error(const std::string& what, double achieved_bound)
        : std::runtime_error(what), achieved(achieved_bound) {}
};

struct consistency_error : std::runtime_error { // exit 5
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace plogp

#endif
