#ifndef QVE_ERRORS_HPP
#define QVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qve {

// Error taxonomy shared by all modules.  Every precondition violation maps
// to one of these so callers (and the CLI) can translate them to exit codes.

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

struct pole_error : domain_error {
    explicit pole_error(const std::string& m) : domain_error(m) {}
};

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& m) : std::runtime_error(m) {}
};

struct convergence_error : domain_error {
    explicit convergence_error(const std::string& m) : domain_error(m) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

struct hecke_violation : std::runtime_error {
    explicit hecke_violation(const std::string& m) : std::runtime_error(m) {}
};

struct ramanujan_violation : std::runtime_error {
    explicit ramanujan_violation(const std::string& m) : std::runtime_error(m) {}
};

struct insufficient_coefficients : std::runtime_error {
    explicit insufficient_coefficients(const std::string& m) : std::runtime_error(m) {}
};

struct tail_too_large : std::runtime_error {
    explicit tail_too_large(const std::string& m) : std::runtime_error(m) {}
};

struct cost_guard : std::runtime_error {
    explicit cost_guard(const std::string& m) : std::runtime_error(m) {}
};

} // namespace qve

#endif
