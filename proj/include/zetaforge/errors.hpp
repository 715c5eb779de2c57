#pragma once

#include <stdexcept>
#include <string>

namespace zetaforge {

/// Requested accuracy cannot be certified at working precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Integrand refinement diverges (non-integrable singularity / non-decay).
struct integrability_error : std::runtime_error {
    explicit integrability_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data inconsistent with the requested convergence model.
struct diagnostic_error : std::runtime_error {
    explicit diagnostic_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration (invalid tail model, bad run options, ...).
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace zetaforge
