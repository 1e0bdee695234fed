#pragma once

#include <stdexcept>
#include <string>

namespace ramajet {

// Base for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration (precision below minimum, bad truncation order, ...).
struct config_error : error {
    using error::error;
};

// Mathematical domain violations: poles, log of non-positive head, |z|>=1, ...
struct domain_error : error {
    using error::error;
};

// Structural mismatch between operands (jet order, series truncation, scalar kind).
struct shape_error : error {
    using error::error;
};

// Requested order/feature beyond the supported cap (polygamma order, jet order).
struct unsupported_error : error {
    using error::error;
};

// Root scan found no sign change inside the trusted region.
struct no_solution_error : error {
    using error::error;
};

// A solution candidate failed its verification residuals (wrong branch, bad root).
struct inconsistency_error : error {
    using error::error;
};

} // namespace ramajet
