#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zero denominator, division by zero
struct invalid_scalar_error : error {
    using error::error;
};

// specialization at q=1 requested for a scalar with a pole there
struct not_in_k_error : error {
    using error::error;
};

struct invalid_parameter_error : error {
    using error::error;
};

// a derived relation whose leading word cannot be made strictly largest;
// carries the offending element in text form
struct orientation_error : error {
    std::string offending;
    orientation_error(const std::string& msg, std::string elem)
        : error(msg), offending(std::move(elem)) {}
};

// a constant matrix violates a defining relation; carries the relation
struct relation_violation_error : error {
    std::string relation;
    relation_violation_error(const std::string& msg, std::string rel)
        : error(msg), relation(std::move(rel)) {}
};

} // namespace qalg
