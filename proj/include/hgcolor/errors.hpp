#pragma once

#include <stdexcept>
#include <string>

namespace hgcolor {

// An argument or input file violates a documented precondition.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration or search exceeded its configured budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data that should be internally consistent is not, e.g. a trace that
// does not replay against the hypergraph it claims to come from.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hgcolor
