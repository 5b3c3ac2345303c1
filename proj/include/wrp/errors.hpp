#pragma once

#include <stdexcept>
#include <string>

namespace wrp {

/// Input violates a file format or a structural invariant (bad line, self-loop, ...).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation applied outside its mathematical domain (disconnected graph, edgeless spectrum, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine failed to converge.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wrp
