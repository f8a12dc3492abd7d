#pragma once

#include <stdexcept>
#include <string>

namespace bei {

// Malformed input text (edge lists, JSON documents).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that does not describe a simple graph on 1..n.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration or output guard was exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bei
