#pragma once

#include <stdexcept>
#include <string>

namespace superconf {

// Categories map onto CLI exit codes: precondition/parse -> 2, numerical -> 3, io -> 4.
enum class ErrorKind {
    parse,
    precondition,
    domain,
    not_found,
    degenerate,
    singular,
    numerical,
    io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, double magnitude = 0.0)
        : std::runtime_error(what), kind_(kind), magnitude_(magnitude) {}

    ErrorKind kind() const { return kind_; }
    // Offending magnitude where one exists (denominator, determinant, ...).
    double magnitude() const { return magnitude_; }

private:
    ErrorKind kind_;
    double magnitude_;
};

int exit_code(ErrorKind kind);

}  // namespace superconf
