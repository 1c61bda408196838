#include "superconf/error.hpp"

namespace superconf {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::domain: return "domain";
        case ErrorKind::not_found: return "not-found";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::singular: return "singular";
        case ErrorKind::numerical: return "numerical";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
        case ErrorKind::precondition:
        case ErrorKind::domain:
        case ErrorKind::not_found:
            return 2;
        case ErrorKind::io:
            return 4;
        default:
            return 3;
    }
}

}  // namespace superconf
