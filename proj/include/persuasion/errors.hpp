#ifndef PERSUASION_ERRORS_HPP
#define PERSUASION_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace persuasion {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRational : Error {
    using Error::Error;
};

// Observation whose intersection carries zero probability mass.
struct UndefinedPosterior : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct NotStrongInstance : Error {
    using Error::Error;
};

// pi*(intersection of F) = 0, outside the standing assumption of the
// standard strong decider.
struct AssumptionViolated : Error {
    using Error::Error;
};

struct InvalidECI : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string &msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    std::size_t line;
};

}  // namespace persuasion

#endif
