#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// A caller-supplied argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed external input (graph6, .rbc, pattern or family grammar, JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ramsey
