#pragma once

#include <stdexcept>

namespace cooc {

// Bad user input: unreadable/malformed files, invalid corpus content,
// configuration values out of range. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure to write results. Maps to CLI exit code 3.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cooc
