#ifndef EGH_ERRORS_HPP
#define EGH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace egh {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad syntax in polynomial or file input.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Semantically invalid input: context/degree mismatches, non-homogeneous
// terms, capacity violations, degenerate or unsupported shapes.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// Rejection sampling exceeded its attempt cap.
struct generation_error : error {
    explicit generation_error(const std::string& what) : error(what) {}
};

}  // namespace egh

#endif
