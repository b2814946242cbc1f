#pragma once

#include <stdexcept>
#include <string>

namespace plonka {

// Base class for all library failures.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. The CLI maps this to exit code 2,
// as opposed to semantic/property failures which exit 1.
struct input_error : error {
    using error::error;
};

// Syntax errors in the term/identity grammar carry the byte offset.
struct parse_error : input_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : input_error(what + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace plonka
