#pragma once

#include <stdexcept>
#include <string>

#include "hdg/diagram.hpp"

namespace hdg {

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(int ln, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ":" + std::to_string(col) + ": " + msg),
          line(ln),
          column(col) {}
};

/// Canonical text form. Parsing then serializing reproduces the bytes;
/// serializing a canonicalized diagram is a canonical form for equality.
std::string serialize(const HeegaardDiagram& d);
HeegaardDiagram parse_diagram(const std::string& text);

std::string circle_ref_token(const CircleRef& ref);
CircleRef parse_circle_ref(const std::string& token, int line);

}  // namespace hdg
