// The .scx text format: optional ordered `vertices` header, one maximal
// simplex per body line, `#` comments.
#pragma once

#include <stdexcept>
#include <string>

#include "lhom/complex.hpp"

namespace lhom {

struct ScxError : std::runtime_error {
    int line, column;
    ScxError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

Complex parse_scx(const std::string& text);

// Canonical form: a vertices header followed by the maximal simplices in
// lexicographic vertex-id order. parse(emit(K)) == K.
std::string emit_scx(const Complex& K);

}  // namespace lhom
