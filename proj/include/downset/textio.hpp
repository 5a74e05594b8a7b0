#pragma once

#include <iosfwd>
#include <string>

#include "downset/canonical.hpp"
#include "downset/complex.hpp"

// Two-line position text: a header "n=<int>" (n up to 10 syntactically; the
// engine's n <= 8 bound is what actually binds) and one line of maximal faces
// as comma-separated strings of vertex digits. The literal token "empty"
// stands for the family holding only the empty face; a blank face line is the
// empty family.

namespace downset {

Complex parse_complex(const std::string& text);
Complex parse_complex(std::istream& in);

// Header line, newline, maximal faces with digits ascending in ascending mask
// order, newline.
std::string serialize_complex(const Complex& a);

// Face token: vertex digits in ascending order ("" for the empty face).
std::string face_token(Face f);

// Cycle notation over single-digit vertices: "(6 7)", "(0 1)(2 3)", "(67)".
// Spaces and commas inside a cycle are separators; "", "()" and "id" give the
// identity.
VertexPermutation parse_cycles(const std::string& text, int n);

}  // namespace downset
