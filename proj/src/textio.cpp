#include "downset/textio.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace downset {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Face parse_face_token(const std::string& token, int n) {
  unsigned bits = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw parse_error("face token holds a non-digit: " + token);
    int v = c - '0';
    if (v >= n) throw parse_error("vertex outside the ground set: " + token);
    if (bits & (1u << v)) throw parse_error("repeated vertex in face: " + token);
    bits |= 1u << v;
  }
  return Face(bits);
}

}  // namespace

std::string face_token(Face f) {
  std::string out;
  for (int v = 0; v < 10; ++v)
    if (f.contains(v)) out += static_cast<char>('0' + v);
  return out;
}

Complex parse_complex(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw parse_error("missing header line");
  header = trim(header);
  if (header.rfind("n=", 0) != 0) throw parse_error("header must be n=<int>");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header.substr(2), &used);
    if (used != header.size() - 2) throw parse_error("header must be n=<int>");
  } catch (const parse_error&) {
    throw;
  } catch (...) {
    throw parse_error("header must be n=<int>");
  }
  if (n < 0 || n > 10) throw parse_error("n must be between 0 and 10");

  std::string faces_line;
  std::getline(in, faces_line);  // absent line = blank = empty family
  faces_line = trim(faces_line);
  if (faces_line.empty()) return Complex::empty_family(n);
  if (faces_line == "empty") return closure_of({Face(0)}, n);

  std::vector<Face> faces;
  std::stringstream ss(faces_line);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) throw parse_error("empty face token");
    if (token == "empty")
      throw parse_error("'empty' cannot be combined with other faces");
    faces.push_back(parse_face_token(token, n));
  }
  return closure_of(faces, n);
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

std::string serialize_complex(const Complex& a) {
  std::string out = "n=" + std::to_string(a.n()) + "\n";
  if (a.face_count() == 0) return out + "\n";
  if (a.face_count() == 1) return out + "empty\n";
  bool first = true;
  for (Face f : maximal_faces(a)) {
    if (!first) out += ", ";
    out += face_token(f);
    first = false;
  }
  return out + "\n";
}

VertexPermutation parse_cycles(const std::string& text, int n) {
  Complex::check_n(n);
  VertexPermutation p = VertexPermutation::identity(n);
  std::string s = trim(text);
  if (s.empty() || s == "id" || s == "()") return p;
  unsigned seen = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (i < s.size() && s[i] != ')') {
      char c = s[i++];
      if (c == ' ' || c == ',') continue;
      if (c < '0' || c > '9') throw parse_error("cycle notation holds a non-digit");
      int v = c - '0';
      if (v >= n) throw parse_error("cycle names a vertex outside the ground set");
      if (seen & (1u << v)) throw parse_error("vertex repeated across cycles");
      seen |= 1u << v;
      cycle.push_back(v);
    }
    if (i == s.size()) throw parse_error("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      p.images[cycle[j]] = static_cast<std::uint8_t>(cycle[(j + 1) % cycle.size()]);
  }
  return p;
}

}  // namespace downset
