#include "downset/complex.hpp"

namespace downset {

namespace {

void check_face_fits(Face f, int n) {
  if (f.bits() >= (1u << n))
    throw invalid_parameter_error("face has a vertex outside the ground set");
}

}  // namespace

Complex Complex::from_mask_set(int n, const Bits256& faces) {
  check_n(n);
  Complex c(n, faces);
  if (faces.next(n == 8 ? 256 : (1u << n)) != Bits256::npos)
    throw invalid_parameter_error("face has a vertex outside the ground set");
  if (!is_downward_closed(c))
    throw invalid_parameter_error("family is not downward closed");
  return c;
}

std::vector<Face> Complex::faces() const {
  std::vector<Face> out;
  out.reserve(face_count());
  for (unsigned m = faces_.next(0); m != Bits256::npos; m = faces_.next(m + 1))
    out.push_back(Face(m));
  return out;
}

Complex build_pnk(int n, int k) {
  Complex::check_n(n);
  if (k < 0 || k > n) throw invalid_parameter_error("k must be between 0 and n");
  Bits256 faces;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (std::popcount(m) <= static_cast<unsigned>(k)) faces.set(m);
  return Complex::unchecked(n, faces);
}

Complex closure_of(std::span<const Face> faces, int n) {
  Complex::check_n(n);
  Bits256 out;
  for (Face f : faces) {
    check_face_fits(f, n);
    out |= detail::kSubsets[f.bits()];
  }
  return Complex::unchecked(n, out);
}

Complex closure_of(std::initializer_list<Face> faces, int n) {
  return closure_of(std::span<const Face>(faces.begin(), faces.size()), n);
}

std::vector<Face> maximal_faces(const Complex& a) {
  std::vector<Face> out;
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(0); m != Bits256::npos; m = chi.next(m + 1)) {
    Bits256 above = chi & detail::kSupersets[m];
    above.reset(m);
    if (above.none()) out.push_back(Face(m));
  }
  return out;
}

Complex chomp_move(const Complex& a, Face x) {
  if (x.empty()) throw illegal_move_error("cannot remove the empty face");
  if (!a.contains(x)) throw illegal_move_error("move names a face not in the position");
  return Complex::unchecked(a.n(), a.mask_set().and_not(detail::kSupersets[x.bits()]));
}

Complex delete_element(const Complex& a, Face m) {
  if (!a.contains(m)) throw invalid_parameter_error("face not in the family");
  Bits256 above = a.mask_set() & detail::kSupersets[m.bits()];
  above.reset(m.bits());
  if (above.any()) throw invalid_parameter_error("face is not maximal");
  Bits256 rest = a.mask_set();
  rest.reset(m.bits());
  return Complex::unchecked(a.n(), rest);
}

bool is_downward_closed(const Complex& a) {
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(0); m != Bits256::npos; m = chi.next(m + 1))
    if ((chi & detail::kSubsets[m]) != detail::kSubsets[m]) return false;
  return true;
}

}  // namespace downset
