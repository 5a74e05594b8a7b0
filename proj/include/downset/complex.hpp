#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "downset/bits.hpp"
#include "downset/errors.hpp"

// Faces and downward-closed families (abstract simplicial complexes, with or
// without the empty face) over a ground set of at most 8 labeled vertices.

namespace downset {

class Face {
 public:
  constexpr Face() = default;
  explicit constexpr Face(unsigned bits) : bits_(static_cast<std::uint16_t>(bits)) {}

  static Face of(std::initializer_list<int> vertices) {
    unsigned b = 0;
    for (int v : vertices) {
      if (v < 0 || v > 9) throw invalid_parameter_error("face vertex out of range");
      b |= 1u << v;
    }
    return Face(b);
  }

  [[nodiscard]] constexpr unsigned bits() const { return bits_; }
  [[nodiscard]] constexpr unsigned size() const {
    return static_cast<unsigned>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  [[nodiscard]] constexpr bool subset_of(Face o) const { return (bits_ & o.bits_) == bits_; }

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint16_t bits_ = 0;
};

class Complex {
 public:
  static constexpr int max_ground_set = 8;

  // Empty family on an empty ground set.
  constexpr Complex() = default;

  static Complex empty_family(int n) {
    check_n(n);
    return Complex(n, Bits256{});
  }

  // Validates downward closure; throws invalid_parameter_error otherwise.
  static Complex from_mask_set(int n, const Bits256& faces);

  // Caller guarantees the mask set is downward closed and fits in n bits.
  static constexpr Complex unchecked(int n, const Bits256& faces) {
    return Complex(n, faces);
  }

  [[nodiscard]] constexpr int n() const { return n_; }
  [[nodiscard]] constexpr const Bits256& mask_set() const { return faces_; }
  [[nodiscard]] unsigned face_count() const { return faces_.count(); }
  [[nodiscard]] bool contains(Face f) const {
    return f.bits() < 256 && faces_.test(f.bits());
  }
  [[nodiscard]] bool has_empty_face() const { return faces_.test(0); }

  // All faces in ascending mask order.
  [[nodiscard]] std::vector<Face> faces() const;

  friend bool operator==(const Complex&, const Complex&) = default;

  static void check_n(int n) {
    if (n < 0 || n > max_ground_set)
      throw invalid_parameter_error("ground set size must be between 0 and 8");
  }

 private:
  constexpr Complex(int n, const Bits256& faces)
      : n_(static_cast<std::uint8_t>(n)), faces_(faces) {}

  std::uint8_t n_ = 0;
  Bits256 faces_;
};

// All subsets of {0,...,n-1} with at most k elements. P(n, n) is the full
// power set (the Boolean lattice B_n), P(n, 0) is the single empty face.
Complex build_pnk(int n, int k);

// Smallest downward-closed family containing the given faces. An empty list
// yields the empty family.
Complex closure_of(std::span<const Face> faces, int n);
Complex closure_of(std::initializer_list<Face> faces, int n);

// Faces not strictly contained in another face, ascending mask order.
std::vector<Face> maximal_faces(const Complex& a);

// Subset-takeaway move: remove x and every face containing it. x must be a
// nonempty face of a.
Complex chomp_move(const Complex& a, Face x);

// Remove one maximal face (the linear-extension recursion step).
Complex delete_element(const Complex& a, Face m);

[[nodiscard]] bool is_downward_closed(const Complex& a);

}  // namespace downset
