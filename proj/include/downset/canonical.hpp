#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "downset/complex.hpp"

// Canonical labeling of complexes under vertex relabeling. Two complexes are
// isomorphic exactly when their canonical keys match, which is what makes
// positions from different branches of a game tree share memo entries.

namespace downset {

struct VertexPermutation {
  std::uint8_t n = 0;
  std::array<std::uint8_t, 8> images{};  // images[v] = new label of vertex v

  static VertexPermutation identity(int n);

  [[nodiscard]] bool is_bijection() const;
  [[nodiscard]] VertexPermutation inverse() const;
  // True when applying the permutation twice gives the identity.
  [[nodiscard]] bool is_involution() const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

struct VertexInvariant {
  std::uint8_t n = 0;
  std::array<std::uint8_t, 8> counts{};  // counts[j-1] = number of j-faces containing the vertex

  // Precedence used by the canonical ordering: vertices carrying more faces
  // come first (compare counts entrywise from j = 1, larger count earlier).
  // A vertex in no face at all therefore sorts behind every live vertex.
  friend constexpr std::strong_ordering operator<=>(const VertexInvariant& a,
                                                    const VertexInvariant& b) {
    for (int j = 0; j < 8; ++j)
      if (a.counts[j] != b.counts[j]) return b.counts[j] <=> a.counts[j];
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const VertexInvariant& a, const VertexInvariant& b) {
    return a.counts == b.counts;
  }
};

struct CanonicalKey {
  std::uint8_t n = 0;
  Bits256 chi;  // characteristic vector of the canonical representative

  [[nodiscard]] std::uint64_t hash() const { return detail::hash_bits(chi, n); }
  // "<n>:<hex>", hex of the 2^n-bit vector, most significant nibble first.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct Canonicalization {
  Complex representative;
  CanonicalKey key;
  VertexPermutation witness;  // apply_permutation(input, witness) == representative
};

// Per-vertex face counts by cardinality, index order = vertex label.
std::vector<VertexInvariant> vertex_invariants(const Complex& a);

Complex apply_permutation(const Complex& a, const VertexPermutation& sigma);
Face apply_to_face(Face f, const VertexPermutation& sigma);

// Least relabeled form of a. The encoding being minimized is the ascending
// sorted list of face masks compared lexicographically; the search runs over
// the permutations that sort vertices into invariant precedence order, via
// depth-first assignment of labels block by block with branch-and-bound.
Canonicalization canonicalize(const Complex& a);

}  // namespace downset
