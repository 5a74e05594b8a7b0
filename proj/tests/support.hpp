#pragma once

// Shared oracles for the test suites. Everything here recomputes results by
// the most direct means available (plain recursion, full permutation
// enumeration, raw subset scans) so the library's canonicalization and memo
// machinery is checked against code that uses neither.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "downset/canonical.hpp"
#include "downset/complex.hpp"
#include "downset/games.hpp"
#include "downset/linext.hpp"

namespace testsupport {

using namespace downset;

// Every downward-closed family on n labeled points, by scanning all subsets
// of the 2^n masks. Only feasible for n <= 4.
inline std::vector<Complex> all_complexes_brute(int n) {
  std::vector<Complex> out;
  unsigned masks = 1u << n;
  for (std::uint64_t pick = 0; pick < (1ull << masks); ++pick) {
    bool closed = true;
    for (unsigned m = 0; closed && m < masks; ++m) {
      if (!((pick >> m) & 1)) continue;
      for (unsigned s = m; closed; s = (s - 1) & m) {
        if (!((pick >> s) & 1)) closed = false;
        if (s == 0) break;
      }
    }
    if (!closed) continue;
    Bits256 chi;
    for (unsigned m = 0; m < masks; ++m)
      if ((pick >> m) & 1) chi.set(m);
    out.push_back(Complex::unchecked(n, chi));
  }
  return out;
}

// Plain recursion, no memo, no canonicalization.
inline unsigned naive_grundy(const Complex& a) {
  std::vector<bool> seen(a.face_count() + 1, false);
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(1); m != Bits256::npos; m = chi.next(m + 1)) {
    unsigned g = naive_grundy(chomp_move(a, Face(m)));
    if (g < seen.size()) seen[g] = true;
  }
  unsigned g = 0;
  while (seen[g]) ++g;
  return g;
}

inline bool naive_win(const Complex& a) {
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(1); m != Bits256::npos; m = chi.next(m + 1))
    if (!naive_win(chomp_move(a, Face(m)))) return true;
  return false;
}

inline ExtensionCount naive_linext(const Complex& a) {
  if (a.face_count() == 0) return 1;
  ExtensionCount total = 0;
  for (Face m : maximal_faces(a)) total += naive_linext(delete_element(a, m));
  return total;
}

// Encoding order pinned for canonical forms: ascending sorted face lists
// compared lexicographically. For equal-size families that is "the complex
// holding the lowest differing mask is the smaller one".
inline bool encoding_less(const Bits256& a, const Bits256& b) {
  for (int i = 0; i < 4; ++i)
    if (a.w[i] != b.w[i]) {
      std::uint64_t diff = a.w[i] ^ b.w[i];
      std::uint64_t low = diff & (~diff + 1);
      return a.w[i] & low;
    }
  return false;
}

// Minimum encoding over every permutation of the ground set.
inline Bits256 exhaustive_canonical_min(const Complex& a) {
  int n = a.n();
  std::array<std::uint8_t, 8> perm{};
  for (int i = 0; i < n; ++i) perm[i] = static_cast<std::uint8_t>(i);
  Bits256 best = a.mask_set();
  do {
    VertexPermutation sigma;
    sigma.n = static_cast<std::uint8_t>(n);
    sigma.images = perm;
    Bits256 relabeled = apply_permutation(a, sigma).mask_set();
    if (encoding_less(relabeled, best)) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

// Minimum encoding over permutations that respect the invariant partition:
// new label p may only go to a vertex whose invariant equals that of the
// vertex holding position p in the invariant-sorted order. This is the
// search space canonicalize() promises to minimize over, reproduced here
// without branch-and-bound or incremental comparison.
inline Bits256 block_restricted_min(const Complex& a) {
  int n = a.n();
  auto inv = vertex_invariants(a);
  std::array<std::uint8_t, 8> order{};
  for (int i = 0; i < n; ++i) order[i] = static_cast<std::uint8_t>(i);
  std::sort(order.begin(), order.begin() + n, [&](std::uint8_t x, std::uint8_t y) {
    auto c = inv[x] <=> inv[y];
    return c != 0 ? c < 0 : x < y;
  });
  std::array<std::uint8_t, 8> pick{};
  for (int i = 0; i < n; ++i) pick[i] = static_cast<std::uint8_t>(i);
  bool have = false;
  Bits256 best;
  do {
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) ok = inv[pick[p]] == inv[order[p]];
    if (!ok) continue;
    VertexPermutation sigma;
    sigma.n = static_cast<std::uint8_t>(n);
    for (int p = 0; p < n; ++p) sigma.images[pick[p]] = static_cast<std::uint8_t>(p);
    Bits256 relabeled = apply_permutation(a, sigma).mask_set();
    if (!have || encoding_less(relabeled, best)) {
      best = relabeled;
      have = true;
    }
  } while (std::next_permutation(pick.begin(), pick.begin() + n));
  return best;
}

inline VertexPermutation random_permutation(int n, std::mt19937_64& rng) {
  VertexPermutation p = VertexPermutation::identity(n);
  std::shuffle(p.images.begin(), p.images.begin() + n, rng);
  return p;
}

// Random downward-closed family: the closure of a handful of random faces.
inline Complex random_complex(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> gen_count(0, 6);
  std::uniform_int_distribution<unsigned> gen_mask(0, (1u << n) - 1);
  std::vector<Face> faces;
  unsigned count = gen_count(rng);
  for (unsigned i = 0; i < count; ++i) faces.push_back(Face(gen_mask(rng)));
  return closure_of(std::span<const Face>(faces.data(), faces.size()), n);
}

// Random legal game position (holds the empty face).
inline Complex random_position(int n, std::mt19937_64& rng) {
  while (true) {
    Complex a = random_complex(n, rng);
    if (a.has_empty_face()) return a;
  }
}

}  // namespace testsupport
