#include "downset/canonical.hpp"

#include <algorithm>

namespace downset {

VertexPermutation VertexPermutation::identity(int n) {
  Complex::check_n(n);
  VertexPermutation p;
  p.n = static_cast<std::uint8_t>(n);
  for (int v = 0; v < n; ++v) p.images[v] = static_cast<std::uint8_t>(v);
  return p;
}

bool VertexPermutation::is_bijection() const {
  if (n > 8) return false;
  unsigned seen = 0;
  for (int v = 0; v < n; ++v) {
    if (images[v] >= n) return false;
    seen |= 1u << images[v];
  }
  return seen + 1 == (1u << n);
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation p;
  p.n = n;
  for (int v = 0; v < n; ++v) p.images[images[v]] = static_cast<std::uint8_t>(v);
  return p;
}

bool VertexPermutation::is_involution() const {
  for (int v = 0; v < n; ++v)
    if (images[images[v]] != v) return false;
  return true;
}

std::string CanonicalKey::to_string() const {
  unsigned bits = 1u << n;
  unsigned digits = (bits + 3) / 4;
  std::string out = std::to_string(static_cast<int>(n)) + ":";
  for (unsigned d = digits; d-- > 0;) {
    unsigned nibble = (chi.w[d >> 4] >> ((d & 15) * 4)) & 0xf;
    out += "0123456789abcdef"[nibble];
  }
  return out;
}

std::vector<VertexInvariant> vertex_invariants(const Complex& a) {
  std::vector<VertexInvariant> inv(a.n());
  for (auto& x : inv) x.n = static_cast<std::uint8_t>(a.n());
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(1); m != Bits256::npos; m = chi.next(m + 1)) {
    int size = std::popcount(m);
    for (unsigned rest = m; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      ++inv[v].counts[size - 1];
    }
  }
  return inv;
}

Face apply_to_face(Face f, const VertexPermutation& sigma) {
  unsigned out = 0;
  for (unsigned rest = f.bits(); rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out |= 1u << sigma.images[v];
  }
  return Face(out);
}

Complex apply_permutation(const Complex& a, const VertexPermutation& sigma) {
  if (sigma.n != a.n() || !sigma.is_bijection())
    throw invalid_parameter_error("permutation does not match the ground set");
  Bits256 out;
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(0); m != Bits256::npos; m = chi.next(m + 1))
    out.set(apply_to_face(Face(m), sigma).bits());
  return Complex::unchecked(a.n(), out);
}

namespace {

// Branch-and-bound search for the least relabeling. Labels are assigned one
// at a time; after new labels 0..d have images, exactly the relabeled masks
// below 2^(d+1) are determined, so candidate orderings can be compared against
// the incumbent region by region and abandoned at the first losing mask.
// In the encoding order used here (ascending sorted face lists compared
// lexicographically) the complex holding the lowest differing mask wins.
struct CanonSearch {
  const Bits256* chi = nullptr;
  int n = 0;
  std::array<std::uint8_t, 8> order{};        // vertices in invariant precedence
  std::array<std::uint8_t, 8> block_end{};    // past-the-end position of each position's block
  std::array<std::uint8_t, 256> new2old{};    // relabeled mask -> original mask
  std::array<std::uint8_t, 8> images{};       // original vertex -> new label (along current path)
  std::array<std::uint8_t, 8> best_images{};
  Bits256 cur;
  Bits256 best;
  unsigned used = 0;  // original vertices already assigned
  bool have_best = false;

  // Returns true when best was replaced somewhere in the subtree. A node's
  // `less` flag means the path's determined prefix is already strictly below
  // the incumbent; after a replacement the prefix matches the new incumbent,
  // so the flag resets to equal in the caller.
  bool dfs(int depth, bool less) {
    if (depth == n) {
      if (!have_best || less) {
        best = cur;
        best_images = images;
        have_best = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    // Positions of one block share their candidate set; locate depth's block.
    int begin = 0;
    while (block_end[begin] <= depth) begin = block_end[begin];
    int end = block_end[begin];
    const unsigned lo = 1u << depth, hi = lo << 1;
    for (int p = begin; p < end; ++p) {
      int v = order[p];
      if (used & (1u << v)) continue;
      const unsigned vbit = 1u << v;
      for (unsigned t = 0; t < lo; ++t)
        new2old[lo + t] = static_cast<std::uint8_t>(new2old[t] | vbit);
      int cmp = 0;  // -1 cur region below incumbent, +1 above
      if (!have_best || less) {
        for (unsigned m = lo; m < hi; ++m) cur.assign(m, chi->test(new2old[m]));
      } else {
        for (unsigned m = lo; m < hi; ++m) {
          bool bit = chi->test(new2old[m]);
          cur.assign(m, bit);
          if (cmp == 0 && bit != best.test(m)) {
            cmp = bit ? -1 : 1;
            if (cmp > 0) break;
          }
        }
        if (cmp > 0) continue;
      }
      images[v] = static_cast<std::uint8_t>(depth);
      used |= vbit;
      if (dfs(depth + 1, less || cmp < 0)) {
        updated = true;
        less = false;
      }
      used &= ~vbit;
    }
    return updated;
  }
};

}  // namespace

Canonicalization canonicalize(const Complex& a) {
  const int n = a.n();
  CanonSearch s;
  s.chi = &a.mask_set();
  s.n = n;

  std::array<VertexInvariant, 8> inv{};
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(1); m != Bits256::npos; m = chi.next(m + 1)) {
    int size = std::popcount(m);
    for (unsigned rest = m; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      ++inv[v].counts[size - 1];
    }
  }
  for (int v = 0; v < n; ++v) s.order[v] = static_cast<std::uint8_t>(v);
  std::sort(s.order.begin(), s.order.begin() + n, [&](std::uint8_t x, std::uint8_t y) {
    auto c = inv[x] <=> inv[y];
    return c != 0 ? c < 0 : x < y;
  });
  for (int p = 0; p < n;) {
    int q = p + 1;
    while (q < n && inv[s.order[q]] == inv[s.order[p]]) ++q;
    for (int i = p; i < q; ++i) s.block_end[i] = static_cast<std::uint8_t>(q);
    p = q;
  }

  s.new2old[0] = 0;
  s.cur.assign(0, chi.test(0));
  s.dfs(0, false);

  Canonicalization out{Complex::unchecked(n, s.best),
                       CanonicalKey{static_cast<std::uint8_t>(n), s.best},
                       VertexPermutation{}};
  out.witness.n = static_cast<std::uint8_t>(n);
  out.witness.images = s.best_images;
  return out;
}

}  // namespace downset
