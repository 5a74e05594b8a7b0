#pragma once

#include <array>
#include <bit>
#include <cstdint>

// Fixed 256-bit set indexed by face mask value. Bit m stands for the subset
// of the ground set whose characteristic vector is the binary expansion of m,
// so one Bits256 holds any family of faces over at most 8 vertices.

namespace downset {

struct Bits256 {
  static constexpr unsigned npos = 256;

  std::array<std::uint64_t, 4> w{};

  [[nodiscard]] constexpr bool test(unsigned m) const {
    return (w[m >> 6] >> (m & 63)) & 1u;
  }
  constexpr void set(unsigned m) { w[m >> 6] |= std::uint64_t{1} << (m & 63); }
  constexpr void reset(unsigned m) { w[m >> 6] &= ~(std::uint64_t{1} << (m & 63)); }
  constexpr void assign(unsigned m, bool v) {
    if (v) set(m); else reset(m);
  }

  [[nodiscard]] constexpr unsigned count() const {
    unsigned c = 0;
    for (std::uint64_t x : w) c += static_cast<unsigned>(std::popcount(x));
    return c;
  }
  [[nodiscard]] constexpr bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  [[nodiscard]] constexpr bool none() const { return !any(); }

  // First set bit with index >= from, or npos.
  [[nodiscard]] constexpr unsigned next(unsigned from) const {
    if (from >= npos) return npos;
    unsigned wi = from >> 6;
    std::uint64_t word = w[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word) return wi * 64 + static_cast<unsigned>(std::countr_zero(word));
      if (++wi == 4) return npos;
      word = w[wi];
    }
  }

  friend constexpr bool operator==(const Bits256&, const Bits256&) = default;

  friend constexpr Bits256 operator&(const Bits256& a, const Bits256& b) {
    Bits256 r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  friend constexpr Bits256 operator|(const Bits256& a, const Bits256& b) {
    Bits256 r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] | b.w[i];
    return r;
  }
  constexpr Bits256& operator&=(const Bits256& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  constexpr Bits256& operator|=(const Bits256& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  // this & ~o
  [[nodiscard]] constexpr Bits256 and_not(const Bits256& o) const {
    Bits256 r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
};

namespace detail {

constexpr std::array<Bits256, 256> make_superset_table() {
  std::array<Bits256, 256> t{};
  for (unsigned x = 0; x < 256; ++x)
    for (unsigned m = 0; m < 256; ++m)
      if ((m & x) == x) t[x].set(m);
  return t;
}

constexpr std::array<Bits256, 256> make_subset_table() {
  std::array<Bits256, 256> t{};
  for (unsigned x = 0; x < 256; ++x)
    for (unsigned m = 0; m < 256; ++m)
      if ((m & x) == m) t[x].set(m);
  return t;
}

// kSupersets[x] marks every mask containing x (x itself included), and
// kSubsets[x] every mask contained in x. A strict superset always has a
// strictly larger mask value, which the enumerator and canonicalizer rely on.
inline constexpr std::array<Bits256, 256> kSupersets = make_superset_table();
inline constexpr std::array<Bits256, 256> kSubsets = make_subset_table();

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_bits(const Bits256& b, std::uint64_t seed) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t x : b.w) h = mix64(h ^ x);
  return h;
}

}  // namespace detail
}  // namespace downset
