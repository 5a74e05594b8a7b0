#include "downset/enumerate.hpp"

#include <unordered_set>

namespace downset {

namespace {

constexpr int kExhaustiveBound = 6;

struct KeyHash {
  std::size_t operator()(const CanonicalKey& k) const { return k.hash(); }
};

// Masks are decided from 2^n - 1 down to 0. Every strict superset of a mask
// has a larger value, so by the time a mask comes up it is either already
// forced in by a chosen superset or free to go either way.
void walk(int mask, Bits256& forced, const std::function<void(const Bits256&)>& leaf) {
  while (mask >= 0 && forced.test(static_cast<unsigned>(mask))) --mask;
  if (mask < 0) {
    leaf(forced);
    return;
  }
  walk(mask - 1, forced, leaf);  // mask stays out
  Bits256 saved = forced;
  forced |= detail::kSubsets[mask];
  walk(mask - 1, forced, leaf);
  forced = saved;
}

void enumerate_mask_sets(int n, const std::function<void(const Bits256&)>& leaf) {
  Complex::check_n(n);
  Bits256 forced;
  walk((1 << n) - 1, forced, leaf);
}

}  // namespace

void enumerate_labeled(int n, const std::function<void(const Complex&)>& out) {
  enumerate_mask_sets(n, [&](const Bits256& chi) { out(Complex::unchecked(n, chi)); });
}

ExtensionCount count_labeled_complexes(int n) {
  Complex::check_n(n);
  if (n > kExhaustiveBound)
    throw invalid_parameter_error(
        "exhaustive census capped at n = 6; the n = 7 and n = 8 labeled counts "
        "are 2414682040998 and 56130437228687557907788");
  std::uint64_t count = 0;
  enumerate_mask_sets(n, [&](const Bits256&) { ++count; });
  return ExtensionCount(count);
}

std::uint64_t count_unlabeled_complexes(int n) {
  return census(n).unlabeled;
}

ComplexCensus census(int n, const std::function<void(const CanonicalKey&)>& sink) {
  Complex::check_n(n);
  if (n > kExhaustiveBound)
    throw invalid_parameter_error(
        "exhaustive census capped at n = 6; use the streaming class counter "
        "for larger ground sets");
  ComplexCensus out;
  out.n = n;
  std::uint64_t labeled = 0;
  std::unordered_set<CanonicalKey, KeyHash> classes;
  enumerate_mask_sets(n, [&](const Bits256& chi) {
    ++labeled;
    CanonicalKey key = canonicalize(Complex::unchecked(n, chi)).key;
    if (classes.insert(key).second && sink) sink(key);
  });
  out.labeled = labeled;
  out.unlabeled = classes.size();
  return out;
}

std::uint64_t count_unlabeled_streaming(int n,
                                        const std::function<void(const CanonicalKey&)>& sink) {
  Complex::check_n(n);
  std::uint64_t classes = 0;
  enumerate_mask_sets(n, [&](const Bits256& chi) {
    CanonicalKey key = canonicalize(Complex::unchecked(n, chi)).key;
    if (key.chi == chi) {
      ++classes;
      if (sink) sink(key);
    }
  });
  return classes;
}

}  // namespace downset
