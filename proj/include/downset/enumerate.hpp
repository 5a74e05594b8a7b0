#pragma once

#include <functional>

#include "downset/canonical.hpp"
#include "downset/linext.hpp"

// Census of downward-closed families over n labeled points: the labeled count
// (Dedekind numbers; both the empty family and the family holding only the
// empty face are included) and the number of isomorphism classes. Enumeration
// walks face masks from largest to smallest and branches only on faces not
// already forced in by a chosen superset, so each family is produced once.

namespace downset {

struct ComplexCensus {
  int n = 0;
  ExtensionCount labeled = 0;
  std::uint64_t unlabeled = 0;
};

// Calls out(family) once per downward-closed family on n labeled points.
void enumerate_labeled(int n, const std::function<void(const Complex&)>& out);

// Exhaustive counts; refused for n > 6 where recounting is not feasible
// (the labeled values for n = 7, 8 are 2414682040998 and
// 56130437228687557907788, far past direct enumeration at desk scale).
ExtensionCount count_labeled_complexes(int n);
std::uint64_t count_unlabeled_complexes(int n);

// Both counts in one enumeration pass. A sink, when given, receives each
// distinct canonical key the first time its class appears (n <= 6 only).
ComplexCensus census(int n, const std::function<void(const CanonicalKey&)>& sink = {});

// Streaming class counter without the in-memory key set: counts families that
// equal their own canonical form, one per class. Usable for n = 7 in
// principle, but that run enumerates trillions of labeled families; it exists
// for long extended runs and for cross-checking the set-based path.
std::uint64_t count_unlabeled_streaming(int n,
                                        const std::function<void(const CanonicalKey&)>& sink = {});

}  // namespace downset
