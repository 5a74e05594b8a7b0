#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string_view>

#include "downset/engine.hpp"

// Linear extensions of a complex ordered by inclusion: orderings of the faces
// in which every face appears after all of its subsets. Counted by the
// recursion e(P) = sum over maximal m of e(P minus m), e(empty) = 1. Counts
// grow past 64 bits from the 5-cube on, hence the arbitrary-precision type.

namespace downset {

using ExtensionCount = boost::multiprecision::cpp_int;

struct ExtensionValuation {
  using value_type = ExtensionCount;
  static constexpr std::string_view id = "linext";

  // Families with at most one face count one ordering and are not worth a
  // memo entry; keeping them out of the table is what holds P(6,6) runs to
  // the isomorphism classes that carry at least two faces.
  static std::optional<value_type> base(const Complex& a) {
    if (a.face_count() <= 1) return value_type{1};
    return std::nullopt;
  }
  static bool is_move(const Complex& a, unsigned mask) {
    Bits256 above = a.mask_set() & detail::kSupersets[mask];
    above.reset(mask);
    return above.none();
  }
  static Complex child(const Complex& a, unsigned mask) {
    return delete_element(a, Face(mask));
  }

  struct accumulator {
    static constexpr bool supports_short_circuit = false;
    ExtensionCount sum{0};
    void feed(value_type v) { sum += v; }
    [[nodiscard]] bool decisive() const { return false; }
    [[nodiscard]] value_type finish() { return std::move(sum); }
  };
};

struct ExtensionResult {
  ExtensionCount value;
  RunStats stats;
};

ExtensionResult count_linear_extensions(const Complex& a,
                                        MemoTable<ExtensionCount>& memo,
                                        const EvalOptions& opt = {});
ExtensionResult count_linear_extensions(const Complex& a, const EvalOptions& opt = {});

// Closed form for the extension count of P(n, 2):
// n! (C(n,2) + n)! / prod_{i=1..n} (i n - C(i,2)). The division is exact;
// a nonzero remainder would be an implementation bug.
ExtensionCount e_pn2_closed_form(int n);

// Reference counter: enumerates all face orderings directly and keeps the
// ones where subsets precede supersets. No memo, no canonicalization.
// Refused above 10 faces.
ExtensionCount brute_force_extensions(const Complex& a);

}  // namespace downset
