#include "downset/linext.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace downset {

ExtensionResult count_linear_extensions(const Complex& a,
                                        MemoTable<ExtensionCount>& memo,
                                        const EvalOptions& opt) {
  auto [v, stats] = evaluate<ExtensionValuation>(a, memo, opt);
  return ExtensionResult{std::move(v), stats};
}

ExtensionResult count_linear_extensions(const Complex& a, const EvalOptions& opt) {
  MemoTable<ExtensionCount> memo;
  return count_linear_extensions(a, memo, opt);
}

ExtensionCount e_pn2_closed_form(int n) {
  if (n < 0 || n > 64) throw invalid_parameter_error("n out of range for the closed form");
  auto factorial = [](long long k) {
    ExtensionCount f = 1;
    for (long long i = 2; i <= k; ++i) f *= i;
    return f;
  };
  auto choose2 = [](long long k) { return k * (k - 1) / 2; };
  ExtensionCount numerator = factorial(n) * factorial(choose2(n) + n);
  ExtensionCount denominator = 1;
  for (long long i = 1; i <= n; ++i) denominator *= ExtensionCount(i * n - choose2(i));
  ExtensionCount q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) throw std::logic_error("closed form division left a remainder");
  return q;
}

ExtensionCount brute_force_extensions(const Complex& a) {
  if (a.face_count() > 10)
    throw invalid_parameter_error("brute-force extension counting capped at 10 faces");
  std::vector<unsigned> order;
  for (unsigned m = a.mask_set().next(0); m != Bits256::npos; m = a.mask_set().next(m + 1))
    order.push_back(m);
  ExtensionCount count = 0;
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if ((order[j] & order[i]) == order[j]) {  // a subset placed after its superset
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

}  // namespace downset
