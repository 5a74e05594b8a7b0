#include "downset/games.hpp"

namespace downset {

namespace {

void check_position(const Complex& a) {
  if (!a.has_empty_face())
    throw invalid_position_error("not a legal position: empty face missing");
}

}  // namespace

GrundyValue mex(std::span<const GrundyValue> values) {
  // The mex of k values is at most k, so a k+1 wide presence table suffices.
  std::vector<bool> seen(values.size() + 1, false);
  for (GrundyValue v : values)
    if (v < seen.size()) seen[v] = true;
  GrundyValue g = 0;
  while (seen[g]) ++g;
  return g;
}

GrundyResult grundy(const Complex& a, MemoTable<GrundyValue>& memo,
                    const EvalOptions& opt) {
  check_position(a);
  auto [v, stats] = evaluate<GrundyValuation>(a, memo, opt);
  return GrundyResult{v, stats};
}

GrundyResult grundy(const Complex& a, const EvalOptions& opt) {
  MemoTable<GrundyValue> memo;
  return grundy(a, memo, opt);
}

OutcomeResult winloss(const Complex& a, MemoTable<Outcome>& memo,
                      const EvalOptions& opt) {
  check_position(a);
  auto [v, stats] = evaluate_shortcircuit<OutcomeValuation>(a, memo, opt);
  return OutcomeResult{v, stats};
}

OutcomeResult winloss(const Complex& a, const EvalOptions& opt) {
  MemoTable<Outcome> memo;
  return winloss(a, memo, opt);
}

WinningMoves winning_moves(const Complex& a, MemoTable<Outcome>& memo,
                           bool find_first, const EvalOptions& opt) {
  check_position(a);
  WinningMoves out;
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(1); m != Bits256::npos; m = chi.next(m + 1)) {
    Complex child = chomp_move(a, Face(m));
    auto [v, stats] = evaluate_shortcircuit<OutcomeValuation>(child, memo, opt);
    out.stats.positions_visited += stats.positions_visited;
    out.stats.positions_stored += stats.positions_stored;
    out.stats.elapsed += stats.elapsed;
    if (v == Outcome::first_player_loss) {
      out.moves.push_back(Face(m));
      if (find_first) break;
    }
  }
  return out;
}

WinningMoves winning_moves(const Complex& a, bool find_first, const EvalOptions& opt) {
  MemoTable<Outcome> memo;
  return winning_moves(a, memo, find_first, opt);
}

Complex fixed_subcomplex(const Complex& a, const VertexPermutation& phi) {
  if (phi.n != a.n() || !phi.is_bijection())
    throw invalid_parameter_error("permutation does not match the ground set");
  if (!phi.is_involution())
    throw not_applicable_error("permutation is not of order at most 2");
  if (apply_permutation(a, phi) != a)
    throw not_applicable_error("permutation is not an automorphism of the family");
  Bits256 fixed;
  const Bits256& chi = a.mask_set();
  for (unsigned m = chi.next(0); m != Bits256::npos; m = chi.next(m + 1))
    if (apply_to_face(Face(m), phi).bits() == m) fixed.set(m);
  Complex f = Complex::unchecked(a.n(), fixed);
  if (!is_downward_closed(f))
    throw not_applicable_error("fixed faces do not form a downward-closed family");
  return f;
}

}  // namespace downset
