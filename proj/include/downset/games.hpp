#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "downset/engine.hpp"

// Subset takeaway on a downward-closed family: a move names a nonempty face
// and removes it together with every face containing it; a player with no
// move loses. Legal positions always contain the empty face, which is never
// removable, so the position with only the empty face is the terminal loss.

namespace downset {

enum class Outcome : std::uint8_t { first_player_loss = 0, first_player_win = 1 };

[[nodiscard]] constexpr std::string_view to_string(Outcome o) {
  return o == Outcome::first_player_win ? "first-player-win" : "first-player-loss";
}

using GrundyValue = std::uint16_t;

// Least nonnegative integer missing from the list.
GrundyValue mex(std::span<const GrundyValue> values);

struct GrundyValuation {
  using value_type = GrundyValue;
  static constexpr std::string_view id = "grundy";

  static std::optional<value_type> base(const Complex& a) {
    if (a.face_count() <= 1) return value_type{0};
    return std::nullopt;
  }
  static bool is_move(const Complex&, unsigned mask) { return mask != 0; }
  static Complex child(const Complex& a, unsigned mask) {
    return chomp_move(a, Face(mask));
  }

  struct accumulator {
    static constexpr bool supports_short_circuit = false;
    Bits256 seen;  // child value x < 256 marks bit x; mex is the first clear bit
    void feed(value_type v) { seen.set(v); }
    [[nodiscard]] bool decisive() const { return false; }
    [[nodiscard]] value_type finish() const {
      for (unsigned g = 0;; ++g)
        if (!seen.test(g)) return static_cast<value_type>(g);
    }
  };
};

struct OutcomeValuation {
  using value_type = Outcome;
  static constexpr std::string_view id = "winloss";

  static std::optional<value_type> base(const Complex& a) {
    if (a.face_count() <= 1) return Outcome::first_player_loss;
    return std::nullopt;
  }
  static bool is_move(const Complex&, unsigned mask) { return mask != 0; }
  static Complex child(const Complex& a, unsigned mask) {
    return chomp_move(a, Face(mask));
  }

  struct accumulator {
    static constexpr bool supports_short_circuit = true;
    bool any_losing_child = false;
    void feed(value_type v) {
      if (v == Outcome::first_player_loss) any_losing_child = true;
    }
    [[nodiscard]] bool decisive() const { return any_losing_child; }
    [[nodiscard]] value_type finish() const {
      return any_losing_child ? Outcome::first_player_win : Outcome::first_player_loss;
    }
  };
};

struct GrundyResult {
  GrundyValue value = 0;
  RunStats stats;
};

struct OutcomeResult {
  Outcome outcome = Outcome::first_player_loss;
  RunStats stats;
};

struct WinningMoves {
  std::vector<Face> moves;  // ascending mask order; empty exactly for losses
  RunStats stats;
};

GrundyResult grundy(const Complex& a, MemoTable<GrundyValue>& memo,
                    const EvalOptions& opt = {});
GrundyResult grundy(const Complex& a, const EvalOptions& opt = {});

OutcomeResult winloss(const Complex& a, MemoTable<Outcome>& memo,
                      const EvalOptions& opt = {});
OutcomeResult winloss(const Complex& a, const EvalOptions& opt = {});

// Moves whose resulting position is a first-player loss. With find_first set,
// stops at the lowest-mask winning move.
WinningMoves winning_moves(const Complex& a, bool find_first = false,
                           const EvalOptions& opt = {});
WinningMoves winning_moves(const Complex& a, MemoTable<Outcome>& memo,
                           bool find_first = false, const EvalOptions& opt = {});

// Faces fixed setwise by an order <= 2 automorphism phi of a. When that fixed
// family is downward closed it has the same outcome and Grundy value as a;
// the hypotheses are verified and their failure reported as not applicable.
Complex fixed_subcomplex(const Complex& a, const VertexPermutation& phi);

}  // namespace downset
