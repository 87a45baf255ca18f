// Small hand-built games, forms, and orders reused across the test suites.

#pragma once

#include "equitrans/games.hpp"
#include "equitrans/poset.hpp"
#include "equitrans/secure.hpp"

#include <vector>

namespace fixtures {

using namespace equitrans;

struct PayoffGame {
  MatrixGameForm form;
  PayoffTable payoffs;

  MatrixGame game() const {
    auto [p1, p2] = own_payoff_prefs(payoffs);
    return {form, std::move(p1), std::move(p2)};
  }
};

inline PayoffGame payoff_game_2x2(std::vector<std::pair<long long, long long>> cells) {
  // Distinct payoff pairs become outcomes, first occurrence order.
  std::vector<std::pair<Rational, Rational>> outcomes;
  std::vector<int> table;
  for (auto [a, b] : cells) {
    const std::pair<Rational, Rational> pay{Rational(a), Rational(b)};
    int index = -1;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
      if (outcomes[i] == pay) index = static_cast<int>(i);
    if (index < 0) {
      index = static_cast<int>(outcomes.size());
      outcomes.push_back(pay);
    }
    table.push_back(index);
  }
  std::vector<std::string> labels;
  PayoffTable pt;
  for (const auto& pay : outcomes) {
    labels.push_back("(" + format_rational(pay.first) + "," + format_rational(pay.second) + ")");
    pt.pay.push_back(pay);
  }
  return {MatrixGameForm(2, 2, std::move(labels), std::move(table)), std::move(pt)};
}

// Four classic 2x2 payoff games. `upper_edge` has two equilibria on the
// anti-diagonal, `matching_pennies` has none, `coordination` has the two
// diagonal ones, and `row_dictator` is win/lose with a winning bottom row.
inline PayoffGame upper_edge() {
  return payoff_game_2x2({{1, 0}, {5, 0}, {2, 4}, {5, 3}});
}
inline PayoffGame matching_pennies() {
  return payoff_game_2x2({{0, 1}, {1, 0}, {1, 0}, {0, 1}});
}
inline PayoffGame coordination() {
  return payoff_game_2x2({{2, 1}, {0, 0}, {0, 0}, {1, 2}});
}
inline PayoffGame row_dictator() {
  return payoff_game_2x2({{0, 1}, {0, 1}, {1, 0}, {1, 0}});
}

inline MatrixGameForm form_from(int rows, int cols, std::vector<std::string> labels,
                                std::vector<int> table) {
  return MatrixGameForm(rows, cols, std::move(labels), std::move(table));
}

// Four small game forms over outcomes {X, Y, Z}: the first two are not
// determined, the last two are.
inline MatrixGameForm diagonal_form() {  // X Y / Y X
  return form_from(2, 2, {"X", "Y", "Z"}, {0, 1, 1, 0});
}
inline MatrixGameForm shift_form() {  // X Y Z / Y Z X
  return form_from(2, 3, {"X", "Y", "Z"}, {0, 1, 2, 1, 2, 0});
}
inline MatrixGameForm merge_form() {  // X Z / Y Y
  return form_from(2, 2, {"X", "Y", "Z"}, {0, 2, 1, 1});
}
inline MatrixGameForm funnel_form() {  // X Z Y / Y Y Y
  return form_from(2, 3, {"X", "Y", "Z"}, {0, 2, 1, 1, 1, 1});
}

/// The usual < on {1..5}; element i carries label i+1.
inline Poset chain5() {
  BinaryRelation rel(5);
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) rel.add(x, y);
  return Poset::validate(std::move(rel), {"1", "2", "3", "4", "5"});
}

/// A strictly lift-increasing chain of ten subsets of {1..5}, worst first.
inline std::vector<Subset> lift_chain_sets() {
  const auto set = [](std::initializer_list<int> labels) {
    Subset s(5);
    for (int v : labels) s.set(static_cast<std::size_t>(v - 1));
    return s;
  };
  return {set({1, 2, 3, 4, 5}), set({1}), set({2, 3, 4, 5}), set({2, 3}),
          set({2, 4, 5}),       set({2}), set({3, 5}),       set({3}),
          set({4}),             set({})};
}

}  // namespace fixtures
