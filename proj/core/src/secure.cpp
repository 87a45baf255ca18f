#include "equitrans/secure.hpp"

namespace equitrans {

std::pair<Poset, Poset> malevolent_prefs(const PayoffTable& payoffs) {
  const int n = static_cast<int>(payoffs.size());
  BinaryRelation r1(n), r2(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& [x1, x2] = payoffs.pay[static_cast<std::size_t>(x)];
      const auto& [y1, y2] = payoffs.pay[static_cast<std::size_t>(y)];
      if (x1 < y1 || (x1 == y1 && y2 < x2)) r1.add(x, y);
      if (x2 < y2 || (x2 == y2 && y1 < x1)) r2.add(x, y);
    }
  return {Poset::validate(std::move(r1)), Poset::validate(std::move(r2))};
}

MatrixGame malevolent_game(const MatrixGameForm& form, const PayoffTable& payoffs) {
  if (payoffs.size() != static_cast<std::size_t>(form.outcomes()))
    throw std::invalid_argument("payoff table size does not match the outcome count");
  auto [pref1, pref2] = malevolent_prefs(payoffs);
  return {form, std::move(pref1), std::move(pref2)};
}

bool is_secure(const MatrixGameForm& form, const PayoffTable& payoffs, Profile p) {
  return is_nash(malevolent_game(form, payoffs), p);
}

}  // namespace equitrans
