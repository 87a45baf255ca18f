#include "equitrans/priority.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace equitrans {

Arena::Arena(std::vector<Vertex> vertices, int initial)
    : vertices_(std::move(vertices)), initial_(initial) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("arena must have at least one vertex");
  if (initial_ < 0 || initial_ >= n)
    throw std::invalid_argument("initial vertex out of range");
  for (int v = 0; v < n; ++v) {
    const auto& vx = vertices_[static_cast<std::size_t>(v)];
    if (vx.successors.empty())
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is a dead end; plays must be infinite");
    for (int w : vx.successors)
      if (w < 0 || w >= n)
        throw std::invalid_argument("edge target out of range at vertex " +
                                    std::to_string(v));
    if (vx.priority < 0)
      throw std::invalid_argument("priorities must be nonnegative");
    priorities_.push_back(vx.priority);
  }
  std::sort(priorities_.begin(), priorities_.end());
  priorities_.erase(std::unique(priorities_.begin(), priorities_.end()),
                    priorities_.end());
}

bool PositionalStrategy::valid_for(const Arena& arena, Player owner) const {
  if (static_cast<int>(choice.size()) != arena.size()) return false;
  for (int v = 0; v < arena.size(); ++v) {
    const auto& vx = arena.vertex(v);
    const int c = choice[static_cast<std::size_t>(v)];
    if (vx.owner == owner) {
      if (std::find(vx.successors.begin(), vx.successors.end(), c) ==
          vx.successors.end())
        return false;
    } else if (c != -1) {
      return false;
    }
  }
  return true;
}

PriorityGame::PriorityGame(Arena arena,
                           std::map<int, std::pair<Rational, Rational>> payoffs)
    : arena_(std::move(arena)), payoffs_(std::move(payoffs)) {
  const auto& occurring = arena_.occurring_priorities();
  if (payoffs_.size() != occurring.size())
    throw std::invalid_argument("payoff table must cover exactly the occurring priorities");
  for (int p : occurring)
    if (!payoffs_.contains(p))
      throw std::invalid_argument("no payoff pair for priority " + std::to_string(p));
}

PayoffTable payoff_table(const PriorityGame& game) {
  PayoffTable table;
  for (int p : game.arena().occurring_priorities())
    table.pay.push_back(game.payoffs().at(p));
  return table;
}

ParityInstance reparity_encode(const Arena& arena, const std::set<int>& player1_wins) {
  const auto& occurring = arena.occurring_priorities();
  for (int p : player1_wins)
    if (!std::binary_search(occurring.begin(), occurring.end(), p))
      throw std::invalid_argument("winning set names priority " + std::to_string(p) +
                                  " which does not occur");
  // Walk the occurring priorities in ascending order, assigning the smallest
  // weakly increasing parity-faithful codes: even codes for winning
  // priorities, odd for losing ones.
  std::map<int, int> remap;
  int code = 0;
  bool first = true;
  for (int p : occurring) {
    const bool wins = player1_wins.contains(p);
    if (first) {
      code = wins ? 0 : 1;
      first = false;
    } else if ((code % 2 == 0) != wins) {
      ++code;
    }
    remap[p] = code;
  }
  std::vector<Arena::Vertex> vertices = arena.vertices();
  for (auto& vx : vertices) vx.priority = remap.at(vx.priority);
  return {Arena(std::move(vertices), arena.initial())};
}

namespace {

// Zielonka with explicit alive masks. Strategies are written into the two
// choice arrays as regions become final; entries for vertices that end up in
// the opponent's region are scrubbed at the top level.
class ZielonkaSolver {
 public:
  explicit ZielonkaSolver(const Arena& arena)
      : arena_(arena),
        n_(arena.size()),
        reverse_(static_cast<std::size_t>(n_)),
        strat1_(static_cast<std::size_t>(n_), -1),
        strat2_(static_cast<std::size_t>(n_), -1) {
    for (int v = 0; v < n_; ++v)
      for (int w : arena_.vertex(v).successors)
        reverse_[static_cast<std::size_t>(w)].push_back(v);
  }

  ParityRegions run() {
    Subset all(static_cast<std::size_t>(n_));
    all.set();
    const Subset winner1 = solve(all);
    for (int v = 0; v < n_; ++v) {
      const bool p1_vertex = arena_.vertex(v).owner == Player::One;
      const bool p1_wins = winner1.test(static_cast<std::size_t>(v));
      if (!p1_vertex || !p1_wins) strat1_[static_cast<std::size_t>(v)] = -1;
      if (p1_vertex || p1_wins) strat2_[static_cast<std::size_t>(v)] = -1;
    }
    return {winner1, PositionalStrategy{std::move(strat1_)},
            PositionalStrategy{std::move(strat2_)}};
  }

 private:
  std::vector<int>& strat_for(Player p) { return p == Player::One ? strat1_ : strat2_; }

  // Attractor of `target` for `p` within `alive`; records attractor-strategy
  // edges for p's newly attracted vertices (never for the target itself).
  Subset attract(const Subset& alive, Player p, const Subset& target) {
    Subset attr = target;
    std::vector<int> escapes(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      if (!alive.test(static_cast<std::size_t>(v))) continue;
      if (arena_.vertex(v).owner == p) continue;
      for (int w : arena_.vertex(v).successors)
        if (alive.test(static_cast<std::size_t>(w))) ++escapes[static_cast<std::size_t>(v)];
    }
    const std::vector<int> seeds = subset_members(target);
    std::deque<int> queue(seeds.begin(), seeds.end());
    auto& strat = strat_for(p);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : reverse_[static_cast<std::size_t>(u)]) {
        if (!alive.test(static_cast<std::size_t>(v)) || attr.test(static_cast<std::size_t>(v)))
          continue;
        if (arena_.vertex(v).owner == p) {
          attr.set(static_cast<std::size_t>(v));
          strat[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (--escapes[static_cast<std::size_t>(v)] == 0) {
          attr.set(static_cast<std::size_t>(v));
          queue.push_back(v);
        }
      }
    }
    return attr;
  }

  // Returns Player 1's winning region within `alive` and fills strategies for
  // every alive vertex owned by its region's winner.
  Subset solve(const Subset& alive) {
    Subset empty(static_cast<std::size_t>(n_));
    if (alive.none()) return empty;

    int least = -1;
    for (auto v = alive.find_first(); v != Subset::npos; v = alive.find_next(v)) {
      const int p = arena_.vertex(static_cast<int>(v)).priority;
      if (least < 0 || p < least) least = p;
    }
    const Player mover = least % 2 == 0 ? Player::One : Player::Two;

    Subset least_set(static_cast<std::size_t>(n_));
    for (auto v = alive.find_first(); v != Subset::npos; v = alive.find_next(v))
      if (arena_.vertex(static_cast<int>(v)).priority == least) least_set.set(v);

    const Subset head = attract(alive, mover, least_set);
    const Subset tail = alive - head;
    const Subset tail_w1 = solve(tail);
    const Subset tail_for_opponent = mover == Player::One ? tail - tail_w1 : tail_w1;

    if (tail_for_opponent.none()) {
      // `mover` wins everywhere in `alive`: recursion strategy on the tail,
      // attractor strategy toward the least-priority set, any alive move there.
      auto& strat = strat_for(mover);
      for (auto v = least_set.find_first(); v != Subset::npos; v = least_set.find_next(v)) {
        if (arena_.vertex(static_cast<int>(v)).owner != mover) continue;
        for (int w : arena_.vertex(static_cast<int>(v)).successors)
          if (alive.test(static_cast<std::size_t>(w))) {
            strat[v] = w;
            break;
          }
      }
      return mover == Player::One ? alive : empty;
    }

    const Subset trap = attract(alive, opponent(mover), tail_for_opponent);
    const Subset rest_w1 = solve(alive - trap);
    return mover == Player::One ? rest_w1 : rest_w1 | trap;
  }

  const Arena& arena_;
  int n_;
  std::vector<std::vector<int>> reverse_;
  std::vector<int> strat1_, strat2_;
};

// Successor in the one-player graph where `player` follows sigma and the
// other player keeps all edges.
std::vector<std::vector<int>> restricted_graph(const Arena& arena, Player player,
                                               const PositionalStrategy& sigma) {
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(arena.size()));
  for (int v = 0; v < arena.size(); ++v) {
    const auto& vx = arena.vertex(v);
    if (vx.owner == player)
      succ[static_cast<std::size_t>(v)] = {sigma.choice[static_cast<std::size_t>(v)]};
    else
      succ[static_cast<std::size_t>(v)] = vx.successors;
  }
  return succ;
}

Subset reachable_from(const std::vector<std::vector<int>>& succ, int start) {
  Subset seen(succ.size());
  std::deque<int> queue{start};
  seen.set(static_cast<std::size_t>(start));
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : succ[static_cast<std::size_t>(v)])
      if (!seen.test(static_cast<std::size_t>(w))) {
        seen.set(static_cast<std::size_t>(w));
        queue.push_back(w);
      }
  }
  return seen;
}

// True iff v lies on a cycle inside `allowed`.
bool on_cycle_within(const std::vector<std::vector<int>>& succ, const Subset& allowed,
                     int v) {
  std::deque<int> queue;
  Subset seen(succ.size());
  for (int w : succ[static_cast<std::size_t>(v)])
    if (allowed.test(static_cast<std::size_t>(w)) && !seen.test(static_cast<std::size_t>(w))) {
      seen.set(static_cast<std::size_t>(w));
      queue.push_back(w);
    }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == v) return true;
    for (int w : succ[static_cast<std::size_t>(u)])
      if (allowed.test(static_cast<std::size_t>(w)) && !seen.test(static_cast<std::size_t>(w))) {
        seen.set(static_cast<std::size_t>(w));
        queue.push_back(w);
      }
  }
  return false;
}

std::set<int> cycle_minima(const Arena& arena, const std::vector<std::vector<int>>& succ,
                           int start) {
  const Subset reach = reachable_from(succ, start);
  std::set<int> out;
  for (int p : arena.occurring_priorities()) {
    // A play can settle on minimum p iff some reachable cycle stays within
    // priorities >= p and passes through a priority-p vertex.
    Subset allowed(succ.size());
    for (auto v = reach.find_first(); v != Subset::npos; v = reach.find_next(v))
      if (arena.vertex(static_cast<int>(v)).priority >= p) allowed.set(v);
    for (auto v = allowed.find_first(); v != Subset::npos; v = allowed.find_next(v)) {
      if (arena.vertex(static_cast<int>(v)).priority != p) continue;
      if (on_cycle_within(succ, allowed, static_cast<int>(v))) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

}  // namespace

ParityRegions solve_parity(const ParityInstance& instance) {
  return ZielonkaSolver(instance.arena).run();
}

std::set<int> enforce_priorities(const Arena& arena, Player player,
                                 const PositionalStrategy& sigma, int start) {
  if (!sigma.valid_for(arena, player))
    throw std::invalid_argument("strategy is not valid for that player");
  if (start < 0 || start >= arena.size())
    throw std::out_of_range("start vertex out of range");
  return cycle_minima(arena, restricted_graph(arena, player, sigma), start);
}

std::set<int> enforce_priorities(const Arena& arena, Player player,
                                 const PositionalStrategy& sigma) {
  return enforce_priorities(arena, player, sigma, arena.initial());
}

std::set<int> best_deviation(const Arena& arena, const PositionalStrategy& opponent_sigma,
                             Player deviator) {
  return enforce_priorities(arena, opponent(deviator), opponent_sigma);
}

int realized_priority(const Arena& arena, const PositionalStrategy& s1,
                      const PositionalStrategy& s2) {
  if (!s1.valid_for(arena, Player::One) || !s2.valid_for(arena, Player::Two))
    throw std::invalid_argument("strategies are not valid for their players");
  std::vector<int> seen_at(static_cast<std::size_t>(arena.size()), -1);
  std::vector<int> path;
  int v = arena.initial();
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<int>(path.size());
    path.push_back(v);
    const auto& sigma = arena.vertex(v).owner == Player::One ? s1 : s2;
    v = sigma.choice[static_cast<std::size_t>(v)];
  }
  int least = arena.vertex(v).priority;
  for (std::size_t i = static_cast<std::size_t>(seen_at[static_cast<std::size_t>(v)]);
       i < path.size(); ++i)
    least = std::min(least, arena.vertex(path[i]).priority);
  return least;
}

PriorityOracle::PriorityOracle(Arena arena) : arena_(std::move(arena)) {}

std::set<int> PriorityOracle::winning_priorities(const WinLoseLabeling& wl) const {
  if (wl.player1_wins.size() != static_cast<std::size_t>(num_outcomes()))
    throw std::invalid_argument("labeling size does not match the priority count");
  std::set<int> wins;
  for (auto i = wl.player1_wins.find_first(); i != Subset::npos;
       i = wl.player1_wins.find_next(i))
    wins.insert(outcome_priorities()[i]);
  return wins;
}

ParityRegions PriorityOracle::solve_labeling(const WinLoseLabeling& wl) const {
  return solve_parity(reparity_encode(arena_, winning_priorities(wl)));
}

Player PriorityOracle::decide(const WinLoseLabeling& wl) {
  ++decisions_;
  const auto regions = solve_labeling(wl);
  return regions.player1_region.test(static_cast<std::size_t>(arena_.initial()))
             ? Player::One
             : Player::Two;
}

PositionalStrategy PriorityOracle::extract(const WinLoseLabeling& wl, Player who) {
  ++extractions_;
  auto regions = solve_labeling(wl);
  const bool p1_wins =
      regions.player1_region.test(static_cast<std::size_t>(arena_.initial()));
  if ((who == Player::One) != p1_wins)
    throw OracleUnsoundError("winning strategy requested for the losing player");
  PositionalStrategy sigma =
      who == Player::One ? std::move(regions.strategy1) : std::move(regions.strategy2);
  // Total-ize: owned vertices outside the winning region never occur in plays
  // that start inside it, so any successor will do.
  for (int v = 0; v < arena_.size(); ++v)
    if (arena_.vertex(v).owner == who && sigma.choice[static_cast<std::size_t>(v)] < 0)
      sigma.choice[static_cast<std::size_t>(v)] = arena_.vertex(v).successors.front();
  return sigma;
}

PositionalStrategy PriorityOracle::player1_strategy(const WinLoseLabeling& wl) {
  return extract(wl, Player::One);
}

PositionalStrategy PriorityOracle::player2_strategy(const WinLoseLabeling& wl) {
  return extract(wl, Player::Two);
}

int PriorityOracle::outcome(const PositionalStrategy& s1,
                            const PositionalStrategy& s2) const {
  const int priority = realized_priority(arena_, s1, s2);
  const auto& occurring = outcome_priorities();
  const auto it = std::lower_bound(occurring.begin(), occurring.end(), priority);
  return static_cast<int>(it - occurring.begin());
}

TransferResult<PositionalStrategy, PositionalStrategy> secure_equilibrium_priority(
    const PriorityGame& game, TransferMode mode) {
  PriorityOracle oracle(game.arena());
  return secure_equilibrium(payoff_table(game), oracle, mode);
}

bool verify_priority_secure(const PriorityGame& game, const PositionalStrategy& s1,
                            const PositionalStrategy& s2) {
  const Arena& arena = game.arena();
  const auto& occurring = arena.occurring_priorities();
  const auto index_of = [&](int priority) {
    return static_cast<int>(
        std::lower_bound(occurring.begin(), occurring.end(), priority) -
        occurring.begin());
  };
  const int realized = index_of(realized_priority(arena, s1, s2));
  const auto [pref1, pref2] = malevolent_prefs(payoff_table(game));
  for (int p : best_deviation(arena, s2, Player::One))
    if (pref1.less(realized, index_of(p))) return false;
  for (int p : best_deviation(arena, s1, Player::Two))
    if (pref2.less(realized, index_of(p))) return false;
  return true;
}

}  // namespace equitrans
