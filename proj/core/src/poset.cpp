#include "equitrans/poset.hpp"

#include <algorithm>
#include <optional>

namespace equitrans {

Subset make_subset(std::size_t carrier_size, std::initializer_list<int> members) {
  Subset s(carrier_size);
  for (int m : members) s.set(static_cast<std::size_t>(m));
  return s;
}

Subset subset_from_mask(std::size_t carrier_size, std::uint64_t mask) {
  Subset s(carrier_size);
  for (std::size_t i = 0; i < carrier_size && i < 64; ++i)
    if (mask >> i & 1u) s.set(i);
  return s;
}

std::vector<int> subset_members(const Subset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

NotIrreflexiveError::NotIrreflexiveError(int element)
    : std::runtime_error("relation is not irreflexive: element " +
                         std::to_string(element) + " is related to itself"),
      element_(element) {}

NotTransitiveError::NotTransitiveError(int x, int y, int z)
    : std::runtime_error("relation is not transitive: (" + std::to_string(x) +
                         "," + std::to_string(y) + ") and (" + std::to_string(y) +
                         "," + std::to_string(z) + ") present but (" +
                         std::to_string(x) + "," + std::to_string(z) + ") absent"),
      x_(x),
      y_(y),
      z_(z) {}

namespace {
std::string cycle_message(const std::vector<int>& cycle) {
  std::string msg = "relation has a cycle:";
  for (int v : cycle) msg += " " + std::to_string(v) + " ->";
  msg += cycle.empty() ? " ?" : " " + std::to_string(cycle.front());
  return msg;
}
}  // namespace

CyclicRelationError::CyclicRelationError(std::vector<int> cycle)
    : std::runtime_error(cycle_message(cycle)), cycle_(std::move(cycle)) {}

BinaryRelation::BinaryRelation(int size) {
  if (size < 0) throw std::invalid_argument("relation size must be >= 0");
  rows_.assign(static_cast<std::size_t>(size), Subset(static_cast<std::size_t>(size)));
}

void BinaryRelation::check_index(int x) const {
  if (x < 0 || x >= size())
    throw std::out_of_range("relation index " + std::to_string(x) +
                            " out of range [0," + std::to_string(size()) + ")");
}

bool BinaryRelation::contains(int x, int y) const {
  check_index(x);
  check_index(y);
  return rows_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y));
}

void BinaryRelation::add(int x, int y) {
  check_index(x);
  check_index(y);
  rows_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
}

void BinaryRelation::remove(int x, int y) {
  check_index(x);
  check_index(y);
  rows_[static_cast<std::size_t>(x)].reset(static_cast<std::size_t>(y));
}

const Subset& BinaryRelation::row(int x) const {
  check_index(x);
  return rows_[static_cast<std::size_t>(x)];
}

namespace {
std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}
}  // namespace

Poset::Poset(BinaryRelation rel, std::vector<std::string> labels)
    : rel_(std::move(rel)), labels_(std::move(labels)) {
  const int n = rel_.size();
  preds_.assign(static_cast<std::size_t>(n), Subset(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y : subset_members(rel_.row(x)))
      preds_[static_cast<std::size_t>(y)].set(static_cast<std::size_t>(x));
}

Poset Poset::validate(BinaryRelation rel) {
  const int n = rel.size();
  return validate(std::move(rel), default_labels(n));
}

Poset Poset::validate(BinaryRelation rel, std::vector<std::string> labels) {
  const int n = rel.size();
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match carrier size");
  for (int x = 0; x < n; ++x)
    if (rel.contains(x, x)) throw NotIrreflexiveError(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!rel.contains(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (rel.contains(y, z) && !rel.contains(x, z))
          throw NotTransitiveError(x, y, z);
    }
  return Poset(std::move(rel), std::move(labels));
}

Subset Poset::upper_set(int x) const { return rel_.row(x); }

Subset Poset::upper_set_of(const Subset& ys) const {
  if (ys.size() != static_cast<std::size_t>(size()))
    throw std::invalid_argument("subset size does not match carrier size");
  Subset out(ys.size());
  for (auto y = ys.find_first(); y != Subset::npos; y = ys.find_next(y))
    out |= rel_.row(static_cast<int>(y));
  return out;
}

Subset Poset::maximal_elements(const Subset& s) const {
  if (s.size() != static_cast<std::size_t>(size()))
    throw std::invalid_argument("subset size does not match carrier size");
  if (s.none()) throw EmptyInputError("maximal_elements: input set is empty");
  Subset out(s.size());
  for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x))
    if ((rel_.row(static_cast<int>(x)) & s).none()) out.set(x);
  return out;
}

std::vector<int> Poset::linear_extension() const {
  const int n = size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  Subset emitted(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    for (int x = 0; x < n; ++x) {
      if (emitted.test(static_cast<std::size_t>(x))) continue;
      if ((preds_[static_cast<std::size_t>(x)] - emitted).none()) {
        order.push_back(x);
        emitted.set(static_cast<std::size_t>(x));
        break;
      }
    }
  }
  return order;
}

Subset Poset::replace_with_preferred(int m, const Subset& a) const {
  if (a.size() != static_cast<std::size_t>(size()))
    throw std::invalid_argument("subset size does not match carrier size");
  if (m < 0 || m >= size()) throw std::out_of_range("element out of range");
  if (!a.test(static_cast<std::size_t>(m)))
    throw ElementNotInSetError("replace_with_preferred: element " +
                               std::to_string(m) + " is not in the set");
  Subset out = a;
  out.reset(static_cast<std::size_t>(m));
  out |= rel_.row(m);
  return out;
}

namespace {

// Depth-first search for a directed cycle; returns the cycle's vertices in
// order when one exists.
std::optional<std::vector<int>> find_cycle(const BinaryRelation& r) {
  const int n = r.size();
  enum class Color { White, Gray, Black };
  std::vector<Color> color(static_cast<std::size_t>(n), Color::White);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);

  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != Color::White) continue;
    // Iterative DFS keeping per-vertex successor iterators.
    std::vector<std::pair<int, int>> stack;  // (vertex, next successor index)
    stack.emplace_back(root, 0);
    color[static_cast<std::size_t>(root)] = Color::Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto members = subset_members(r.row(v));
      if (next < static_cast<int>(members.size())) {
        int w = members[static_cast<std::size_t>(next++)];
        if (color[static_cast<std::size_t>(w)] == Color::Gray) {
          // Found a back edge v -> w: reconstruct the cycle from the stack.
          std::vector<int> cycle;
          for (auto it = stack.begin(); it != stack.end(); ++it)
            if (!cycle.empty() || it->first == w) cycle.push_back(it->first);
          return cycle;
        }
        if (color[static_cast<std::size_t>(w)] == Color::White) {
          color[static_cast<std::size_t>(w)] = Color::Gray;
          stack.emplace_back(w, 0);
        }
      } else {
        color[static_cast<std::size_t>(v)] = Color::Black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_acyclic(const BinaryRelation& r) { return !find_cycle(r).has_value(); }

Poset transitive_closure(const BinaryRelation& r) {
  return transitive_closure(r, default_labels(r.size()));
}

Poset transitive_closure(const BinaryRelation& r, std::vector<std::string> labels) {
  if (auto cycle = find_cycle(r)) throw CyclicRelationError(*cycle);
  const int n = r.size();
  BinaryRelation closed = r;
  // Warshall: after step k, closed contains all paths with intermediates <= k.
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (closed.contains(x, k))
        for (int y : subset_members(closed.row(k))) closed.add(x, y);
  return Poset::validate(std::move(closed), std::move(labels));
}

namespace {
void check_pair(const Poset& p, const Subset& a, const Subset& b) {
  if (a.size() != static_cast<std::size_t>(p.size()) || b.size() != a.size())
    throw std::invalid_argument("subset size does not match carrier size");
}
}  // namespace

bool lift_less_witness(const Poset& p, const Subset& a, const Subset& b) {
  check_pair(p, a, b);
  const Subset removable = a - b;
  const auto candidates = subset_members(removable);
  const int k = static_cast<int>(candidates.size());
  if (k == 0) return false;
  if (k > 30)
    throw std::length_error("witness search over 2^" + std::to_string(k) +
                            " subsets refused; use lift_less instead");
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    Subset removed(a.size());
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1u) removed.set(static_cast<std::size_t>(candidates[static_cast<std::size_t>(i)]));
    const Subset shadow = removed | p.upper_set_of(removed);
    if ((a - shadow) == (b - shadow)) return true;
  }
  return false;
}

bool lift_less(const Poset& p, const Subset& a, const Subset& b) {
  check_pair(p, a, b);
  const Subset delta = a ^ b;
  if (delta.none()) return false;
  const Subset gain = b - a;
  // Every minimal disagreement must be on the removed side (a \ b).
  for (auto x = delta.find_first(); x != Subset::npos; x = delta.find_next(x)) {
    bool minimal = true;
    for (auto y = delta.find_first(); y != Subset::npos; y = delta.find_next(y))
      if (p.less(static_cast<int>(y), static_cast<int>(x))) {
        minimal = false;
        break;
      }
    if (minimal && gain.test(x)) return false;
  }
  return true;
}

bool lift_less_poly(const Poset& p, const Subset& a, const Subset& b) {
  check_pair(p, a, b);
  if (a == b) return false;
  const Subset lost = a - b;
  const Subset gained = b - a;
  for (auto y = gained.find_first(); y != Subset::npos; y = gained.find_next(y)) {
    bool dominated = false;
    for (auto x = lost.find_first(); x != Subset::npos; x = lost.find_next(x))
      if (p.less(static_cast<int>(x), static_cast<int>(y))) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

bool multiset_lift_less(const Poset& p, const Multiset& f, const Multiset& g) {
  if (f.carrier_size() != static_cast<std::size_t>(p.size()) ||
      g.carrier_size() != f.carrier_size())
    throw std::invalid_argument("multiset carrier does not match the order");
  Subset more(f.carrier_size());  // {x | g(x) < f(x)}
  Subset less(f.carrier_size());  // {x | f(x) < g(x)}
  for (std::size_t x = 0; x < f.carrier_size(); ++x) {
    if (g.counts[x] < f.counts[x]) more.set(x);
    if (f.counts[x] < g.counts[x]) less.set(x);
  }
  return lift_less(p, more, less);
}

}  // namespace equitrans
