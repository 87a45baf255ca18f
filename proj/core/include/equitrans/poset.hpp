// Finite strict partial orders, their lift to subsets and multisets, and the
// transitive-closure bridge from acyclic relations to orders.

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace equitrans {

/// A subset of a carrier {0, ..., n-1}, one bit per element.
using Subset = boost::dynamic_bitset<>;

Subset make_subset(std::size_t carrier_size, std::initializer_list<int> members);

/// Interprets bit i of `mask` as membership of element i (carrier size <= 64).
Subset subset_from_mask(std::size_t carrier_size, std::uint64_t mask);

std::vector<int> subset_members(const Subset& s);

/// A finite multiset over a carrier {0, ..., n-1}.
struct Multiset {
  std::vector<std::uint64_t> counts;

  explicit Multiset(std::size_t carrier_size) : counts(carrier_size, 0) {}
  std::size_t carrier_size() const { return counts.size(); }
};

class NotIrreflexiveError : public std::runtime_error {
 public:
  explicit NotIrreflexiveError(int element);
  int element() const { return element_; }

 private:
  int element_;
};

class NotTransitiveError : public std::runtime_error {
 public:
  NotTransitiveError(int x, int y, int z);
  int x() const { return x_; }
  int y() const { return y_; }
  int z() const { return z_; }

 private:
  int x_, y_, z_;
};

class CyclicRelationError : public std::runtime_error {
 public:
  explicit CyclicRelationError(std::vector<int> cycle);
  /// A witness cycle v0 -> v1 -> ... -> v0 (first vertex not repeated).
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

class EmptyInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ElementNotInSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An arbitrary binary relation on {0, ..., n-1}; no laws imposed. This is the
/// pre-validation input type for orders and the input of the closure operator.
class BinaryRelation {
 public:
  explicit BinaryRelation(int size);

  int size() const { return static_cast<int>(rows_.size()); }
  bool contains(int x, int y) const;
  void add(int x, int y);
  void remove(int x, int y);

  /// Successors of x as a subset: {y | (x, y) in the relation}.
  const Subset& row(int x) const;

  bool operator==(const BinaryRelation& other) const = default;

 private:
  void check_index(int x) const;
  std::vector<Subset> rows_;
};

/// A validated strict partial order (irreflexive and transitive) over a finite
/// carrier, with one display label per element. `less(x, y)` reads "y is
/// strictly preferred to x".
class Poset {
 public:
  /// Wraps `rel` iff it is irreflexive and transitive; otherwise throws
  /// NotIrreflexiveError or NotTransitiveError naming the first violation.
  static Poset validate(BinaryRelation rel);
  static Poset validate(BinaryRelation rel, std::vector<std::string> labels);

  int size() const { return rel_.size(); }
  bool less(int x, int y) const { return rel_.contains(x, y); }
  const BinaryRelation& relation() const { return rel_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Strict upper set u(x) = {z | x < z}.
  Subset upper_set(int x) const;

  /// u(Y), the union of the upper sets of Y's members; u({}) = {}.
  Subset upper_set_of(const Subset& ys) const;

  /// Elements of a nonempty S with no strictly greater element in S.
  /// Throws EmptyInputError when S is empty.
  Subset maximal_elements(const Subset& s) const;

  /// A total order of the carrier respecting `less`, deterministic: at each
  /// step the smallest-index available element is emitted.
  std::vector<int> linear_extension() const;

  /// (A \ {m}) | u(m), with u(m) taken over the whole carrier.
  /// Throws ElementNotInSetError when m is not in A.
  Subset replace_with_preferred(int m, const Subset& a) const;

 private:
  Poset(BinaryRelation rel, std::vector<std::string> labels);

  BinaryRelation rel_;
  std::vector<Subset> preds_;  // preds_[x] = {y | y < x}
  std::vector<std::string> labels_;
};

/// True iff the relation has no directed cycle.
bool is_acyclic(const BinaryRelation& r);

/// The order whose relation is the transitive closure of an acyclic `r`.
/// Throws CyclicRelationError with a witness cycle otherwise.
Poset transitive_closure(const BinaryRelation& r);
Poset transitive_closure(const BinaryRelation& r, std::vector<std::string> labels);

// The lift of an order to subsets: A is lift-below B when B keeps everything
// of A except some nonempty removed part A' <= A \ B whose removal is
// compensated only by elements above A'. Three equivalent procedures are
// provided; `lift_less` is the production one, `lift_less_witness` the
// definitional oracle (exponential in |A \ B|), and `lift_less_poly` the
// polynomial characterization.
bool lift_less_witness(const Poset& p, const Subset& a, const Subset& b);
bool lift_less(const Poset& p, const Subset& a, const Subset& b);
bool lift_less_poly(const Poset& p, const Subset& a, const Subset& b);

/// Lift on finite multisets: compares the two disagreement sets
/// {x | g(x) < f(x)} and {x | f(x) < g(x)} with `lift_less`.
bool multiset_lift_less(const Poset& p, const Multiset& f, const Multiset& g);

}  // namespace equitrans
