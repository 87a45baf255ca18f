#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "equitrans/poset.hpp"

#include "fixtures.hpp"
#include "testutil.hpp"

using namespace equitrans;
using testutil::Rng;

namespace {

Poset empty_order(int n) { return Poset::validate(BinaryRelation(n)); }

bool relations_equal(const BinaryRelation& a, const BinaryRelation& b) { return a == b; }

}  // namespace

TEST_CASE("validate accepts the empty relation") {
  const Poset p = empty_order(3);
  CHECK(p.size() == 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK_FALSE(p.less(x, y));
}

TEST_CASE("validate accepts a chain") {
  const Poset p = fixtures::chain5();
  CHECK(p.less(0, 4));
  CHECK_FALSE(p.less(4, 0));
}

TEST_CASE("validate rejects reflexive and intransitive relations") {
  BinaryRelation refl(2);
  refl.add(1, 1);
  CHECK_THROWS_AS(Poset::validate(refl), NotIrreflexiveError);

  BinaryRelation two_cycle(2);
  two_cycle.add(0, 1);
  two_cycle.add(1, 0);
  try {
    Poset::validate(two_cycle);
    FAIL("expected NotTransitiveError");
  } catch (const NotTransitiveError& e) {
    CHECK(e.x() == 0);
    CHECK(e.y() == 1);
    CHECK(e.z() == 0);
  }
}

TEST_CASE("acyclicity") {
  BinaryRelation empty(3);
  CHECK(is_acyclic(empty));

  BinaryRelation chain(3);
  chain.add(0, 1);
  chain.add(1, 2);
  CHECK(is_acyclic(chain));

  BinaryRelation two_cycle(2);
  two_cycle.add(0, 1);
  two_cycle.add(1, 0);
  CHECK_FALSE(is_acyclic(two_cycle));
}

TEST_CASE("transitive closure of a chain adds the skip pair") {
  BinaryRelation chain(3);
  chain.add(0, 1);
  chain.add(1, 2);
  const Poset closed = transitive_closure(chain);
  BinaryRelation expected(3);
  expected.add(0, 1);
  expected.add(1, 2);
  expected.add(0, 2);
  CHECK(relations_equal(closed.relation(), expected));
}

TEST_CASE("transitive closure rejects cycles with a witness") {
  BinaryRelation two_cycle(2);
  two_cycle.add(0, 1);
  two_cycle.add(1, 0);
  try {
    transitive_closure(two_cycle);
    FAIL("expected CyclicRelationError");
  } catch (const CyclicRelationError& e) {
    CHECK(e.cycle().size() == 2);
  }
}

TEST_CASE("transitive closure matches the composition fixpoint oracle") {
  Rng rng(417);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + rng.below(6);
    const BinaryRelation rel = testutil::random_acyclic_relation(rng, n);
    const Poset closed = transitive_closure(rel);
    CHECK(relations_equal(closed.relation(), testutil::closure_by_composition(rel)));
  }
}

TEST_CASE("upper sets on the chain") {
  const Poset p = fixtures::chain5();
  CHECK(p.upper_set(3) == make_subset(5, {4}));  // above "4" only "5"
  CHECK(p.upper_set(4).none());                  // the maximum
  CHECK(empty_order(4).upper_set(2).none());

  CHECK(p.upper_set_of(make_subset(5, {2, 3})) == make_subset(5, {3, 4}));
  CHECK(p.upper_set_of(Subset(5)).none());
}

TEST_CASE("upper set of a set is the union of element upper sets") {
  Rng rng(98);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + rng.below(7);
    const Poset p = testutil::random_poset(rng, n);
    const Subset ys = testutil::random_subset(rng, n);
    Subset expected(static_cast<std::size_t>(n));
    for (int y : subset_members(ys)) expected |= p.upper_set(y);
    CHECK(p.upper_set_of(ys) == expected);
  }
}

TEST_CASE("lift witness procedure on the spec'd sets") {
  const Poset p = fixtures::chain5();
  const Subset full = make_subset(5, {0, 1, 2, 3, 4});
  CHECK_FALSE(lift_less_witness(p, full, full));
  CHECK(lift_less_witness(p, full, make_subset(5, {0})));           // {1..5} < {1}
  CHECK_FALSE(lift_less_witness(p, make_subset(5, {2}), make_subset(5, {1})));  // {3} vs {2}
}

TEST_CASE("lift via minima of the symmetric difference") {
  const Poset p = fixtures::chain5();
  CHECK(lift_less(p, make_subset(5, {1}), make_subset(5, {2, 4})));  // {2} < {3,5}
  CHECK(lift_less(p, make_subset(5, {3}), Subset(5)));               // {4} < {}
  const Subset a = make_subset(5, {0, 2});
  CHECK_FALSE(lift_less(p, a, a));
}

TEST_CASE("polynomial lift characterization") {
  const Poset p = fixtures::chain5();
  CHECK(lift_less_poly(p, make_subset(5, {1, 2}), make_subset(5, {1, 3, 4})));  // {2,3} < {2,4,5}
  CHECK_FALSE(lift_less_poly(p, Subset(5), Subset(5)));
}

TEST_CASE("the three lift procedures agree exhaustively") {
  Rng rng(2024);
  for (int round = 0; round < 40; ++round) {
    const int n = 1 + rng.below(5);
    const Poset p = testutil::random_poset(rng, n);
    for (std::uint64_t am = 0; am < (1ull << n); ++am)
      for (std::uint64_t bm = 0; bm < (1ull << n); ++bm) {
        const Subset a = subset_from_mask(static_cast<std::size_t>(n), am);
        const Subset b = subset_from_mask(static_cast<std::size_t>(n), bm);
        const bool expected = lift_less_witness(p, a, b);
        CHECK(lift_less(p, a, b) == expected);
        CHECK(lift_less_poly(p, a, b) == expected);
      }
  }
}

TEST_CASE("the lift is a strict partial order") {
  Rng rng(5150);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + rng.below(8);
    const Poset p = testutil::random_poset(rng, n);
    const Subset a = testutil::random_subset(rng, n);
    const Subset b = testutil::random_subset(rng, n);
    const Subset c = testutil::random_subset(rng, n);
    CHECK_FALSE(lift_less(p, a, a));
    if (lift_less(p, a, b) && lift_less(p, b, c)) CHECK(lift_less(p, a, c));
  }
}

TEST_CASE("lift coincides with the order on singletons") {
  Rng rng(33);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 + rng.below(6);
    const Poset p = testutil::random_poset(rng, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        CHECK(lift_less(p, make_subset(static_cast<std::size_t>(n), {x}),
                        make_subset(static_cast<std::size_t>(n), {y})) == p.less(x, y));
  }
}

TEST_CASE("empty set is the top, full carrier the bottom of the lift") {
  Rng rng(71);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + rng.below(6);
    const Poset p = testutil::random_poset(rng, n);
    const Subset empty(static_cast<std::size_t>(n));
    Subset full(static_cast<std::size_t>(n));
    full.set();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const Subset a = subset_from_mask(static_cast<std::size_t>(n), mask);
      CHECK_FALSE(lift_less(p, empty, a));
      CHECK_FALSE(lift_less(p, a, full));
      if (a.any()) CHECK(lift_less(p, a, empty));
      if (a != full) CHECK(lift_less(p, full, a));
    }
  }
}

TEST_CASE("strict subsets sit above their supersets in the lift") {
  Rng rng(140);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + rng.below(7);
    const Poset p = testutil::random_poset(rng, n);
    const Subset a = testutil::random_subset(rng, n);
    Subset b = testutil::random_subset(rng, n);
    b &= a;
    if (b == a) continue;
    CHECK(lift_less(p, a, b));
  }
}

TEST_CASE("lift only depends on the order inside the symmetric difference") {
  Rng rng(909);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + rng.below(6);
    const Poset p = testutil::random_poset(rng, n);
    const Subset a = testutil::random_subset(rng, n);
    const Subset b = testutil::random_subset(rng, n);
    const Subset delta = a ^ b;
    // Erase every pair that leaves the difference; restriction of an order is
    // still an order.
    BinaryRelation restricted(n);
    for (int x : subset_members(delta))
      for (int y : subset_members(delta))
        if (p.less(x, y)) restricted.add(x, y);
    const Poset q = Poset::validate(std::move(restricted));
    CHECK(lift_less(p, a, b) == lift_less(q, a, b));
    CHECK(lift_less(p, b, a) == lift_less(q, b, a));
  }
}

TEST_CASE("maximal elements") {
  const Poset p = fixtures::chain5();
  CHECK(p.maximal_elements(make_subset(5, {1, 2, 4})) == make_subset(5, {4}));
  const Poset antichain = empty_order(3);
  CHECK(antichain.maximal_elements(make_subset(3, {0, 1})) == make_subset(3, {0, 1}));
  CHECK_THROWS_AS(p.maximal_elements(Subset(5)), EmptyInputError);

  Rng rng(61);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + rng.below(7);
    const Poset q = testutil::random_poset(rng, n);
    Subset s = testutil::random_subset(rng, n);
    if (s.none()) s.set(static_cast<std::size_t>(rng.below(n)));
    const Subset maxima = q.maximal_elements(s);
    CHECK(maxima.any());
    CHECK(maxima.is_subset_of(s));
    for (int x : subset_members(maxima)) CHECK((q.upper_set(x) & s).none());
  }
}

TEST_CASE("linear extension is deterministic and respects the order") {
  CHECK(fixtures::chain5().linear_extension() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(empty_order(3).linear_extension() == std::vector<int>{0, 1, 2});

  Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + rng.below(8);
    const Poset p = testutil::random_poset(rng, n);
    const auto ext = p.linear_extension();
    REQUIRE(ext.size() == static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(ext[static_cast<std::size_t>(i)])] = i;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p.less(x, y))
          CHECK(position[static_cast<std::size_t>(x)] < position[static_cast<std::size_t>(y)]);
  }
}

TEST_CASE("replace with preferred") {
  const Poset p = fixtures::chain5();
  CHECK(p.replace_with_preferred(1, make_subset(5, {0, 1})) ==
        make_subset(5, {0, 2, 3, 4}));  // {1,2} with 2 swapped for {3,4,5}
  CHECK(p.replace_with_preferred(4, make_subset(5, {4})).none());
  CHECK_THROWS_AS(p.replace_with_preferred(2, make_subset(5, {0})), ElementNotInSetError);

  // The construction always witnesses a strictly lift-greater set.
  Rng rng(1234);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + rng.below(7);
    const Poset q = testutil::random_poset(rng, n);
    Subset a = testutil::random_subset(rng, n);
    if (a.none()) a.set(static_cast<std::size_t>(rng.below(n)));
    const auto members = subset_members(a);
    const int m = members[static_cast<std::size_t>(rng.below(static_cast<int>(members.size())))];
    CHECK(lift_less(q, a, q.replace_with_preferred(m, a)));
  }
}

TEST_CASE("multiset lift") {
  const Poset p = fixtures::chain5();
  Multiset f(5), g(5);
  CHECK_FALSE(multiset_lift_less(p, f, g));  // both empty
  f.counts[0] = 2;
  g.counts[0] = 1;
  CHECK(multiset_lift_less(p, f, g));

  Rng rng(777);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + rng.below(6);
    const Poset q = testutil::random_poset(rng, n);

    // Indicator multisets embed the subset lift.
    const Subset a = testutil::random_subset(rng, n);
    const Subset b = testutil::random_subset(rng, n);
    Multiset fa(static_cast<std::size_t>(n)), fb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      fa.counts[static_cast<std::size_t>(i)] = a.test(static_cast<std::size_t>(i)) ? 1 : 0;
      fb.counts[static_cast<std::size_t>(i)] = b.test(static_cast<std::size_t>(i)) ? 1 : 0;
    }
    CHECK(multiset_lift_less(q, fa, fb) == lift_less(q, a, b));

    // Strict partial order laws on random multisets.
    const Multiset x = testutil::random_multiset(rng, n);
    const Multiset y = testutil::random_multiset(rng, n);
    const Multiset z = testutil::random_multiset(rng, n);
    CHECK_FALSE(multiset_lift_less(q, x, x));
    if (multiset_lift_less(q, x, y) && multiset_lift_less(q, y, z))
      CHECK(multiset_lift_less(q, x, z));
  }
}

TEST_CASE("closure outputs always validate as orders") {
  Rng rng(4242);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + rng.below(8);
    const BinaryRelation rel = testutil::random_acyclic_relation(rng, n);
    CHECK_NOTHROW(Poset::validate(transitive_closure(rel).relation()));
  }
}
