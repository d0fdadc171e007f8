#include <doctest.h>

#include <algorithm>

#include "cmono/sheeted.hpp"
#include "test_util.hpp"

using namespace cmono;

namespace {

std::vector<SheetedForest::Edge> reversed(const std::vector<SheetedForest::Edge>& path) {
  std::vector<SheetedForest::Edge> out(path.rbegin(), path.rend());
  for (auto& e : out) e.up = !e.up;
  return out;
}

}  // namespace

TEST_CASE("sheeted forest structure: example A") {
  Analysis a(testutil::example_a());
  SheetedForest forest(a.skeleton());
  // Both bridges attach to the root point under axis 0: one class.
  CHECK(forest.class_count() == 1);
  CHECK(forest.class_of(1) == forest.class_of(2));

  // Fundamental path lengths: 2 * bridge length.
  CHECK(forest.path_length(forest.fundamental_path(1, 1)) == Rational(6));
  CHECK(forest.path_length(forest.fundamental_path(2, 1)) == Rational(4));
}

TEST_CASE("sheeted forest structure: example B") {
  Analysis b(testutil::example_b());
  SheetedForest forest(b.skeleton());
  CHECK(forest.class_count() == 2);
  CHECK(forest.class_of(1) != forest.class_of(2));
  // Disjoint forests pair to zero.
  CHECK(forest.gram_entry(1, 1, 2, 1) == Rational(0));
}

TEST_CASE("signed intersections") {
  Analysis a(testutil::example_a());
  SheetedForest forest(a.skeleton());
  auto p11 = forest.fundamental_path(1, 1);
  auto p21 = forest.fundamental_path(2, 1);

  // Full positive self-overlap.
  CHECK(forest.signed_intersection(p11, p11) == forest.path_length(p11));
  // Shared segment of length 1 in both sheets, same directions.
  CHECK(forest.signed_intersection(p11, p21) == Rational(2));
  // Antisymmetry under orientation reversal.
  CHECK(forest.signed_intersection(p11, reversed(p21)) == Rational(-2));
  CHECK(forest.signed_intersection(reversed(p11), p21) == Rational(-2));
  // Symmetry of the intersection number.
  CHECK(forest.signed_intersection(p21, p11) == forest.signed_intersection(p11, p21));
}

TEST_CASE("p = 2 opposite-shift entries") {
  Analysis a(testutil::example_a());
  SheetedForest forest(a.skeleton());
  // (i,1) vs (i,2): both sheets shared with opposite directions.
  CHECK(forest.gram_entry(1, 1, 1, 2) == Rational(-6));
  CHECK(forest.gram_entry(2, 1, 2, 2) == Rational(-4));
}

TEST_CASE("p = 3 single-sheet sign behavior") {
  Analysis c(testutil::example_p3());
  SheetedForest forest(c.skeleton());
  CHECK(forest.path_length(forest.fundamental_path(1, 1)) == Rational(4));
  CHECK(forest.gram_entry(1, 1, 1, 2) == Rational(-2));
  CHECK(forest.gram_entry(1, 1, 1, 1) == Rational(4));
  // The path visits the gate exactly once: two monotone halves.
  auto path = forest.fundamental_path(1, 2);
  CHECK(path.size() == 2);
  CHECK(path[0].up);
  CHECK(!path[1].up);
}

TEST_CASE("oracle gram equals the other two routes") {
  for (auto doc : {testutil::example_a(), testutil::example_b(), testutil::example_p3()}) {
    Analysis a(std::move(doc));
    SheetedForest forest(a.skeleton());
    const GammaBasis& basis = a.engine().gamma_basis();
    CHECK(forest.gram_matrix(basis) == a.engine().gram_matrix(GramMode::Formula));
    CHECK(forest.gram_matrix(basis) == a.engine().gram_matrix(GramMode::Transvections));
  }
}

TEST_CASE("oracle on a singleton class star") {
  Analysis c(testutil::laurent_doc(3, {"1", "0", "t^2"}));
  SheetedForest forest(c.skeleton());
  CHECK(forest.class_count() == 1);
  // Base is one segment; three sheets form a star.
  auto p0 = forest.fundamental_path(1, 0);
  auto p1 = forest.fundamental_path(1, 1);
  auto p2 = forest.fundamental_path(1, 2);
  CHECK(forest.signed_intersection(p0, p1) == Rational(-2));
  CHECK(forest.signed_intersection(p0, p2) == Rational(-2));  // n=0 vs n-1=2 wrap
  CHECK(forest.signed_intersection(p1, p2) == Rational(-2));
}
