#include <doctest.h>

#include <algorithm>
#include <set>

#include "cmono/clusters.hpp"
#include "cmono/errors.hpp"
#include "test_util.hpp"

using namespace cmono;
using testutil::L;

namespace {

// Node id of the cluster with exactly these members, or -1.
int find_cluster(const ClusterTree& tree, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  for (int id = 0; id < static_cast<int>(tree.nodes().size()); ++id)
    if (tree.node(id).members == members) return id;
  return -1;
}

// Exhaustive search: can `s` be written as a disjoint union of >= 2
// even-cardinality clusters of the tree?
bool brute_force_even_partition(const ClusterTree& tree, int s) {
  std::vector<int> even_clusters;
  for (int id = 0; id < static_cast<int>(tree.nodes().size()); ++id)
    if (id != s && tree.node(id).is_even() && tree.contains(s, id)) even_clusters.push_back(id);
  const std::vector<int>& target = tree.node(s).members;
  // Depth-first cover of the sorted member list.
  std::vector<int> chosen;
  auto cover = [&](auto&& self, std::set<int> remaining, std::size_t parts) -> bool {
    if (remaining.empty()) return parts >= 2;
    const int first = *remaining.begin();
    for (int id : even_clusters) {
      const auto& mem = tree.node(id).members;
      if (std::find(mem.begin(), mem.end(), first) == mem.end()) continue;
      bool inside = true;
      for (int x : mem)
        if (!remaining.count(x)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::set<int> next = remaining;
      for (int x : mem) next.erase(x);
      if (self(self, std::move(next), parts + 1)) return true;
    }
    return false;
  };
  return cover(cover, std::set<int>(target.begin(), target.end()), 0);
}

}  // namespace

TEST_CASE("worked example A cluster tree") {
  Analysis a(testutil::example_a());
  const ClusterTree& tree = a.tree();
  // Points: 0 -> 1, 1 -> 0, 2 -> t^3, 3 -> t, 4 -> t+t^2.
  const int s1 = find_cluster(tree, {1, 2});
  const int s2 = find_cluster(tree, {3, 4});
  const int quad = find_cluster(tree, {1, 2, 3, 4});
  const int root = find_cluster(tree, {0, 1, 2, 3, 4});
  REQUIRE(s1 != -1);
  REQUIRE(s2 != -1);
  REQUIRE(quad != -1);
  REQUIRE(root != -1);
  CHECK(tree.node(s1).depth == ExtendedValue(3));
  CHECK(tree.node(s2).depth == ExtendedValue(2));
  CHECK(tree.node(quad).depth == ExtendedValue(1));
  CHECK(tree.node(root).depth == ExtendedValue(0));
  CHECK(tree.root() == root);
  CHECK(tree.node(s1).parent == quad);
  CHECK(tree.node(quad).parent == root);
  CHECK(tree.non_singletons().size() == 4);
}

TEST_CASE("two point tree") {
  ValMatrix m = build_val_matrix({L("0"), L("t")});
  m.infinity_marked = true;
  ClusterTree tree = ClusterTree::build(m);
  CHECK(tree.non_singletons().size() == 1);
  CHECK(tree.node(tree.root()).depth == ExtendedValue(1));
}

TEST_CASE("worked example B cluster tree") {
  Analysis a(testutil::example_b());
  const ClusterTree& tree = a.tree();
  // Points: 0 -> 1, 1 -> 0, 2 -> t^3, 3 -> -t, 4 -> t.
  CHECK(find_cluster(tree, {1, 2}) != -1);
  CHECK(find_cluster(tree, {3, 4}) == -1);  // {-t, t} is not a cluster
  const int quad = find_cluster(tree, {1, 2, 3, 4});
  REQUIRE(quad != -1);
  CHECK(tree.node(quad).depth == ExtendedValue(1));
  CHECK(tree.non_singletons().size() == 3);
}

TEST_CASE("cluster metrics") {
  Analysis a(testutil::example_a());
  const ClusterTree& tree = a.tree();
  const int s1 = find_cluster(tree, {1, 2});
  const int s2 = find_cluster(tree, {3, 4});
  const int quad = find_cluster(tree, {1, 2, 3, 4});
  CHECK(tree.join(s1, s2) == quad);
  CHECK(tree.triple_term(s1, s2) == Rational(3));  // 3 + 2 - 2*1
  CHECK(tree.triple_term(s1, s1) == Rational(0));
  CHECK(tree.relative_depth(s1) == Rational(2));
  CHECK_THROWS_AS(tree.relative_depth(tree.root()), AnalysisError);
}

TEST_CASE("even partitionability") {
  Analysis a(testutil::example_a());
  const ClusterTree& tree = a.tree();
  const int s1 = find_cluster(tree, {1, 2});
  const int quad = find_cluster(tree, {1, 2, 3, 4});
  CHECK(is_even_partitionable(tree, quad));
  CHECK(!is_even_partitionable(tree, s1));       // a pair cannot split
  CHECK(!is_even_partitionable(tree, tree.root()));  // odd cardinality

  Analysis b(testutil::example_b());
  const int quad_b = find_cluster(b.tree(), {1, 2, 3, 4});
  CHECK(!is_even_partitionable(b.tree(), quad_b));  // children {0,t^3}, {-t}, {t}
}

TEST_CASE("even partitionability agrees with brute force") {
  std::vector<InputDocument> docs = {
      testutil::example_a(), testutil::example_b(), testutil::example_p3(),
      testutil::laurent_doc(2, {"1", "0", "t", "5", "5 + t", "9", "9 + t^2", "9 + t^4",
                                "9 + t^4 + t^6"})};
  for (auto& doc : docs) {
    Analysis a(std::move(doc));
    for (int id : a.tree().non_singletons())
      CHECK(is_even_partitionable(a.tree(), id) == brute_force_even_partition(a.tree(), id));
  }
}

TEST_CASE("ubereven classification") {
  Analysis a(testutil::example_a());
  const ClusterTree& tree = a.tree();
  const int s1 = find_cluster(tree, {1, 2});
  const int quad = find_cluster(tree, {1, 2, 3, 4});
  CHECK(is_ubereven(tree, quad, Rational(0)));
  CHECK(!is_ubereven(tree, s1, Rational(0)));
  // With p=2 and vp=1 the bound p*vp/(p-1) = 2 kills the triple term 1.
  CHECK(!is_ubereven(tree, quad, Rational(2)));
  // At vp = 0, ubereven and even-partitionable coincide.
  for (int id : tree.non_singletons())
    CHECK(is_ubereven(tree, id, Rational(0)) == is_even_partitionable(tree, id));
}

TEST_CASE("frak sets") {
  Analysis a(testutil::example_a());
  const int s1 = find_cluster(a.tree(), {1, 2});
  const int s2 = find_cluster(a.tree(), {3, 4});
  const int quad = find_cluster(a.tree(), {1, 2, 3, 4});
  std::vector<int> expected = {s1, s2, quad};
  std::sort(expected.begin(), expected.end());
  std::vector<int> got = a.frak().frak_C0;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);

  Analysis b(testutil::example_b());
  const int s1b = find_cluster(b.tree(), {1, 2});
  const int quadb = find_cluster(b.tree(), {1, 2, 3, 4});
  std::vector<int> expected_b = {s1b, quadb};
  std::sort(expected_b.begin(), expected_b.end());
  std::vector<int> got_b = b.frak().frak_C0;
  std::sort(got_b.begin(), got_b.end());
  CHECK(got_b == expected_b);

  // h = 1: the only even cluster.
  Analysis c(testutil::laurent_doc(2, {"1", "0", "t^4"}));
  CHECK(c.frak().frak_C0.size() == 1);
}

TEST_CASE("pair clusters") {
  Analysis a(testutil::example_a());
  CHECK(a.frak().pair_cluster[1] == find_cluster(a.tree(), {1, 2}));
  CHECK(a.frak().pair_cluster[2] == find_cluster(a.tree(), {3, 4}));
  CHECK_THROWS_AS(pair_cluster(a.tree(), 0, a.config()), AnalysisError);

  Analysis b(testutil::example_b());
  // alpha_2 = -t, beta_2 = t: the two-point set is not a cluster, so s_2 is
  // the four-point cluster.
  CHECK(b.frak().pair_cluster[2] == find_cluster(b.tree(), {1, 2, 3, 4}));
}

TEST_CASE("laminarity and structure on random-ish instances") {
  std::vector<InputDocument> docs = {testutil::example_a(), testutil::example_b(),
                                     testutil::laurent_doc(
                                         3, {"1", "0", "t^2", "5", "5 + t^3", "7", "7 + t^5"})};
  for (auto& doc : docs) {
    Analysis a(std::move(doc));
    const ClusterTree& tree = a.tree();
    for (int x : tree.non_singletons())
      for (int y : tree.non_singletons()) {
        const bool nested = tree.contains(x, y) || tree.contains(y, x);
        std::vector<int> inter;
        std::set_intersection(tree.node(x).members.begin(), tree.node(x).members.end(),
                              tree.node(y).members.begin(), tree.node(y).members.end(),
                              std::back_inserter(inter));
        if (!nested) CHECK(inter.empty());
      }
    for (int x = 0; x < static_cast<int>(tree.nodes().size()); ++x) {
      const ClusterNode& node = tree.node(x);
      if (node.parent != -1) CHECK(node.depth > tree.node(node.parent).depth);
      if (!node.is_singleton()) {
        CHECK(node.children.size() >= 2);
        std::size_t total = 0;
        for (int kid : node.children) total += tree.node(kid).members.size();
        CHECK(total == node.members.size());
      }
    }
  }
}
