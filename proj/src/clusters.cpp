#include "cmono/clusters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cmono/errors.hpp"

namespace cmono {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ClusterTree ClusterTree::build(const ValMatrix& m) {
  const int n = static_cast<int>(m.size);
  ClusterTree tree;
  tree.leaf_of_point_.resize(n);

  for (int i = 0; i < n; ++i) {
    ClusterNode leaf;
    leaf.members = {i};
    leaf.depth = ExtendedValue::infinity();
    tree.nodes_.push_back(std::move(leaf));
    tree.leaf_of_point_[i] = i;
  }
  if (n == 1) {
    tree.root_ = 0;
    return tree;
  }

  // Distinct finite valuations, descending: merging down the thresholds
  // produces exactly the clusters A cap D of the ultrametric.
  std::set<Rational, std::greater<Rational>> thresholds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) thresholds.insert(m.at(i, j).finite_value());

  UnionFind uf(n);
  std::vector<int> block_node(n);  // representative point -> current node id
  for (int i = 0; i < n; ++i) block_node[i] = i;

  for (const Rational& r : thresholds) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.at(i, j).finite_value() == r) uf.unite(i, j);

    // Group current blocks by representative.
    std::map<int, std::set<int>> group_members;  // rep -> point indices
    std::map<int, std::set<int>> child_sets;     // rep -> node ids merged here
    for (int i = 0; i < n; ++i) {
      int rep = uf.find(i);
      group_members[rep].insert(i);
      child_sets[rep].insert(block_node[i]);
    }

    for (auto& [rep, kids] : child_sets) {
      if (kids.size() < 2) continue;  // block unchanged at this threshold
      ClusterNode node;
      node.depth = ExtendedValue(r);
      node.children.assign(kids.begin(), kids.end());
      for (int point : group_members[rep]) node.members.push_back(point);
      std::sort(node.members.begin(), node.members.end());
      const int id = static_cast<int>(tree.nodes_.size());
      for (int kid : kids) tree.nodes_[kid].parent = id;
      tree.nodes_.push_back(std::move(node));
      for (int point : group_members[rep]) block_node[point] = id;
    }
  }

  tree.root_ = block_node[0];
  for (int i = 0; i < n; ++i)
    if (block_node[i] != tree.root_) fail(ErrorCode::Parse, "cluster tree failed to close");
  return tree;
}

int ClusterTree::join(int a, int b) const {
  // Walk a's ancestor chain into a set, then climb from b.
  std::vector<bool> seen(nodes_.size(), false);
  for (int x = a; x != -1; x = nodes_[x].parent) seen[x] = true;
  for (int y = b; y != -1; y = nodes_[y].parent)
    if (seen[y]) return y;
  fail(ErrorCode::Parse, "clusters not in the same tree");
}

int ClusterTree::cluster_of_pair(int point_a, int point_b) const {
  return join(leaf_of_point_[point_a], leaf_of_point_[point_b]);
}

Rational ClusterTree::triple_term(int s, int c) const {
  const int j = join(s, c);
  return nodes_[s].depth.finite_value() + nodes_[c].depth.finite_value() -
         Rational(2) * nodes_[j].depth.finite_value();
}

Rational ClusterTree::relative_depth(int s) const {
  if (nodes_[s].parent == -1) fail(ErrorCode::Parse, "relative depth of the root is undefined");
  return nodes_[s].depth.finite_value() - nodes_[nodes_[s].parent].depth.finite_value();
}

bool ClusterTree::contains(int outer, int inner) const {
  for (int x = inner; x != -1; x = nodes_[x].parent)
    if (x == outer) return true;
  return false;
}

std::vector<int> ClusterTree::non_singletons() const {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i)
    if (!nodes_[i].is_singleton()) ids.push_back(i);
  std::sort(ids.begin(), ids.end(), [this](int a, int b) {
    if (nodes_[a].members[0] != nodes_[b].members[0])
      return nodes_[a].members[0] < nodes_[b].members[0];
    return nodes_[a].members.size() < nodes_[b].members.size();
  });
  return ids;
}

std::string ClusterTree::member_string(int id) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < nodes_[id].members.size(); ++k) {
    if (k) os << ",";
    os << nodes_[id].members[k];
  }
  os << "}";
  return os.str();
}

namespace {

bool even_cover(const ClusterTree& tree, int c) {
  const ClusterNode& node = tree.node(c);
  if (node.is_even()) return true;
  if (node.is_singleton()) return false;
  for (int kid : node.children)
    if (!even_cover(tree, kid)) return false;
  return true;
}

}  // namespace

bool is_even_partitionable(const ClusterTree& tree, int s) {
  const ClusterNode& node = tree.node(s);
  if (node.is_singleton()) return false;
  for (int kid : node.children)
    if (!even_cover(tree, kid)) return false;
  return true;
}

bool is_ubereven(const ClusterTree& tree, int s, const Rational& tube_radius) {
  if (tree.node(s).is_singleton()) fail(ErrorCode::Parse, "ubereven test needs a non-singleton");
  if (!is_even_partitionable(tree, s)) return false;
  for (int c = 0; c < static_cast<int>(tree.nodes().size()); ++c) {
    if (tree.node(c).is_singleton()) continue;
    if (is_even_partitionable(tree, c)) continue;
    if (!(tree.triple_term(s, c) > tube_radius)) return false;
  }
  return true;
}

void classify_clusters(ClusterTree& tree, const Rational& tube_radius) {
  auto& nodes = const_cast<std::vector<ClusterNode>&>(tree.nodes());
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    nodes[i].even_partitionable = is_even_partitionable(tree, i);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    nodes[i].ubereven = !nodes[i].is_singleton() && is_ubereven(tree, i, tube_radius);
}

int pair_cluster(const ClusterTree& tree, long long i, const BranchConfig& cfg) {
  if (i < 1 || i > cfg.h)
    fail(ErrorCode::Parse, "pair cluster index must be in 1..h (beta_0 = inf lies in no cluster)");
  return tree.cluster_of_pair(static_cast<int>(2 * i - 1), static_cast<int>(2 * i));
}

FrakSets compute_frak_sets(const ClusterTree& tree, const BranchConfig& cfg) {
  FrakSets out;
  out.pair_cluster.assign(cfg.h + 1, -1);
  for (long long i = 1; i <= cfg.h; ++i) out.pair_cluster[i] = pair_cluster(tree, i, cfg);

  for (int id : tree.non_singletons()) {
    const ClusterNode& node = tree.node(id);
    if (node.ubereven || !node.even_partitionable) {
      out.frak_C.push_back(id);
      if (node.is_even()) out.frak_C0.push_back(id);
    }
  }

  // Dictionary check: the non-ubereven members of frak_C0 must be exactly
  // the h pairwise-distinct clusters s_1..s_h.
  std::vector<int> plain;
  for (int id : out.frak_C0)
    if (!tree.node(id).ubereven) plain.push_back(id);
  std::vector<int> expected(out.pair_cluster.begin() + 1, out.pair_cluster.end());
  std::sort(expected.begin(), expected.end());
  if (std::adjacent_find(expected.begin(), expected.end()) != expected.end())
    fail(ErrorCode::SplitDegeneracy, "pair clusters s_i are not pairwise distinct");
  std::sort(plain.begin(), plain.end());
  if (plain != expected)
    fail(ErrorCode::SplitDegeneracy,
         "even non-partitionable clusters do not match the pair clusters s_1..s_h; "
         "input is not split degenerate");
  return out;
}

}  // namespace cmono
