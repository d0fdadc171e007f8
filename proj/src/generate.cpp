#include "cmono/generate.hpp"

#include <algorithm>
#include <variant>

#include "cmono/errors.hpp"

namespace cmono {

namespace {

// Self-contained splitmix64 so documents are reproducible across platforms.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }
};

struct PairLeaf {
  long long pair_index;  // 1..h
  long long depth;       // valuation between the two members (atomic pairs)
  bool hosted;           // hosted pairs split at the node depth itself
};
struct AlphaLeaf {};

struct GenNode {
  long long depth = 0;
  int parent = -1;
  std::vector<int> child_nodes;
  std::vector<std::variant<PairLeaf, AlphaLeaf>> leaves;
  bool hosting = false;
  bool has_alpha0 = false;
};

struct Builder {
  Rng rng;
  long long base_step;  // smallest allowed depth increment, > 2 * tube radius
  std::vector<GenNode> nodes;

  long long step() { return base_step + rng.below(3); }

  int make_node(long long depth, int parent) {
    GenNode n;
    n.depth = depth;
    n.parent = parent;
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  // items: -1 for alpha_0, otherwise a pair index; builds a laminar tree.
  int build(std::vector<long long> items, long long depth, int parent) {
    const int id = make_node(depth, parent);
    // Shuffle, then cut into 2..4 nonempty contiguous groups.
    for (std::size_t k = items.size(); k > 1; --k)
      std::swap(items[k - 1], items[rng.below(static_cast<long long>(k))]);
    const long long max_groups = std::min<long long>(static_cast<long long>(items.size()), 4);
    const long long groups = 2 + (max_groups > 2 ? rng.below(max_groups - 1) : 0);
    std::vector<std::vector<long long>> buckets(groups);
    for (std::size_t k = 0; k < items.size(); ++k)
      buckets[k < static_cast<std::size_t>(groups) ? k : static_cast<std::size_t>(rng.below(groups))]
          .push_back(items[k]);
    for (auto& bucket : buckets) {
      if (bucket.size() == 1) {
        if (bucket[0] < 0) {
          nodes[id].leaves.push_back(AlphaLeaf{});
        } else {
          nodes[id].leaves.push_back(PairLeaf{bucket[0], depth + step(), false});
        }
      } else {
        const int kid = build(bucket, depth + step(), id);
        nodes[id].child_nodes.push_back(kid);
      }
    }
    return id;
  }

  void mark_alpha() {
    for (int v = static_cast<int>(nodes.size()) - 1; v >= 0; --v) {
      for (const auto& leaf : nodes[v].leaves)
        if (std::holds_alternative<AlphaLeaf>(leaf)) nodes[v].has_alpha0 = true;
      if (nodes[v].has_alpha0)
        for (int a = nodes[v].parent; a != -1; a = nodes[a].parent) nodes[a].has_alpha0 = true;
    }
  }
};

}  // namespace

InputDocument generate_instance(long long p, long long h, const Rational& vp,
                                std::uint64_t seed) {
  BranchConfig probe;
  probe.p = p;
  probe.h = h;
  probe.vp = vp;
  probe.exponents.assign(h + 1, 1);
  probe.validate();

  Builder b;
  b.rng.state = seed ^ (0xC0FFEEULL + 1315423911ULL * static_cast<std::uint64_t>(p) +
                        2654435761ULL * static_cast<std::uint64_t>(h) +
                        static_cast<std::uint64_t>(rat_num(vp)) * 97ULL +
                        static_cast<std::uint64_t>(rat_den(vp)) * 31ULL);
  const Rational two_rho = Rational(2) * Rational(p) * vp / Rational(p - 1);
  b.base_step = static_cast<long long>(rat_num(two_rho) / rat_den(two_rho)) + 1;

  // Which pairs sit inside a bigger even cluster rather than forming their
  // own two-point blob; keep at least one atomic pair.
  std::vector<long long> hosted, atomic;
  for (long long i = 1; i <= h; ++i)
    (h >= 2 && b.rng.below(3) == 0 ? hosted : atomic).push_back(i);
  if (atomic.empty()) {
    atomic.push_back(hosted.back());
    hosted.pop_back();
  }

  std::vector<long long> items = atomic;
  items.push_back(-1);  // alpha_0
  const long long root_depth = b.rng.below(5) - 2;
  b.build(items, root_depth, -1);
  b.mark_alpha();

  // Place hosted pairs on internal nodes free of alpha_0; leftovers fall
  // back to atomic blobs attached below a random node.
  for (long long i : hosted) {
    std::vector<int> candidates;
    for (int v = 0; v < static_cast<int>(b.nodes.size()); ++v)
      if (!b.nodes[v].has_alpha0 && !b.nodes[v].hosting) candidates.push_back(v);
    if (!candidates.empty()) {
      const int host = candidates[b.rng.below(static_cast<long long>(candidates.size()))];
      b.nodes[host].hosting = true;
      b.nodes[host].leaves.push_back(PairLeaf{i, b.nodes[host].depth, true});
    } else {
      const int at = b.rng.below(static_cast<long long>(b.nodes.size()));
      b.nodes[at].leaves.push_back(PairLeaf{i, b.nodes[at].depth + b.step(), false});
    }
  }

  InputDocument doc;
  doc.config.p = p;
  doc.config.h = h;
  doc.config.vp = vp;
  doc.config.exponents.resize(h + 1);
  doc.config.exponents[0] = 1 + b.rng.below(p - 1);
  for (long long i = 1; i <= h; ++i) doc.config.exponents[i] = 1 + b.rng.below(p / 2);

  // Realize the tree: every point gets its chain of tree nodes, and the
  // members of a pair record their split depth.
  const long long n_points = 2 * h + 1;
  std::vector<std::vector<int>> chain(n_points);
  std::vector<long long> split_depth(n_points, 0);

  std::vector<int> stack{0};
  std::vector<std::vector<int>> prefix_chain(b.nodes.size());
  for (int v = 0; v < static_cast<int>(b.nodes.size()); ++v) {
    if (b.nodes[v].parent == -1)
      prefix_chain[v] = {v};
    else {
      prefix_chain[v] = prefix_chain[b.nodes[v].parent];
      prefix_chain[v].push_back(v);
    }
  }
  for (int v = 0; v < static_cast<int>(b.nodes.size()); ++v)
    for (const auto& leaf : b.nodes[v].leaves) {
      if (std::holds_alternative<AlphaLeaf>(leaf)) {
        chain[0] = prefix_chain[v];
      } else {
        const PairLeaf& pl = std::get<PairLeaf>(leaf);
        chain[2 * pl.pair_index - 1] = prefix_chain[v];
        chain[2 * pl.pair_index] = prefix_chain[v];
        split_depth[2 * pl.pair_index - 1] = pl.depth;
        split_depth[2 * pl.pair_index] = pl.depth;
      }
    }
  for (long long pt = 0; pt < n_points; ++pt)
    if (chain[pt].empty()) fail(ErrorCode::Parse, "generator missed a point");

  if (vp == 0) {
    // Laurent realization: distinct sibling coefficients at each node level,
    // pair members split with a nonzero coefficient at their own depth.
    doc.mode = InputDocument::Mode::Laurent;
    doc.roots.assign(n_points, LaurentPoly{});
    std::vector<LaurentPoly> base(b.nodes.size());
    std::vector<long long> next_coeff(b.nodes.size(), 0);
    auto sibling_coeff = [&](int node) {
      return Rational(next_coeff[node]++);
    };
    // Node bases in index order (parents precede children by construction).
    for (int v = 0; v < static_cast<int>(b.nodes.size()); ++v) {
      if (b.nodes[v].parent == -1) continue;
      const int par = b.nodes[v].parent;
      base[v] = base[par] + LaurentPoly::term(sibling_coeff(par), b.nodes[par].depth);
    }
    for (int v = 0; v < static_cast<int>(b.nodes.size()); ++v)
      for (const auto& leaf : b.nodes[v].leaves) {
        if (std::holds_alternative<AlphaLeaf>(leaf)) {
          doc.roots[0] = base[v] + LaurentPoly::term(sibling_coeff(v), b.nodes[v].depth);
        } else {
          const PairLeaf& pl = std::get<PairLeaf>(leaf);
          if (pl.hosted) {
            doc.roots[2 * pl.pair_index - 1] =
                base[v] + LaurentPoly::term(sibling_coeff(v), b.nodes[v].depth);
            doc.roots[2 * pl.pair_index] =
                base[v] + LaurentPoly::term(sibling_coeff(v), b.nodes[v].depth);
          } else {
            LaurentPoly foot = base[v] + LaurentPoly::term(sibling_coeff(v), b.nodes[v].depth);
            doc.roots[2 * pl.pair_index - 1] = foot;
            doc.roots[2 * pl.pair_index] =
                foot + LaurentPoly::term(Rational(1 + b.rng.below(3)), pl.depth);
          }
        }
      }
  } else {
    doc.mode = InputDocument::Mode::Matrix;
    doc.matrix = ValMatrix::zeros(n_points);
    for (long long x = 0; x < n_points; ++x)
      for (long long y = x + 1; y < n_points; ++y) {
        long long v;
        const long long px = (x + 1) / 2, py = (y + 1) / 2;
        if (x != 0 && px == py) {
          v = split_depth[x];
        } else {
          std::size_t k = 0;
          while (k < chain[x].size() && k < chain[y].size() && chain[x][k] == chain[y][k]) ++k;
          v = b.nodes[chain[x][k - 1]].depth;
        }
        doc.matrix.at(x, y) = ExtendedValue(Rational(v));
        doc.matrix.at(y, x) = ExtendedValue(Rational(v));
      }
  }
  return doc;
}

}  // namespace cmono
