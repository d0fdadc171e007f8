#include <doctest.h>

#include <map>

#include "cmono/errors.hpp"
#include "test_util.hpp"

using namespace cmono;
using testutil::L;

namespace {

RationalMatrix to_matrix(std::vector<std::vector<long long>> rows) {
  RationalMatrix m = RationalMatrix::zeros(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

int cluster_with(const ClusterTree& tree, std::vector<int> members) {
  for (int id = 0; id < static_cast<int>(tree.nodes().size()); ++id)
    if (tree.node(id).members == members) return id;
  return -1;
}

}  // namespace

TEST_CASE("characters: v_i and zeta shifts") {
  GammaBasis basis{3, 1};
  Character v1 = character_v(basis, 1);
  CHECK(v1.evaluate(1, 1) == 1);
  CHECK(v1.evaluate(1, 2) == 0);
  CHECK(v1.evaluate(1, 0) == -1);

  Character zv2 = character_zeta_v(basis, 1, 2);
  CHECK(zv2.evaluate(1, 1) == -1);
  CHECK(zv2.evaluate(1, 2) == 1);

  // zeta shift has order exactly p and the orbit sum vanishes.
  CHECK(v1.zeta_shift(3) == v1);
  CHECK(!(v1.zeta_shift(1) == v1));
  Character orbit(basis);
  for (long long n = 0; n < 3; ++n) orbit += v1.zeta_shift(n);
  CHECK(orbit.is_zero());
}

TEST_CASE("character of w sums the support") {
  Analysis a(testutil::example_a());
  const GammaBasis& basis = a.engine().gamma_basis();
  Character w = character_w(basis, {1, 2});
  Character sum = character_v(basis, 1) + character_v(basis, 2);
  CHECK(w == sum);
}

TEST_CASE("s prime selection") {
  Analysis a(testutil::example_a());
  const auto& tree = a.tree();
  const int s1 = cluster_with(tree, {1, 2});
  const int s2 = cluster_with(tree, {3, 4});
  const int quad = cluster_with(tree, {1, 2, 3, 4});
  CHECK(a.engine().select_s_prime(s1) == quad);
  CHECK(a.engine().select_s_prime(s2) == quad);
  CHECK(a.engine().select_s_prime(quad) == tree.root());

  Analysis b(testutil::example_b());
  const int s1b = cluster_with(b.tree(), {1, 2});
  const int s2b = cluster_with(b.tree(), {1, 2, 3, 4});
  CHECK(b.engine().select_s_prime(s1b) == s2b);
  CHECK(b.engine().select_s_prime(s2b) == b.tree().root());
}

TEST_CASE("m values") {
  Analysis a(testutil::example_a());
  std::map<std::vector<int>, Rational> m_of;
  for (const auto& d : a.engine().plan()) m_of[a.tree().node(d.cluster).members] = d.m;
  CHECK(m_of[{1, 2}] == Rational(2));
  CHECK(m_of[{3, 4}] == Rational(1));
  CHECK(m_of[{1, 2, 3, 4}] == Rational(1));
  // vp = 0: m equals the relative depth.
  for (const auto& d : a.engine().plan())
    CHECK(d.m == a.tree().relative_depth(d.cluster));
}

TEST_CASE("m value with positive vp, matrix mode") {
  InputDocument doc;
  doc.mode = InputDocument::Mode::Matrix;
  doc.config.p = 2;
  doc.config.h = 1;
  doc.config.vp = 1;
  doc.config.exponents = {1, 1};
  doc.matrix = ValMatrix::zeros(3);
  doc.matrix.at(1, 2) = doc.matrix.at(2, 1) = ExtendedValue(8);
  Analysis a(std::move(doc));
  REQUIRE(a.engine().plan().size() == 1);
  CHECK(a.engine().plan()[0].m == Rational(4));  // 8 - 2 * (2*1/1)
}

TEST_CASE("transvection plan supports") {
  Analysis a(testutil::example_a());
  std::map<std::vector<int>, std::vector<long long>> support;
  for (const auto& d : a.engine().plan())
    support[a.tree().node(d.cluster).members] = d.support;
  CHECK(support[{1, 2}] == std::vector<long long>{1});
  CHECK(support[{3, 4}] == std::vector<long long>{2});
  CHECK(support[{1, 2, 3, 4}] == std::vector<long long>{1, 2});

  Analysis b(testutil::example_b());
  std::map<std::vector<int>, std::vector<long long>> support_b;
  for (const auto& d : b.engine().plan())
    support_b[b.tree().node(d.cluster).members] = d.support;
  CHECK(support_b[{1, 2}] == std::vector<long long>{1});
  // Index 1 is excluded: s_1 is properly nested inside s_2.
  CHECK(support_b[{1, 2, 3, 4}] == std::vector<long long>{2});

  Analysis c(testutil::laurent_doc(2, {"1", "0", "t^2"}));
  REQUIRE(c.engine().plan().size() == 1);
  CHECK(c.engine().plan()[0].support == std::vector<long long>{1});
}

TEST_CASE("gram matrices: example A") {
  Analysis a(testutil::example_a());
  const RationalMatrix expected = to_matrix({{6, 2}, {2, 4}});
  CHECK(a.engine().gram_matrix(GramMode::Formula) == expected);
  CHECK(a.engine().gram_matrix(GramMode::Transvections) == expected);
  CHECK(a.engine().gram_entry(1, 1, 1, 1, GramMode::Formula) == Rational(6));
  CHECK(a.engine().gram_entry(1, 1, 2, 1, GramMode::Formula) == Rational(2));
}

TEST_CASE("gram matrices: example B") {
  Analysis b(testutil::example_b());
  const RationalMatrix expected = to_matrix({{4, 0}, {0, 2}});
  CHECK(b.engine().gram_matrix(GramMode::Formula) == expected);
  CHECK(b.engine().gram_matrix(GramMode::Transvections) == expected);
  CHECK(b.engine().gram_entry(1, 1, 1, 1, GramMode::Transvections) == Rational(4));
  CHECK(b.engine().gram_entry(2, 1, 2, 1, GramMode::Transvections) == Rational(2));
  CHECK(b.engine().gram_entry(1, 1, 2, 1, GramMode::Formula) == Rational(0));
}

TEST_CASE("gram matrices: p = 3 example") {
  Analysis c(testutil::example_p3());
  const RationalMatrix expected = to_matrix({{4, -2}, {-2, 4}});
  CHECK(c.engine().gram_matrix(GramMode::Formula) == expected);
  CHECK(c.engine().gram_matrix(GramMode::Transvections) == expected);
  // epsilon = 1 for odd p.
  CHECK(c.engine().gram_entry(1, 1, 1, 2, GramMode::Formula) == Rational(-2));
  // Evaluation through the relation slot m = 0 works in both modes.
  CHECK(c.engine().gram_entry(1, 0, 1, 0, GramMode::Formula) ==
        c.engine().gram_entry(1, 0, 1, 0, GramMode::Transvections));
  CHECK(c.engine().gram_entry(1, 3, 1, 1, GramMode::Transvections) ==
        c.engine().gram_entry(1, 0, 1, 1, GramMode::Transvections));
}

TEST_CASE("gram positivity") {
  for (auto doc : {testutil::example_a(), testutil::example_b(), testutil::example_p3()}) {
    Analysis a(std::move(doc));
    RationalMatrix g = a.engine().gram_matrix(GramMode::Formula);
    CHECK(g.is_symmetric());
    for (const Rational& minor : g.leading_principal_minors()) CHECK(minor > 0);
  }
}

TEST_CASE("weil pairing") {
  Analysis a(testutil::example_a());
  const GammaBasis& basis = a.engine().gamma_basis();
  TateVector v = lattice_generator(basis, 1, 1);
  TateVector w = toric_generator(basis, 1, 0);
  CHECK(a.engine().weil_pairing(v, w) == 1);
  // p = 2: zeta v_1 is -v_1, so the pairing flips sign.
  TateVector zw = toric_generator(basis, 1, 1);
  CHECK(a.engine().weil_pairing(v, zw) == -1);
  // Toric x toric pairs to zero.
  CHECK(a.engine().weil_pairing(w, zw) == 0);
  // Lattice second argument is rejected.
  CHECK_THROWS_AS(a.engine().weil_pairing(w, v), AnalysisError);
}

TEST_CASE("transvections") {
  Analysis a(testutil::example_a());
  const GammaBasis& basis = a.engine().gamma_basis();
  TateVector w = toric_generator(basis, 1, 0);
  // Toric vectors are fixed.
  TateVector t = toric_generator(basis, 2, 0);
  CHECK(a.engine().apply_transvection(w, t).toric == t.toric);

  // t_{-w} = t_w (p = 2 flavor of the sign rule).
  TateVector v = lattice_generator(basis, 1, 1);
  TateVector neg_w(basis);
  neg_w.add_toric(1, 0, -1);
  const TateVector lhs = a.engine().apply_transvection(w, v);
  const TateVector rhs = a.engine().apply_transvection(neg_w, v);
  CHECK(lhs.toric == rhs.toric);
  CHECK(lhs.lattice == rhs.lattice);

  // Four applications add 4 * e * w with e = 1.
  TateVector four = v;
  for (int k = 0; k < 4; ++k) four = a.engine().apply_transvection(w, four);
  CHECK(four.toric[TateVector::toric_index(basis, 1, 0)] == 4);
  CHECK(four.lattice == v.lattice);
}

TEST_CASE("monodromy matrix") {
  Analysis a(testutil::example_a());
  auto res = a.engine().monodromy_matrix();
  CHECK(res.factored_route_checked);
  REQUIRE(res.block.size == 4);
  // [[I, M], [0, I]] with M = [[6,2],[2,4]].
  const RationalMatrix expected_m = to_matrix({{6, 2}, {2, 4}});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(res.block.at(i, j) == (i == j ? Rational(1) : Rational(0)));
      CHECK(res.block.at(i, 2 + j) == expected_m.at(i, j));
      CHECK(res.block.at(2 + i, j) == Rational(0));
      CHECK(res.block.at(2 + i, 2 + j) == (i == j ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("monodromy matrix: elliptic series matches the j-invariant") {
  for (long long n = 1; n <= 10; ++n) {
    Analysis a(testutil::laurent_doc(2, {"1", "0", "t^" + std::to_string(n)}));
    auto res = a.engine().monodromy_matrix();
    const ExtendedValue vj =
        legendre_j_valuation(L("1"), L("0"), L("t^" + std::to_string(n)));
    // Single transvection exponent 2n = -v(j).
    CHECK(res.block.at(0, 1) == -vj.finite_value());
    CHECK(res.block.at(0, 1) == Rational(2 * n));
  }
}

TEST_CASE("rational exponents are reported in block form only") {
  // p=5, vp=1: tube radius 5/4 and m = 9 - 5/2 = 13/2.
  InputDocument doc;
  doc.mode = InputDocument::Mode::Matrix;
  doc.config.p = 5;
  doc.config.h = 1;
  doc.config.vp = 1;
  doc.config.exponents = {1, 1};
  doc.matrix = ValMatrix::zeros(3);
  doc.matrix.at(1, 2) = doc.matrix.at(2, 1) = ExtendedValue(9);
  Analysis a(std::move(doc));
  REQUIRE(a.engine().plan().size() == 1);
  CHECK(a.engine().plan()[0].m == Rational(13, 2));
  auto res = a.engine().monodromy_matrix();
  CHECK(!res.factored_route_checked);
  CHECK(res.block.at(0, 4) == Rational(13));  // diagonal Gram entry 2m
  CHECK(a.engine().gram_matrix(GramMode::Formula) ==
        a.engine().gram_matrix(GramMode::Transvections));
}
