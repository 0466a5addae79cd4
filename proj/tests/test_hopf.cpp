#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qcdhopf;

namespace {

GraphId id(const FeynGraph& g) { return intern(g); }

Monomial mono(std::initializer_list<GraphId> ids) {
  Monomial m(ids);
  std::sort(m.begin(), m.end());
  return m;
}

HopfElement gen(const FeynGraph& g) { return HopfElement::generator(id(g)); }

std::vector<GraphId> generators_upto(int loops, int max_v5) {
  std::vector<GraphId> out;
  for (const Residue& r : all_residues()) {
    for (int l = 1; l <= loops; ++l) {
      for (const FeynGraph& g : enumerate_graphs(r, l, max_v5)) out.push_back(intern(g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST(Coproduct, NestedRainbow) {
  const GraphId rb2 = id(fixture::rb2());
  const GraphId qse1 = id(fixture::qse1());
  TensorElement expect;
  expect.add({rb2}, {}, Q(1));
  expect.add({}, {rb2}, Q(1));
  expect.add({qse1}, {qse1}, Q(1));
  expect.add({id(quark_rainbow(1, true))}, {id(fixture::qse1_mass())}, Q(1));
  EXPECT_EQ(coproduct(rb2), expect);
  EXPECT_EQ(coproduct(HopfElement::generator(rb2)), expect);
}

TEST(Coproduct, Unit) {
  TensorElement expect;
  expect.add({}, {}, Q(1));
  EXPECT_EQ(coproduct(HopfElement::one()), expect);
}

TEST(Coproduct, PrimitiveGraphs) {
  for (const FeynGraph& g : {fixture::qse1(), fixture::vertex1(), fixture::gluon_bubble()}) {
    EXPECT_TRUE(reduced_coproduct(id(g)).is_zero());
  }
}

TEST(Coproduct, ThreeLoopGluonSelfEnergyFullSubgraphs) {
  const GraphId g = id(fixture::gse3());
  const GraphId v1 = id(fixture::vertex1());
  const GraphId v2 = id(fixture::vertex2_nested());
  const GraphId ladder = id(fixture::quark_loop_ladder(1));
  const GraphId bubble = id(fixture::quark_loop_ladder(0));
  TensorElement expect;
  expect.add({g}, {}, Q(1));
  expect.add({}, {g}, Q(1));
  expect.add({v1}, {ladder}, Q(2));
  expect.add({v2}, {bubble}, Q(2));
  expect.add({v1, v1}, {bubble}, Q(1));
  EXPECT_EQ(coproduct(g, SubgraphPolicy::Full), expect);
}

TEST(Coproduct, ThreeLoopGluonSelfEnergyDefault) {
  const GraphId g = id(fixture::gse3());
  const TensorElement full = coproduct(g, SubgraphPolicy::Full);
  const TensorElement extra = coproduct(g) - full;
  ASSERT_EQ(extra.size(), 1u);
  const auto& [key, c] = *extra.terms().begin();
  EXPECT_EQ(c, Q(2));
  ASSERT_EQ(key.first.size(), 1u);
  EXPECT_EQ(info(key.first[0]).residue, Residue{VertexKind::V4});
  EXPECT_EQ(info(key.first[0]).loops, 2);
  EXPECT_EQ(key.second, mono({id(fixture::gluon_tadpole())}));
}

TEST(Coproduct, Multiplicative) {
  const HopfElement a = gen(fixture::rb2());
  const HopfElement b = gen(quark_rainbow(3));
  EXPECT_EQ(coproduct(a * b), tensor_mul(coproduct(a), coproduct(b)));
}

TEST(Antipode, Examples) {
  const GraphId qse1 = id(fixture::qse1());
  EXPECT_EQ(antipode(HopfElement::one()), HopfElement::one());
  EXPECT_EQ(antipode(HopfElement::generator(qse1)), -HopfElement::generator(qse1));
  HopfElement expect = -gen(fixture::rb2());
  expect.add(mono({qse1, qse1}), Q(1));
  expect.add(mono({id(quark_rainbow(1, true)), id(fixture::qse1_mass())}), Q(1));
  EXPECT_EQ(antipode(gen(fixture::rb2())), expect);
}

TEST(Antipode, Multiplicative) {
  const HopfElement a = gen(fixture::rb2());
  const HopfElement b = gen(fixture::gse3());
  EXPECT_EQ(antipode(a * b), antipode(a) * antipode(b));
}

TEST(Projection, Examples) {
  const HopfElement qse1 = gen(fixture::qse1());
  EXPECT_EQ(project_loops(HopfElement::one() - qse1, 1), -qse1);
  EXPECT_EQ(project_degree(gen(fixture::rb2()) + qse1, Multidegree{2, 0, 0, 0, 0}), qse1);
  EXPECT_EQ(info(id(fixture::rb2())).degree, (Multidegree{4, 0, 0, 0, 0}));
}

TEST(Projection, CompleteAndIdempotent) {
  const TruncationSpec w{2, 1};
  const HopfElement x = series_power(green_function(EdgeKind::Gluon, w), make_q(-1, 2), w);
  HopfElement by_loops, by_degree;
  for (int l = 0; l <= 2; ++l) {
    const HopfElement q = project_loops(x, l);
    EXPECT_EQ(project_loops(q, l), q);
    by_loops += q;
  }
  for (const Multidegree& n : multidegrees(x)) {
    const HopfElement p = project_degree(x, n);
    EXPECT_EQ(project_degree(p, n), p);
    by_degree += p;
  }
  EXPECT_EQ(by_loops, x);
  EXPECT_EQ(by_degree, x);
}

TEST(Axioms, GeneratorsUpToTwoLoops) {
  const auto gens = generators_upto(2, 1);
  EXPECT_GT(gens.size(), 50u);
  for (GraphId g : gens) {
    const HopfElement x = HopfElement::generator(g);
    ASSERT_EQ(coassoc_left(x), coassoc_right(x)) << info(g).hash;
    EXPECT_EQ(counit_left(x), x);
    EXPECT_EQ(counit_right(x), x);
    EXPECT_TRUE(antipode_left(x).is_zero()) << info(g).hash;
    EXPECT_TRUE(antipode_right(x).is_zero()) << info(g).hash;
    EXPECT_EQ(counit(x), Q(0));
  }
}

TEST(Axioms, ThreeLoopExamples) {
  for (const FeynGraph& g : {fixture::gse3(), quark_rainbow(3), quark_rainbow(3, true)}) {
    const HopfElement x = gen(g);
    EXPECT_EQ(coassoc_left(x), coassoc_right(x));
    EXPECT_TRUE(antipode_left(x).is_zero());
    EXPECT_TRUE(antipode_right(x).is_zero());
  }
}

TEST(Axioms, Products) {
  const HopfElement x = gen(fixture::rb2()) * gen(fixture::vertex2_nested()) + gen(fixture::qse1());
  EXPECT_EQ(coassoc_left(x), coassoc_right(x));
  EXPECT_EQ(counit_left(x), x);
  EXPECT_EQ(antipode_left(x), HopfElement::scalar(counit(x)));
  EXPECT_EQ(antipode_right(x + HopfElement::one()), HopfElement::one());
}

TEST(Grading, CoproductPreservesDegrees) {
  for (GraphId g : generators_upto(2, 1)) {
    const Grade total = grade(g);
    for (const auto& [k, c] : coproduct(g).terms()) {
      Grade s = grade(k.first);
      s += grade(k.second);
      ASSERT_EQ(s.loops, total.loops);
      ASSERT_EQ(s.degree, total.degree);
    }
  }
}

TEST(Grading, DegreeZeroIsScalars) {
  const WindowBasis basis(TruncationSpec{2, 1});
  int zero_loops = 0, zero_degree = 0;
  for (const Monomial& m : basis.monomials()) {
    zero_loops += grade(m).loops == 0;
    zero_degree += grade(m).degree == Multidegree{};
    if (grade(m).loops == 0) EXPECT_TRUE(m.empty());
  }
  EXPECT_EQ(zero_loops, 1);
  EXPECT_EQ(zero_degree, 1);
}

TEST(Serialization, TensorJsonIsDeterministic) {
  const TensorElement d = coproduct(id(fixture::rb2()));
  const json a = to_json(d);
  const json b = to_json(coproduct(HopfElement::generator(id(fixture::rb2()))));
  EXPECT_EQ(a.dump(), b.dump());
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0]["coeff"], "1/1");
}
