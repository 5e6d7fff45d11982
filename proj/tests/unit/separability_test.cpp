#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "corpus/corpus.hpp"
#include "gp/conjugacy.hpp"
#include "gp/error.hpp"
#include "gp/separability.hpp"

namespace gp {
namespace {

Element el(const PresentationPtr& p, const char* text) { return Element::parse(p, text); }

TEST(ClassMode, Parse) {
  EXPECT_EQ(ClassMode::parse("finite").kind, ClassMode::Kind::all_finite);
  auto m = ClassMode::parse("p:3");
  EXPECT_EQ(m.kind, ClassMode::Kind::p_group);
  EXPECT_EQ(m.prime, 3);
  EXPECT_EQ(m.str(), "p:3");
  EXPECT_THROW(ClassMode::parse("p:4"), InvalidArgument);
  EXPECT_THROW(ClassMode::parse("bogus"), InvalidArgument);
  EXPECT_TRUE(m.admits_order(9));
  EXPECT_FALSE(m.admits_order(6));
  EXPECT_TRUE(is_prime_power(1, 2));
  EXPECT_FALSE(is_prime_power(12, 2));
}

TEST(QuotientFamily, ValidatesChoices) {
  auto p = corpus::triangle();
  EXPECT_NO_THROW(QuotientFamily(p, {VertexQuotient::identity(), VertexQuotient::identity(), VertexQuotient::mod(2)},
                                 ClassMode::all_finite()));
  // 3 does not divide 4
  EXPECT_THROW(QuotientFamily(p, {VertexQuotient::identity(), VertexQuotient::identity(), VertexQuotient::mod(3)},
                              ClassMode::all_finite()),
               InvalidArgument);
  // C3 kept in a 2-group class
  EXPECT_THROW(QuotientFamily(p, {VertexQuotient::identity(), VertexQuotient::identity(), VertexQuotient::identity()},
                              ClassMode::p_group(2)),
               InvalidArgument);
}

TEST(QuotientFamily, HomomorphismOnRandomProducts) {
  std::mt19937_64 rng(61);
  auto p = corpus::free_z2();
  QuotientFamily fam(p, {VertexQuotient::mod(4), VertexQuotient::mod(3)}, ClassMode::all_finite());
  for (int i = 0; i < 200; ++i) {
    Element a = corpus::random_element(p, rng, 6, 5);
    Element b = corpus::random_element(p, rng, 6, 5);
    EXPECT_EQ(apply_quotient(fam, a * b), apply_quotient(fam, a) * apply_quotient(fam, b));
  }
}

TEST(ResidualWitness, SmallestTwoPower) {
  auto p = corpus::single_z();
  auto w = residual_witness(el(p, "x[6]"), ClassMode::p_group(2));
  EXPECT_EQ(w.family.per_vertex()[0].modulus, 4);
  EXPECT_EQ(w.certificate_tag, "nontrivial-image");
  EXPECT_TRUE(verify_witness(w));
  EXPECT_THROW(residual_witness(Element(p), ClassMode::all_finite()), InvalidArgument);
}

TEST(ConjugacyWitness, SmallestModulus) {
  auto p = corpus::single_z();
  auto w = conjugacy_witness(el(p, "x[1]"), el(p, "x[2]"), ClassMode::all_finite());
  EXPECT_EQ(w.family.per_vertex()[0].modulus, 3);
  EXPECT_TRUE(verify_witness(w));
  auto j = nlohmann::json::parse(witness_json(w));
  EXPECT_EQ(j["mode"], "finite");
  EXPECT_EQ(j["per_vertex_moduli"]["x"], 3);
  EXPECT_EQ(j["certificate_tag"], "s-part-not-conjugate");
  EXPECT_THROW(conjugacy_witness(el(p, "x[1]"), el(p, "x[1]"), ClassMode::all_finite()), InvalidArgument);
}

TEST(ConjugacyWitness, ShapePreservedAndVerified) {
  std::mt19937_64 rng(62);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 60; ++i) {
      Element f = corpus::random_element(p, rng, 5, 3);
      Element g = corpus::random_element(p, rng, 5, 3);
      if (are_conjugate(f, g).conjugate) continue;
      auto w = conjugacy_witness(f, g, ClassMode::all_finite());
      EXPECT_TRUE(verify_witness(w)) << name;
      ASSERT_EQ(w.images.size(), 2u);
      EXPECT_FALSE(are_conjugate(w.images[0], w.images[1]).conjugate);
      for (const auto& q : w.family.per_vertex()) EXPECT_TRUE(q.keep || q.modulus >= 1);
    }
  }
}

TEST(ShapePreservingFamily, KeepsLengthAndSupport) {
  std::mt19937_64 rng(63);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 60; ++i) {
      std::vector<Element> es = {corpus::random_element(p, rng, 6, 4), corpus::random_element(p, rng, 6, 4)};
      auto fam = shape_preserving_family(es, ClassMode::all_finite());
      for (const auto& e : es) {
        Element img = apply_quotient(fam, e);
        EXPECT_EQ(img.length(), e.length());
        EXPECT_EQ(img.support(), e.support());
      }
      if (es[0] != es[1]) EXPECT_NE(apply_quotient(fam, es[0]), apply_quotient(fam, es[1]));
    }
  }
}

TEST(ShapePreservingFamily, ImpossibleInWrongClass) {
  auto p = corpus::triangle();
  EXPECT_THROW(shape_preserving_family({el(p, "b[1]")}, ClassMode::p_group(2)), ImpossibleFamily);
  auto q = shape_preserving_family({el(p, "a[1] c[1]")}, ClassMode::p_group(2));
  EXPECT_EQ(q.per_vertex()[1].modulus, 1);
}

TEST(Retraction, IsHomomorphism) {
  std::mt19937_64 rng(64);
  auto p = corpus::path_racg();
  VertexSet ac = p->vertex_set({"a", "c"});
  for (int i = 0; i < 100; ++i) {
    Element a = corpus::random_element(p, rng, 6, 1);
    Element b = corpus::random_element(p, rng, 6, 1);
    EXPECT_EQ(retraction(a * b, ac), retraction(a, ac) * retraction(b, ac));
  }
}

}  // namespace
}  // namespace gp
