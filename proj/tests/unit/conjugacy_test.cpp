#include <gtest/gtest.h>

#include <random>

#include "corpus/corpus.hpp"
#include "gp/conjugacy.hpp"
#include "gp/cyclic.hpp"

namespace gp {
namespace {

Element el(const PresentationPtr& p, const char* text) { return Element::parse(p, text); }

TEST(Conjugacy, PathExample) {
  auto p = corpus::path_racg();
  auto v = are_conjugate(el(p, "a[1] c[1]"), el(p, "c[1] a[1]"));
  ASSERT_TRUE(v.conjugate);
  EXPECT_EQ(v.conjugator->str(), "a[1]");
}

TEST(Conjugacy, RefutationOrder) {
  auto p = corpus::path_racg();
  EXPECT_EQ(are_conjugate(el(p, "a[1]"), el(p, "c[1]")).refutation, Refutation::support_mismatch);
  auto f = corpus::free_z2();
  EXPECT_EQ(are_conjugate(el(f, "x[1] y[1]"), el(f, "x[1] y[1] x[1] y[1]")).refutation,
            Refutation::length_mismatch);
  EXPECT_EQ(are_conjugate(el(f, "x[1] y[1] x[1] y[2]"), el(f, "x[1] y[2] x[1] y[2]")).refutation,
            Refutation::p_part_not_cyclic_permutation);
  auto z = corpus::z2();
  EXPECT_EQ(are_conjugate(el(z, "x[1] y[1]"), el(z, "x[1] y[2]")).refutation, Refutation::s_part_not_conjugate);
}

TEST(Conjugacy, TableVertexInClique) {
  auto p = corpus::s3_clique();
  auto v = are_conjugate(el(p, "s[r] t[1]"), el(p, "s[r2] t[1]"));
  ASSERT_TRUE(v.conjugate);
  EXPECT_EQ(conjugate(*v.conjugator, el(p, "s[r] t[1]")), el(p, "s[r2] t[1]"));
  EXPECT_FALSE(are_conjugate(el(p, "s[r] t[1]"), el(p, "s[f] t[1]")).conjugate);
}

TEST(Conjugacy, RefutationTagsRoundTrip) {
  for (auto r : {Refutation::support_mismatch, Refutation::length_mismatch, Refutation::p_part_not_cyclic_permutation,
                 Refutation::s_part_not_conjugate})
    EXPECT_EQ(refutation_from_string(to_string(r)), r);
  EXPECT_FALSE(refutation_from_string("nonsense").has_value());
}

TEST(Conjugacy, RandomConjugatesAreDetected) {
  std::mt19937_64 rng(31);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 200; ++i) {
      Element x = corpus::random_element(p, rng, 8, 3);
      Element w = corpus::random_element(p, rng, 6, 3);
      Element y = conjugate(w, x);
      auto v = are_conjugate(x, y);
      ASSERT_TRUE(v.conjugate) << name << ": " << x.str() << " vs " << y.str();
      EXPECT_EQ(conjugate(*v.conjugator, x), y);
      EXPECT_FALSE(v.refutation.has_value());
      // symmetric
      EXPECT_TRUE(are_conjugate(y, x).conjugate);
    }
  }
}

TEST(Conjugacy, AgreesWithOracleOnSmallPairs) {
  std::mt19937_64 rng(32);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 60; ++i) {
      Element x = corpus::random_element(p, rng, 3, 2);
      Element y = corpus::random_element(p, rng, 3, 2);
      auto v = are_conjugate(x, y);
      auto o = brute_force_conjugate(x, y, 4);
      if (o.conjugator) {
        EXPECT_TRUE(v.conjugate);
        EXPECT_EQ(conjugate(*o.conjugator, x), y);
      }
      if (v.conjugate) EXPECT_EQ(conjugate(*v.conjugator, x), y);
    }
  }
}

TEST(CliqueConjugacy, ComponentWise) {
  auto p = corpus::triangle();
  VertexSet all = p->vertices();
  auto c = conjugate_in_clique_subgroup(all, el(p, "a[1] c[1]"), el(p, "a[1] c[1]"));
  EXPECT_TRUE(c.conjugate);
  EXPECT_FALSE(conjugate_in_clique_subgroup(all, el(p, "c[1]"), el(p, "c[3]")).conjugate);
}

TEST(BruteForceConjugacy, ReturnsLeastWitness) {
  auto p = corpus::path_racg();
  auto o = brute_force_conjugate(el(p, "a[1] c[1]"), el(p, "c[1] a[1]"), 2);
  ASSERT_TRUE(o.conjugator.has_value());
  EXPECT_EQ(o.conjugator->str(), "a[1]");
  EXPECT_TRUE(brute_force_conjugate(el(p, "a[1]"), el(p, "c[1]"), 4).exhausted());
}

}  // namespace
}  // namespace gp
