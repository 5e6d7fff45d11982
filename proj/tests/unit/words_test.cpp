#include <gtest/gtest.h>

#include <random>

#include "corpus/corpus.hpp"
#include "gp/error.hpp"
#include "gp/words.hpp"
#include "support/oracles.hpp"

namespace gp {
namespace {

Element el(const PresentationPtr& p, const char* text) { return Element::parse(p, text); }

TEST(Reduce, PathExamples) {
  auto p = corpus::path_racg();
  EXPECT_EQ(el(p, "a[1] b[1] a[1]").str(), "b[1]");
  EXPECT_EQ(el(p, "a[1] c[1] a[1]").str(), "a[1] c[1] a[1]");
  EXPECT_EQ(el(p, "b[1] a[1]").str(), "a[1] b[1]");
  EXPECT_TRUE(el(p, "c[1] b[1] c[1] b[1]").is_identity());
}

TEST(Reduce, CommutingIntegers) {
  auto p = corpus::z2();
  EXPECT_EQ(el(p, "x[1] y[2] x[-1]").str(), "y[2]");
  EXPECT_EQ(el(p, "y[3] x[2] y[-1] x[0]").str(), "x[2] y[2]");
}

TEST(Reduce, JoinAcrossLink) {
  auto p = corpus::triangle();
  EXPECT_EQ(el(p, "c[1] a[1] b[1] c[2]").str(), "a[1] b[1] c[3]");
  EXPECT_TRUE(el(p, "b[1] b[2]").is_identity());
}

TEST(Reduce, TableGroup) {
  auto p = corpus::s3_clique();
  EXPECT_EQ(el(p, "s[f] t[1] s[f]").str(), "t[1]");
  EXPECT_EQ(el(p, "s[r] u[1] s[r]").str(), "s[r] u[1] s[r]");
}

TEST(Reduce, IdempotentAndNotLonger) {
  std::mt19937_64 rng(11);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 200; ++i) {
      Word w = corpus::random_word(*p, rng, 10, 3);
      Element e = reduce(p, w);
      EXPECT_LE(e.length(), w.size());
      EXPECT_EQ(reduce(p, e.word()), e);
      EXPECT_TRUE(oracle::reduced_by_definition(*p, e.word())) << name << ": " << e.str();
      EXPECT_EQ(is_reduced(*p, w), oracle::reduced_by_definition(*p, w)) << render_word(*p, w);
      if (oracle::reduced_by_definition(*p, w)) EXPECT_EQ(e.length(), w.size());
    }
  }
}

TEST(Reduce, CanonicalIsShuffleInvariant) {
  std::mt19937_64 rng(12);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 200; ++i) {
      Element e = corpus::random_element(p, rng, 10, 3);
      EXPECT_EQ(reduce(p, corpus::scrambled_word(e, rng, 3)), e) << name;
    }
  }
}

TEST(Reduce, CanonicalFormRequiresReducedInput) {
  auto p = corpus::path_racg();
  EXPECT_THROW(canonical_form(*p, parse_word(*p, "a[1] a[1]")), InvalidArgument);
  EXPECT_EQ(render_word(*p, canonical_form(*p, parse_word(*p, "c[1] b[1] a[1]"))), "b[1] c[1] a[1]");
}

TEST(Shape, FirstAndLastLettersMatchDefinition) {
  std::mt19937_64 rng(13);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 200; ++i) {
      Element e = corpus::random_element(p, rng, 10, 3);
      ShapeReport s = shape(e);
      EXPECT_EQ(s.first_letters, oracle::first_letters(*p, e.word()));
      EXPECT_EQ(s.last_letters, oracle::last_letters(*p, e.word()));
      EXPECT_EQ(s.first_letters, shape(invert(e)).last_letters);
      EXPECT_TRUE((s.first_letters | s.last_letters).subset_of(s.support));
      EXPECT_EQ(s.length == 0, s.support.empty());
    }
  }
}

TEST(Products, GroupLaws) {
  std::mt19937_64 rng(14);
  for (const auto& [name, p] : corpus::standard()) {
    for (int i = 0; i < 100; ++i) {
      Element a = corpus::random_element(p, rng, 6, 3);
      Element b = corpus::random_element(p, rng, 6, 3);
      Element c = corpus::random_element(p, rng, 6, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a * invert(a)).is_identity());
      EXPECT_EQ(invert(a * b), invert(b) * invert(a));
      EXPECT_EQ(power(a, 3), a * a * a);
      EXPECT_EQ(power(a, -2), invert(a * a));
      EXPECT_EQ(conjugate(b, a), b * a * invert(b));
    }
  }
}

TEST(Products, ReducedProductDetection) {
  auto p = corpus::path_racg();
  std::vector<Element> ok = {el(p, "a[1]"), el(p, "c[1]")};
  std::vector<Element> bad = {el(p, "a[1] b[1]"), el(p, "a[1]")};
  EXPECT_TRUE(is_reduced_product(ok));
  EXPECT_FALSE(is_reduced_product(bad));
}

TEST(Restrict, DropsAndReduces) {
  auto p = corpus::path_racg();
  VertexSet ac = p->vertex_set({"a", "c"});
  EXPECT_EQ(restrict_to(el(p, "a[1] b[1] c[1]"), ac).str(), "a[1] c[1]");
  // removing c joins the two a syllables
  EXPECT_TRUE(restrict_to(el(p, "a[1] c[1] a[1]"), p->vertex_set({"a", "b"})).is_identity());
}

TEST(Oracle, BruteForceEqual) {
  auto p = corpus::path_racg();
  EXPECT_EQ(brute_force_equal(*p, parse_word(*p, "a[1] b[1] a[1]"), parse_word(*p, "b[1]"), 1000),
            EqualityOutcome::equal);
  EXPECT_EQ(brute_force_equal(*p, parse_word(*p, "a[1] c[1]"), parse_word(*p, "c[1] a[1]"), 1000),
            EqualityOutcome::not_equal);
  EXPECT_EQ(brute_force_equal(*p, parse_word(*p, "a[1] c[1] a[1] c[1]"), parse_word(*p, "c[1] a[1] c[1] a[1]"), 1),
            EqualityOutcome::not_equal);
  EXPECT_EQ(brute_force_equal(*p, parse_word(*p, "a[1] b[1]"), parse_word(*p, "a[1] c[1]"), 1),
            EqualityOutcome::exhausted);
}

TEST(Ball, CountsInPathRacg) {
  auto p = corpus::path_racg();
  // Shortlex order and the identity first.
  auto ball = enumerate_ball(p, {2, 0, std::nullopt});
  ASSERT_FALSE(ball.elements.empty());
  EXPECT_TRUE(ball.elements.front().is_identity());
  // 1 + 3 + {ab, ac, bc, ca}
  EXPECT_EQ(ball.elements.size(), 8u);
  for (std::size_t i = 1; i < ball.elements.size(); ++i)
    EXPECT_TRUE(shortlex_less(ball.elements[i - 1], ball.elements[i]));
}

TEST(Ball, FiniteGroupIsComplete) {
  auto ball = enumerate_ball(corpus::triangle(), {3, 0, std::nullopt});
  EXPECT_TRUE(ball.complete);
  EXPECT_EQ(ball.elements.size(), 24u);
}

TEST(Ball, MatchesElementsUpTo) {
  auto p = corpus::free_z2();
  auto ball = enumerate_ball(p, {3, 2, std::nullopt});
  // 1 + 8 + 8*4 + 8*4*4
  EXPECT_EQ(ball.elements.size(), 1u + 8 + 32 + 128);
  EXPECT_EQ(corpus::elements_up_to(p, 3, 2).size(), ball.elements.size());
}

}  // namespace
}  // namespace gp
