#include <gtest/gtest.h>

#include "corpus/corpus.hpp"
#include "gp/error.hpp"
#include "gp/presentation.hpp"

namespace gp {
namespace {

TEST(VertexGroup, IntegersModArithmetic) {
  auto g = VertexGroup::integers_mod(4);
  EXPECT_EQ(g.mul(3, 3), 2);
  EXPECT_EQ(g.inverse(1), 3);
  EXPECT_EQ(g.order(), 4);
  EXPECT_TRUE(g.contains(3));
  EXPECT_FALSE(g.contains(4));
  EXPECT_EQ(g.parse("-1"), 3);
}

TEST(VertexGroup, IntegersArithmetic) {
  auto g = VertexGroup::integers();
  EXPECT_EQ(g.mul(-5, 7), 2);
  EXPECT_EQ(g.inverse(9), -9);
  EXPECT_FALSE(g.order().has_value());
  EXPECT_EQ(g.conjugator(2, 2), 0);
  EXPECT_FALSE(g.conjugator(2, 3).has_value());
}

TEST(VertexGroup, TableRejectsNonGroup) {
  EXPECT_THROW(VertexGroup::table({"e", "x"}, {{0, 1}, {1, 1}}, 0), ParseError);
  // associativity failure: a Latin square loop of order 5 that is not a group
  std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(VertexGroup::table({"e", "a", "b", "c", "d"}, loop, 0), ParseError);
}

TEST(VertexGroup, TableConjugacyInS3) {
  const auto& s = corpus::s3_clique()->group(0);
  Value r = s.parse("r"), r2 = s.parse("r2"), f = s.parse("f");
  auto c = vertex_conjugate_test(s, r, r2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(s.mul(s.mul(*c, r), s.inverse(*c)), r2);
  EXPECT_FALSE(vertex_conjugate_test(s, r, f).has_value());
  EXPECT_EQ(s.generators().size(), 5u);
}

TEST(Presentation, ParsesAndRoundTrips) {
  auto p = corpus::triangle();
  EXPECT_EQ(p->vertex_count(), 3u);
  EXPECT_TRUE(p->adjacent(0, 2));
  auto again = parse_presentation(presentation_to_json(*p));
  EXPECT_EQ(presentation_to_json(again), presentation_to_json(*p));
}

TEST(Presentation, LinkAndStar) {
  auto p = corpus::path_racg();
  VertexId a = p->vertex("a"), b = p->vertex("b"), c = p->vertex("c");
  EXPECT_EQ(p->link(b), VertexSet::single(a) | VertexSet::single(c));
  EXPECT_EQ(p->link(a), VertexSet::single(b));
  EXPECT_EQ(p->star(a), VertexSet::single(a) | VertexSet::single(b));
  // link of {a, c} is the common neighbour b
  EXPECT_EQ(link_of(*p, VertexSet::single(a) | VertexSet::single(c)), VertexSet::single(b));
}

TEST(Presentation, RejectsMalformedGraphs) {
  EXPECT_THROW(parse_presentation(R"({"vertices":[{"name":"a","group":"Z"}],"edges":[["a","a"]]})"), ParseError);
  EXPECT_THROW(parse_presentation(
                   R"({"vertices":[{"name":"a","group":"Z"},{"name":"b","group":"Z"}],"edges":[["a","b"],["b","a"]]})"),
               ParseError);
  EXPECT_THROW(parse_presentation(R"({"vertices":[{"name":"a","group":"Z"}],"edges":[["a","q"]]})"), ParseError);
  EXPECT_THROW(parse_presentation(R"({"vertices":[{"name":"a","group":"cyclic 0"}],"edges":[]})"), ParseError);
  EXPECT_THROW(parse_presentation("not json"), ParseError);
}

TEST(Words, ParseAndRenderRoundTrip) {
  auto p = corpus::s3_clique();
  Word w = parse_word(*p, "s[fr] t[1]  u[1] s[e]");
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(render_word(*p, w), "s[fr] t[1] u[1] s[e]");
  EXPECT_EQ(render_word(*p, parse_word(*p, "1")), "1");
  EXPECT_TRUE(parse_word(*p, "").empty());
}

TEST(Words, ParseErrors) {
  auto p = corpus::path_racg();
  EXPECT_THROW(parse_word(*p, "q[1]"), ParseError);
  EXPECT_THROW(parse_word(*p, "a[1"), ParseError);
  EXPECT_THROW(parse_word(*p, "a[x]"), ParseError);
}

}  // namespace
}  // namespace gp
