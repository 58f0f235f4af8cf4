#include "ohtsuki/diagram_io.hpp"
#include "ohtsuki/diagram_ops.hpp"
#include "ohtsuki/skein.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ohtsuki;

namespace {

const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kBorromean = "braid:3:1,-2,1,-2,1,-2";

bool all_zero(const std::vector<std::vector<int>>& m) {
  for (const auto& row : m)
    for (int v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

TEST(ParsePd, Examples) {
  EXPECT_EQ(parse_pd("").component_count(), 0);
  EXPECT_TRUE(parse_pd("").is_empty());
  const LinkDiagram t = parse_pd(kTrefoilPd);
  EXPECT_EQ(t.component_count(), 1);
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_THROW(parse_pd("X(1,2,3,4)"), ParseError);
}

TEST(ParsePd, RejectsMalformedText) {
  EXPECT_THROW(parse_pd("X(1,2,3"), ParseError);
  EXPECT_THROW(parse_pd("Y(1,2,3,4)"), ParseError);
  EXPECT_THROW(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(1,2,3,4)"), ParseError);
}

TEST(ParsePd, RoundTripsThroughToPd) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, 3, 6));
    if (d.crossing_count() == 0) continue;
    const LinkDiagram back = parse_pd(to_pd(d));
    EXPECT_EQ(back.component_count(), d.component_count());
    EXPECT_EQ(back.crossing_count(), d.crossing_count());
    EXPECT_EQ(back.writhe(), d.writhe());
    EXPECT_EQ(jones(back), jones(d));
  }
}

TEST(ParsePd, EveryEdgeUsedTwice) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, 4, 8));
    std::vector<int> uses(d.edge_count(), 0);
    for (const auto& c : d.crossings())
      for (int e : c.edges) ++uses[e];
    for (int u : uses) EXPECT_EQ(u, 2);
  }
}

TEST(BraidClosure, Examples) {
  const LinkDiagram o = parse_diagram("braid:1:");
  EXPECT_EQ(o.component_count(), 1);
  EXPECT_EQ(o.crossing_count(), 0);
  const LinkDiagram t = parse_diagram("braid:2:1,1,1");
  EXPECT_EQ(t.component_count(), 1);
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(parse_diagram("braid:2:1,1").component_count(), 2);
  EXPECT_THROW(parse_diagram("braid:2:2"), ParseError);
  EXPECT_THROW(parse_diagram("braid:2:0"), ParseError);
  EXPECT_THROW(parse_diagram("dt:4 6 2"), ParseError);
}

TEST(BraidClosure, PdAndBraidTrefoilsAgree) {
  EXPECT_EQ(jones(parse_pd(kTrefoilPd)), jones(parse_diagram("braid:2:1,1,1")));
}

TEST(LinkingMatrix, Examples) {
  EXPECT_TRUE(all_zero(linking_matrix(LinkDiagram::unlink(2))));
  EXPECT_EQ(linking_matrix(LinkDiagram::unlink(2)).size(), 2u);
  const auto hopf = linking_matrix(parse_diagram("braid:2:1,1"));
  EXPECT_EQ(std::abs(hopf[0][1]), 1);
  EXPECT_EQ(hopf[0][1], hopf[1][0]);
  const auto knot = linking_matrix(parse_diagram("braid:3:1,-2,1,-2"));
  ASSERT_EQ(knot.size(), 1u);
  EXPECT_EQ(knot[0][0], 0);
}

TEST(IsAsl, Examples) {
  EXPECT_TRUE(is_asl(parse_diagram("braid:2:1,1,1")));
  EXPECT_FALSE(is_asl(parse_diagram("braid:2:1,1")));
  const LinkDiagram b = parse_diagram(kBorromean);
  EXPECT_EQ(b.component_count(), 3);
  EXPECT_TRUE(is_asl(b));
}

TEST(SelfWrithe, SignConvention) {
  EXPECT_EQ(self_writhe(parse_diagram("braid:1:"), 0), 0);
  // braid letter +k is a negative crossing in this PD sign convention
  EXPECT_EQ(self_writhe(parse_diagram("braid:2:1,1,1"), 0), -3);
  EXPECT_EQ(self_writhe(parse_diagram("braid:2:-1,-1,-1"), 0), 3);
  EXPECT_EQ(self_writhe(mirror(parse_diagram("braid:2:1,1,1")), 0), 3);
  EXPECT_THROW(self_writhe(parse_diagram("braid:2:1,1,1"), 1), std::out_of_range);
}

TEST(Sublink, Examples) {
  const LinkDiagram hopf = parse_diagram("braid:2:1,1");
  EXPECT_EQ(sublink(hopf, {true, true}), hopf);
  EXPECT_TRUE(sublink(hopf, {false, false}).is_empty());
  const LinkDiagram one = sublink(hopf, {true, false});
  EXPECT_EQ(one.component_count(), 1);
  EXPECT_EQ(one.crossing_count(), 0);
}

TEST(Sublink, BorromeanPairsAreUnlinks) {
  const LinkDiagram b = parse_diagram(kBorromean);
  for (int drop = 0; drop < 3; ++drop) {
    std::vector<bool> keep(3, true);
    keep[drop] = false;
    const LinkDiagram pair = sublink(b, keep);
    EXPECT_EQ(pair.component_count(), 2);
    EXPECT_EQ(jones(pair), jones(LinkDiagram::unlink(2)));
  }
}

TEST(Cable, Examples) {
  const LinkDiagram t = parse_diagram("braid:2:1,1,1");
  EXPECT_EQ(cable(t, {1}), t);
  EXPECT_TRUE(cable(t, {0}).is_empty());
  const LinkDiagram t2 = cable(t, {2});
  EXPECT_EQ(t2.component_count(), 2);
  EXPECT_TRUE(all_zero(linking_matrix(t2)));
}

TEST(Cable, ComponentCountAndAsl) {
  std::mt19937 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 12; ++trial) {
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, 3, 5));
    if (!is_asl(d) || d.component_count() > 2) continue;
    ++checked;
    for (const auto& t : enumerate_tuples(d.component_count(), 2)) {
      const LinkDiagram c = cable(d, t);
      EXPECT_EQ(c.component_count(), tuple_size(t));
      EXPECT_TRUE(is_asl(c));
    }
  }
  EXPECT_GE(checked, 5);
}

TEST(Cable, SublinkOfCableIsSmallerCable) {
  for (const char* text : {"braid:2:1,1,1", "braid:3:1,-2,1,-2"}) {
    const LinkDiagram k = parse_diagram(text);
    const LinkDiagram k3 = cable(k, {3});
    for (int drop = 0; drop < 3; ++drop) {
      std::vector<bool> keep(3, true);
      keep[drop] = false;
      EXPECT_EQ(jones(sublink(k3, keep)), jones(cable(k, {2}))) << text << " drop " << drop;
    }
  }
  const LinkDiagram b = parse_diagram(kBorromean);
  const LinkDiagram b211 = cable(b, {2, 1, 1});
  EXPECT_EQ(jones(sublink(b211, {true, false, true, true})), jones(cable(b, {1, 1, 1})));
}

TEST(EnumerateTuples, Examples) {
  EXPECT_EQ(enumerate_tuples(1, 2), (std::vector<CableTuple>{{0}, {1}, {2}}));
  EXPECT_EQ(enumerate_tuples(2, 1).size(), 4u);
  EXPECT_EQ(enumerate_tuples(2, 3).size(), 16u);
}

TEST(TupleStats, Examples) {
  const TupleStats a = tuple_stats({2, 0, 1}, {1, -1, 1});
  EXPECT_EQ(a.s1, 1);
  EXPECT_EQ(a.s2, 1);
  EXPECT_EQ(a.s3, 0);
  EXPECT_EQ(a.framing_product, 1);
  EXPECT_EQ(a.twos_framing_sum, 1);
  const TupleStats z = tuple_stats({0, 0}, {1, -1});
  EXPECT_EQ(z.s1 + z.s2 + z.s3, 0);
  EXPECT_EQ(z.framing_product, 1);
  const TupleStats c = tuple_stats({3}, {-1});
  EXPECT_EQ(c.s3, 1);
  EXPECT_EQ(c.framing_product, -1);
}

TEST(Mirror, Examples) {
  const LinkDiagram o = parse_diagram("braid:1:");
  EXPECT_EQ(mirror(o), o);
  EXPECT_EQ(jones(mirror(parse_diagram("braid:2:1,1,1"))), jones(parse_diagram("braid:2:-1,-1,-1")));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const LinkDiagram d = braid_closure(test_support::random_braid(rng, 3, 5));
    EXPECT_EQ(mirror(mirror(d)), d);
  }
}
