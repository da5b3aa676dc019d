#include <gtest/gtest.h>

#include "wbound/coloring.hpp"

using namespace wbound;

namespace {
  HNormalForm N(char const* s) {
    return h_normalize(parse_letters(s));
  }

  // Root H_0 with edges g<b> for the given side-0 coset reps (identity first).
  Subtree star(std::vector<HNormalForm> const& reps) {
    Subtree t;
    t.vertices.push_back(SubtreeVertex{TreeVertexId{Side::zero, {}}, {}, 0});
    for (auto const& r : reps) {
      GElement g;
      if (!r.is_identity()) {
        g.syllables.push_back(Syllable{Side::zero, r});
      }
      TreeEdgeId  id{g.syllables};
      std::size_t lower = t.vertices.size();
      t.vertices.push_back(
          SubtreeVertex{tree_vertex(g, Side::one), t.edges.size(), 1});
      t.edges.push_back(SubtreeEdge{g, 0, lower, local_b_line(id, Side::zero),
                                    local_b_line(id, Side::one)});
    }
    return t;
  }
}  // namespace

TEST(Coloring, SingleEdge) {
  Subtree      t = star({h_identity()});
  TreeColoring c = tree_coloring(t);
  EXPECT_EQ(c.color_count, 1u);
  EXPECT_FALSE(c.vertex_color[0].has_value());
  EXPECT_EQ(c.vertex_color[1], c.edge_color[0]);
}

TEST(Coloring, ParallelLinesShareAColor) {
  // <b> and t^2<b> are parallel in H_0; a<b> is not
  Subtree      t = star({h_identity(), h_t_power(2), N("a")});
  TreeColoring c = tree_coloring(t);
  EXPECT_EQ(c.edge_color[0], c.edge_color[1]);
  EXPECT_NE(c.edge_color[0], c.edge_color[2]);
  ColoringCheck k = check_coloring(t, c);
  EXPECT_EQ(k.endpoint_errors, 0u);
  EXPECT_EQ(k.parallel_errors, 0u);
}

TEST(Coloring, SampledSubtrees) {
  for (std::size_t radius = 1; radius <= 3; ++radius) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Subtree t = sample_subtree(seed * 31 + radius, radius, 6);
      EXPECT_NO_THROW(validate(t));
      ColoringCheck k = check_coloring(t, tree_coloring(t));
      EXPECT_EQ(k.endpoint_errors, 0u);
      EXPECT_EQ(k.parallel_errors, 0u);
      EXPECT_EQ(k.edges_checked, t.edges.size());
    }
  }
}

TEST(Coloring, SamplerShape) {
  Subtree t = sample_subtree(5, 3, 6);
  std::vector<std::size_t>               degree(t.vertices.size(), 0);
  std::vector<std::vector<HNormalForm>>  lines(t.vertices.size());
  for (auto const& e : t.edges) {
    ++degree[e.upper];
    ++degree[e.lower];
    lines[e.upper].push_back(e.line_upper);
    lines[e.lower].push_back(e.line_lower);
  }
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    EXPECT_LE(degree[v], 6u);
    EXPECT_LE(t.vertices[v].depth, 3u);
    if (degree[v] >= 3) {
      bool two_classes = false;
      for (auto const& l : lines[v]) {
        two_classes |= !is_parallel(lines[v][0], l);
      }
      EXPECT_TRUE(two_classes) << "vertex " << v;
    }
  }
  EXPECT_EQ(sample_subtree(5, 3, 6).edges.size(), t.edges.size());
  EXPECT_THROW(sample_subtree(5, 3, 1), std::invalid_argument);
  EXPECT_EQ(sample_subtree(5, 0, 6).vertices.size(), 1u);
}

TEST(Coloring, MalformedSubtrees) {
  Subtree t = star({h_identity(), N("a")});
  Subtree dup = t;
  dup.edges[1] = dup.edges[0];
  EXPECT_THROW(tree_coloring(dup), std::invalid_argument);

  Subtree bad_line = t;
  bad_line.edges[1].line_upper = h_identity();
  EXPECT_THROW(tree_coloring(bad_line), std::invalid_argument);

  Subtree no_root;
  EXPECT_THROW(tree_coloring(no_root), std::invalid_argument);

  Subtree extra = t;
  extra.vertices.push_back(extra.vertices.back());
  EXPECT_THROW(tree_coloring(extra), std::invalid_argument);
}
