#include <gtest/gtest.h>

#include "wbound/amalgam.hpp"
#include "wbound/rng.hpp"

using namespace wbound;
using namespace wbound::letters;

namespace {
  GElement G(char const* s) {
    return g_from_word(parse_sided_word(s));
  }

  HNormalForm nf(integer p, integer q, char const* w) {
    return HNormalForm{p, q, reduce(parse_letters(w))};
  }

  SidedWord random_sided(Rng& rng, std::size_t max_len) {
    static constexpr Letter gens[] = {a, A, b, B, t, T};
    SidedWord w(rng.below(max_len + 1));
    for (auto& s : w) {
      s = SidedLetter{rng.chance(1, 2) ? Side::one : Side::zero, gens[rng.below(6)]};
    }
    return w;
  }

  SidedWord inv(SidedWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& s : w) {
      s.letter = s.letter.inverse();
    }
    return w;
  }

  SidedWord cat(SidedWord u, SidedWord const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  // The same element of G: relators of either copy, cancelling pairs, and b
  // moved between copies.
  SidedWord perturb(Rng& rng, SidedWord w) {
    static LetterSeq const relators[] = {parse_letters("tbTB"), parse_letters("taTAB")};
    for (int k = 0; k < 3; ++k) {
      Side      side = rng.chance(1, 2) ? Side::one : Side::zero;
      SidedWord piece;
      for (Letter l : relators[rng.below(2)]) {
        piece.push_back(SidedLetter{side, l});
      }
      auto pos = static_cast<std::ptrdiff_t>(rng.below(w.size() + 1));
      w.insert(w.begin() + pos, piece.begin(), piece.end());
    }
    for (auto& s : w) {
      if (s.letter.symbol == Symbol::b && rng.chance(1, 2)) {
        s.side = other(s.side);
      }
    }
    return w;
  }
}  // namespace

TEST(GFromWord, Examples) {
  EXPECT_EQ(G("0:b"), G("1:b"));
  EXPECT_EQ(G("0:b"), (GElement{{}, 1}));
  GElement g = G("0:a 1:a");
  EXPECT_EQ(g.syllables.size(), 2u);
  EXPECT_EQ(g.tail, 0);
  EXPECT_EQ(G("0:taTA"), (GElement{{}, 1}));
  EXPECT_TRUE(G("").is_identity());
  EXPECT_THROW(parse_sided_word("2:a"), std::invalid_argument);
  EXPECT_THROW(parse_sided_word("0a"), std::invalid_argument);
  EXPECT_THROW(parse_sided_word("0:l"), std::invalid_argument);
  EXPECT_EQ(G("1:x"), G("1:ABt"));
}

TEST(RightMulFactor, Examples) {
  GElement g = G("0:a 1:tA");
  GElement h = g;
  right_mul_factor(h, Side::one, h_identity());
  EXPECT_EQ(h, g);
  GElement b3 = g_b_power(3);
  right_mul_factor(b3, Side::one, nf(0, 0, "a"));
  EXPECT_EQ(b3, (GElement{{Syllable{Side::one, nf(0, 3, "a")}}, 0}));
  EXPECT_EQ(b3, G("1:bbba"));
  EXPECT_TRUE(g_mul(g, g_inv(g)).is_identity());
}

TEST(GElement, NormalFormIsValidAndUnique) {
  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    SidedWord w = random_sided(rng, 24);
    GElement  g = g_from_word(w);
    ASSERT_TRUE(is_valid(g)) << to_string(w);
    EXPECT_EQ(g_from_word(perturb(rng, w)), g) << to_string(w);
  }
}

TEST(GElement, GroupLaws) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    SidedWord u = random_sided(rng, 16);
    SidedWord v = random_sided(rng, 16);
    SidedWord z = random_sided(rng, 16);
    GElement  gu = g_from_word(u), gv = g_from_word(v), gz = g_from_word(z);
    EXPECT_EQ(g_mul(gu, gv), g_from_word(cat(u, v)));
    EXPECT_EQ(g_mul(g_mul(gu, gv), gz), g_mul(gu, g_mul(gv, gz)));
    EXPECT_EQ(g_inv(gu), g_from_word(inv(u)));
    EXPECT_TRUE(g_mul(gu, g_inv(gu)).is_identity());
    EXPECT_EQ(g_mul(gu, g_identity()), gu);
  }
}

TEST(GElement, AlternatingWordsAreNontrivial) {
  // a product of elements outside <b> from alternating copies is never 1
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    SidedWord w;
    std::size_t n    = 1 + rng.below(6);
    Side        side = rng.chance(1, 2) ? Side::one : Side::zero;
    for (std::size_t k = 0; k < n; ++k) {
      w.push_back(SidedLetter{side, rng.chance(1, 2) ? a : t});
      side = other(side);
    }
    EXPECT_EQ(g_from_word(w).syllables.size(), n);
  }
}

TEST(GInverse, Examples) {
  EXPECT_TRUE(g_inv(g_identity()).is_identity());
  EXPECT_EQ(g_inv(g_b_power(4)), g_b_power(-4));
}

TEST(Spell, Examples) {
  EXPECT_TRUE(spell(g_identity()).empty());
  EXPECT_EQ(to_string(spell(g_b_power(3))), "0:b 0:b 0:b");
  Rng rng(24);
  for (int i = 0; i < 10000; ++i) {
    GElement g = g_from_word(random_sided(rng, 20));
    ASSERT_EQ(g_from_word(spell(g)), g);
    ASSERT_EQ(g_from_word(parse_sided_word(to_string(spell(g)))), g);
  }
}

TEST(TreeVertex, Examples) {
  EXPECT_EQ(tree_vertex(g_identity(), Side::zero), tree_vertex(g_b_power(5), Side::zero));
  GElement a0 = G("0:a");
  EXPECT_EQ(tree_vertex(a0, Side::zero), (TreeVertexId{Side::zero, {}}));
  EXPECT_EQ(tree_vertex(a0, Side::one).prefix.size(), 1u);
  EXPECT_NE(tree_vertex(a0, Side::one), tree_vertex(g_identity(), Side::one));
}

TEST(TreeVertex, ConstantOnCosets) {
  Rng rng(25);
  for (int i = 0; i < 1000; ++i) {
    GElement g    = g_from_word(random_sided(rng, 16));
    Side     side = rng.chance(1, 2) ? Side::one : Side::zero;
    SidedWord h   = random_sided(rng, 6);
    for (auto& s : h) {
      s.side = side;
    }
    EXPECT_EQ(tree_vertex(g_mul(g, g_from_word(h)), side), tree_vertex(g, side));
  }
}

TEST(TreeEdge, Examples) {
  EXPECT_EQ(tree_edge(g_identity()).id, TreeEdgeId{});
  EXPECT_EQ(tree_edge(g_identity()).index, 0);
  EXPECT_EQ(tree_edge(g_b_power(7)).id, TreeEdgeId{});
  EXPECT_EQ(tree_edge(g_b_power(7)).index, 7);
  TreeEdgeCoord t0 = tree_edge(G("0:t"));
  EXPECT_NE(t0.id, TreeEdgeId{});
  EXPECT_EQ(t0.index, 0);
  EXPECT_EQ(t0.id.syllables.size(), 1u);
}

TEST(TreeEdge, IncidentToBothVertices) {
  Rng rng(26);
  for (int i = 0; i < 1000; ++i) {
    GElement      g = g_from_word(random_sided(rng, 16));
    TreeEdgeCoord e = tree_edge(g);
    GElement      base = element_of(e.id);
    EXPECT_EQ(g_mul(base, g_b_power(e.index)), g);
    EXPECT_EQ(tree_vertex(base, Side::zero), tree_vertex(g, Side::zero));
    EXPECT_EQ(tree_vertex(base, Side::one), tree_vertex(g, Side::one));
  }
}

TEST(LocalBLine, LastSyllableOnThatSide) {
  TreeEdgeId e = tree_edge(G("0:t 1:a")).id;
  EXPECT_EQ(local_b_line(e, Side::one), nf(0, 0, "a"));
  EXPECT_EQ(local_b_line(e, Side::zero), h_identity());
  EXPECT_EQ(local_b_line(TreeEdgeId{}, Side::zero), h_identity());
}
