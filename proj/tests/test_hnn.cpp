#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wbound/britton.hpp"
#include "wbound/hnn.hpp"
#include "wbound/rng.hpp"

using namespace wbound;
using namespace wbound::letters;

namespace {
  HNormalForm N(char const* s) {
    return h_normalize(parse_letters(s));
  }

  HNormalForm nf(integer p, integer q, char const* w) {
    return HNormalForm{p, q, reduce(parse_letters(w))};
  }

  LetterSeq random_word(Rng& rng, std::size_t max_len) {
    static constexpr Letter gens[] = {a, A, b, B, t, T};
    LetterSeq w(rng.below(max_len + 1));
    for (auto& l : w) {
      l = gens[rng.below(6)];
    }
    return w;
  }

  LetterSeq inv(LetterSeq w) {
    std::reverse(w.begin(), w.end());
    for (auto& l : w) {
      l = l.inverse();
    }
    return w;
  }

  LetterSeq cat(LetterSeq u, LetterSeq const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }
}  // namespace

TEST(Normalize, Examples) {
  EXPECT_EQ(N("taTA"), nf(0, 1, ""));
  EXPECT_EQ(N("at"), nf(1, -1, "a"));
  EXPECT_EQ(N(""), h_identity());
  EXPECT_EQ(N("tbTB"), h_identity());
  EXPECT_EQ(N("taT A"), h_b_power(1));
}

TEST(Normalize, OutputIsValid) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    HNormalForm h = h_normalize(random_word(rng, 40));
    EXPECT_TRUE(h.is_valid()) << to_string(h);
  }
  EXPECT_FALSE((HNormalForm{0, 0, reduce(parse_letters("ba"))}.is_valid()));
  EXPECT_FALSE((HNormalForm{0, 0, reduce(parse_letters("at"))}.is_valid()));
}

TEST(Normalize, AgreesWithMappingTorusModel) {
  Rng rng(12);
  for (int i = 0; i < 3000; ++i) {
    LetterSeq   w = random_word(rng, 30);
    HNormalForm h = h_normalize(w);
    auto [p, q, rest] = oracle::torus_triple(oracle::torus_of(w));
    EXPECT_EQ(h.p, p) << to_string(w);
    EXPECT_EQ(h.q, q) << to_string(w);
    EXPECT_EQ(to_string(h.w), rest) << to_string(w);
  }
}

TEST(Normalize, SpellRoundTrip) {
  Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    HNormalForm h = h_normalize(random_word(rng, 40));
    EXPECT_EQ(h_normalize(spell(h)), h);
  }
}

TEST(Normalize, ExpandsXAndY) {
  // y = b^-1 t and x = a^-1 y, from by = t and ax = y
  EXPECT_EQ(h_normalize(LetterSeq{y}), N("Bt"));
  EXPECT_EQ(h_normalize(LetterSeq{x}), N("ABt"));
  EXPECT_EQ(h_normalize(LetterSeq{a, x}), h_normalize(LetterSeq{y}));
  EXPECT_EQ(h_normalize(LetterSeq{y, b}), N("t"));
  EXPECT_EQ(h_normalize(LetterSeq{x, a}), N("t"));
  EXPECT_THROW(h_normalize(LetterSeq{Letter{Symbol::l, 1}}), std::invalid_argument);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(h_mul(N("b"), N("b")), nf(0, 2, ""));
  HNormalForm g = N("atbTA");
  EXPECT_EQ(h_mul(g, h_identity()), g);
  EXPECT_EQ(h_mul(nf(1, 0, "a"), nf(-1, 0, "")), nf(0, 1, "a"));
}

TEST(Multiply, MatchesNormalizationOfConcatenation) {
  Rng rng(14);
  for (int i = 0; i < 2000; ++i) {
    LetterSeq u = random_word(rng, 25);
    LetterSeq v = random_word(rng, 25);
    EXPECT_EQ(h_mul(h_normalize(u), h_normalize(v)), h_normalize(cat(u, v)));
  }
}

TEST(Multiply, Associative) {
  Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    HNormalForm x = h_normalize(random_word(rng, 15));
    HNormalForm y = h_normalize(random_word(rng, 15));
    HNormalForm z = h_normalize(random_word(rng, 15));
    EXPECT_EQ(h_mul(h_mul(x, y), z), h_mul(x, h_mul(y, z)));
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(h_inv(h_identity()), h_identity());
  EXPECT_EQ(h_inv(nf(0, 1, "")), nf(0, -1, ""));
  EXPECT_EQ(h_inv(nf(1, 0, "a")), N("AT"));
  Rng rng(16);
  for (int i = 0; i < 1000; ++i) {
    HNormalForm h = h_normalize(random_word(rng, 30));
    EXPECT_TRUE(h_mul(h, h_inv(h)).is_identity());
    EXPECT_TRUE(h_mul(h_inv(h), h).is_identity());
  }
}

TEST(Britton, Examples) {
  EXPECT_TRUE(britton_is_identity(parse_letters("tbTB")));
  EXPECT_FALSE(britton_is_identity(parse_letters("a")));
  EXPECT_TRUE(britton_is_identity(parse_letters("taTAB")));
  EXPECT_TRUE(britton_is_identity(parse_letters("")));
  EXPECT_FALSE(britton_is_identity(parse_letters("tT t")));
  EXPECT_TRUE(britton_is_identity(LetterSeq{a, x, Y}));
}

TEST(Britton, AgreesWithNormalFormExhaustively) {
  static constexpr Letter gens[] = {a, A, b, B, t, T};
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::size_t> d(n, 0);
    while (true) {
      LetterSeq w;
      for (auto i : d) {
        w.push_back(gens[i]);
      }
      HNormalForm h = h_normalize(w);
      ASSERT_EQ(britton_is_identity(w), h.is_identity()) << to_string(w);
      ASSERT_TRUE(britton_is_identity(cat(w, inv(spell(h))))) << to_string(w);
      std::size_t k = 0;
      while (k < n && ++d[k] == 6) {
        d[k++] = 0;
      }
      if (k == n) {
        break;
      }
    }
  }
}

TEST(Britton, ConjugatesOfRelatorsAreTrivial) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    LetterSeq c = random_word(rng, 20);
    LetterSeq r = rng.chance(1, 2) ? parse_letters("tbTB") : parse_letters("taTAB");
    EXPECT_TRUE(britton_is_identity(cat(cat(c, r), inv(c))));
  }
}

TEST(Pi, Examples) {
  EXPECT_EQ(pi(N("bbbbb")), 5);
  EXPECT_EQ(pi(N("ttta")), 0);
  EXPECT_EQ(pi(N("at")), -1);
  HNormalForm h = N("tabT");
  EXPECT_EQ(pi_u(h_identity(), h), pi(h));
  EXPECT_EQ(pi_u(h, h), 0);
  EXPECT_EQ(pi_u(N("bb"), N("bbbbb")), 3);
}

TEST(CosetRep, Examples) {
  EXPECT_EQ(coset_rep(N("bbbbbbb")), (CosetRep{h_identity(), 7}));
  EXPECT_EQ(coset_rep(nf(0, 1, "a")), (CosetRep{nf(0, 1, "a"), 0}));
  CosetRep r = coset_rep(nf(2, 0, "abbb"));
  EXPECT_EQ(r, (CosetRep{nf(2, 0, "a"), 3}));
  EXPECT_EQ(h_mul(r.rep, h_b_power(r.offset)), nf(2, 0, "abbb"));
}

TEST(CosetRep, SameCosetSameRep) {
  Rng rng(18);
  for (int i = 0; i < 1000; ++i) {
    HNormalForm h = h_normalize(random_word(rng, 30));
    integer     k = rng.between(-10, 10);
    CosetRep    r = coset_rep(h);
    EXPECT_TRUE(is_transversal_rep(r.rep));
    EXPECT_EQ(coset_rep(h_mul(h, h_b_power(k))).rep, r.rep);
    EXPECT_EQ(coset_rep(h_mul(h, h_b_power(k))).offset, r.offset + k);
    EXPECT_EQ(h_mul(r.rep, h_b_power(r.offset)), h);
  }
}

TEST(CosetShape, Examples) {
  EXPECT_EQ(coset_shape(h_identity()), (CosetShape{CosetKind::translation, 0}));
  EXPECT_EQ(coset_shape(N("a")), (CosetShape{CosetKind::constant, 0}));
  EXPECT_EQ(coset_shape(N("tt")), (CosetShape{CosetKind::translation, 0}));
  for (integer n = -5; n <= 5; ++n) {
    EXPECT_EQ(pi(h_mul(N("tt"), h_b_power(n))), n);
  }
}

TEST(Parallel, Examples) {
  EXPECT_TRUE(is_parallel(h_identity(), N("tttttB")));
  HNormalForm u = N("atBa");
  EXPECT_TRUE(is_parallel(u, h_mul(u, h_b_power(3))));
  EXPECT_FALSE(is_parallel(h_identity(), N("a")));
}

TEST(CommutatorPower, Examples) {
  EXPECT_EQ(commutator_power(1).second, nf(0, 1, ""));
  EXPECT_EQ(commutator_power(2).second, nf(0, 2, ""));
  EXPECT_EQ(commutator_power(100).second, nf(0, 100, ""));
  EXPECT_EQ(h_normalize(commutator_power(7).first), h_b_power(7));
  EXPECT_THROW(commutator_power(0), std::invalid_argument);
}

TEST(CayleyBall, SmallRadii) {
  auto b0 = cayley_ball(0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0.at(h_identity()), 0u);
  auto b1 = cayley_ball(1);
  EXPECT_EQ(b1.size(), 7u);
  EXPECT_EQ(b1.at(h_b_power(1)), 1u);
  EXPECT_THROW(cayley_ball(max_ball_radius + 1), std::length_error);
}

TEST(CayleyBall, DistancesAreConsistent) {
  auto ball = cayley_ball(4);
  for (auto const& [h, d] : ball) {
    // every neighbour of an element at distance d < 4 is within d + 1, and
    // some neighbour (for d > 0) sits at d - 1
    bool has_parent = d == 0;
    for (Letter s : {a, A, b, B, t, T}) {
      HNormalForm g = h;
      right_mul_letter(g, s);
      auto it = ball.find(g);
      if (d < 4) {
        ASSERT_NE(it, ball.end());
        EXPECT_LE(it->second, d + 1);
      }
      if (it != ball.end() && it->second + 1 == d) {
        has_parent = true;
      }
    }
    EXPECT_TRUE(has_parent) << to_string(h);
  }
}
