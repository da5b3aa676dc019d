#ifndef WBOUND_HARNESS_HPP_
#define WBOUND_HARNESS_HPP_

#include <algorithm>  // for find, max
#include <chrono>     // for steady_clock
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <limits>     // for numeric_limits
#include <map>        // for map
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <vector>     // for vector

#include "amalgam.hpp"
#include "britton.hpp"
#include "circuit.hpp"
#include "coloring.hpp"
#include "hnn.hpp"
#include "io.hpp"
#include "links.hpp"
#include "rng.hpp"
#include "word.hpp"

// Seeded property checks.  Each check is a pure function of its parameters,
// so a report is reproducible byte for byte from (check, seed, sizes).

namespace wbound {

  struct CheckParams {
    std::uint64_t seed           = 1;
    std::size_t   cases          = 1000;
    std::size_t   max_len        = 64;
    std::size_t   exhaustive_len = 6;
    std::size_t   radius         = 3;
    std::size_t   witness_limit  = 5;
    Angle         cylinder_total    = cylinder_path_total;
    std::size_t   cylinder_segments = cylinder_path_segments;
  };

  struct CheckResult {
    std::string name;
    std::string property;
    std::size_t cases_run  = 0;
    std::size_t violations = 0;
    json        witnesses  = json::array();
    json        details    = json::object();
    double      wall_ms    = 0;

    void violation(CheckParams const& p, json witness) {
      ++violations;
      if (witnesses.size() < p.witness_limit) {
        witnesses.push_back(std::move(witness));
      }
    }

    json to_json(bool timing) const {
      json j{{"name", name},
             {"property", property},
             {"cases_run", cases_run},
             {"violations", violations},
             {"witnesses", witnesses},
             {"details", details}};
      if (timing) {
        j["wall_time_ms"] = wall_ms;
      }
      return j;
    }
  };

  struct Report {
    std::uint64_t            seed = 0;
    std::vector<CheckResult> checks;

    std::size_t total_violations() const {
      std::size_t n = 0;
      for (auto const& c : checks) {
        n += c.violations;
      }
      return n;
    }

    json to_json(bool timing = false) const {
      json cs = json::array();
      for (auto const& c : checks) {
        cs.push_back(c.to_json(timing));
      }
      return json{{"seed", seed},
                  {"checks", std::move(cs)},
                  {"violations", total_violations()},
                  {"ok", total_violations() == 0}};
    }
  };

  namespace detail {
    // stream ids for mix_seed, one per check
    enum : std::uint64_t {
      stream_word_problem = 1,
      stream_lipschitz,
      stream_cosets,
      stream_basing,
      stream_circuits,
      stream_coloring,
      stream_additivity,
    };

    inline LetterSeq random_word(Rng& rng, std::size_t max_len) {
      using namespace letters;
      static constexpr Letter gens[] = {a, A, b, B, t, T};
      std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
      LetterSeq   w;
      w.reserve(len);
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(gens[rng.below(6)]);
      }
      return w;
    }

    inline LetterSeq inverse_word(LetterSeq const& w) {
      LetterSeq r;
      r.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r.push_back(it->inverse());
      }
      return r;
    }

    inline LetterSeq join(LetterSeq u, LetterSeq const& v) {
      u.insert(u.end(), v.begin(), v.end());
      return u;
    }

    // A word equal to w in H: random insertions of (conjugated) relators and
    // cancelling pairs.
    inline LetterSeq perturb(Rng& rng, LetterSeq w) {
      using namespace letters;
      static LetterSeq const relators[] = {{t, b, T, B}, {t, a, T, A, B}};
      static constexpr Letter gens[] = {a, A, b, B, t, T};
      std::size_t inserts = 1 + static_cast<std::size_t>(rng.below(4));
      for (std::size_t k = 0; k < inserts; ++k) {
        LetterSeq piece;
        switch (rng.below(3)) {
          case 0: {
            Letter g = gens[rng.below(6)];
            piece    = {g, g.inverse()};
            break;
          }
          default: {
            LetterSeq r = relators[rng.below(2)];
            if (rng.chance(1, 2)) {
              r = inverse_word(r);
            }
            if (rng.chance(1, 2)) {
              Letter g = gens[rng.below(6)];
              piece.push_back(g);
              piece.insert(piece.end(), r.begin(), r.end());
              piece.push_back(g.inverse());
            } else {
              piece = std::move(r);
            }
          }
        }
        auto pos = static_cast<std::ptrdiff_t>(rng.below(w.size() + 1));
        w.insert(w.begin() + pos, piece.begin(), piece.end());
      }
      return w;
    }

    template <typename F>
    CheckResult timed(std::string name, std::string property, F&& body) {
      CheckResult r;
      r.name     = std::move(name);
      r.property = std::move(property);
      auto start = std::chrono::steady_clock::now();
      body(r);
      r.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
      return r;
    }

    // Random circuit of length at most max_len.
    inline Circuit bounded_circuit(std::uint64_t seed, std::size_t max_len) {
      Rng         rng(seed);
      std::size_t target
          = 2 + static_cast<std::size_t>(rng.below(std::max<std::size_t>(max_len / 2, 3) - 1));
      for (std::uint64_t attempt = 0;; ++attempt) {
        Circuit c = random_circuit(mix_seed(seed, attempt), target);
        if (c.len() <= max_len || target == 2) {
          return c;
        }
        target = std::max<std::size_t>(2, target / 2);
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Word problem in H
  ////////////////////////////////////////////////////////////////////////

  // Every word of length <= exhaustive_len: normal form trivial iff Britton
  // says trivial, and the normal form spells the same element.  Then `cases`
  // random pairs (u, v) of length <= max_len, half of them equal by
  // construction: normal forms agree iff u v^-1 is trivial by Britton.
  inline CheckResult check_word_problem(CheckParams const& p) {
    return detail::timed(
        "word-problem", "normal-form-uniqueness", [&](CheckResult& r) {
          using namespace letters;
          static constexpr Letter gens[] = {a, A, b, B, t, T};
          std::size_t exhaustive = 0;
          for (std::size_t n = 0; n <= p.exhaustive_len; ++n) {
            std::vector<std::size_t> digits(n, 0);
            LetterSeq                u(n, a);
            while (true) {
              for (std::size_t i = 0; i < n; ++i) {
                u[i] = gens[digits[i]];
              }
              HNormalForm h        = h_normalize(u);
              bool        trivial  = britton_is_identity(u);
              bool        sound    = britton_is_identity(
                  detail::join(u, detail::inverse_word(spell(h))));
              if (trivial != h.is_identity() || !sound) {
                r.violation(p, json{{"u", to_string(u)},
                                    {"normal_form", to_json(h)},
                                    {"britton_trivial", trivial}});
              }
              ++exhaustive;
              std::size_t k = 0;
              while (k < n && ++digits[k] == 6) {
                digits[k++] = 0;
              }
              if (k == n) {
                break;
              }
            }
          }
          Rng         rng(mix_seed(p.seed, detail::stream_word_problem));
          std::size_t equal_pairs = 0;
          for (std::size_t i = 0; i < p.cases; ++i) {
            LetterSeq u = detail::random_word(rng, p.max_len);
            LetterSeq v = rng.chance(1, 2) ? detail::perturb(rng, u)
                                           : detail::random_word(rng, p.max_len);
            bool same_nf = h_normalize(u) == h_normalize(v);
            bool same_br
                = britton_is_identity(detail::join(u, detail::inverse_word(v)));
            equal_pairs += same_br;
            if (same_nf != same_br) {
              r.violation(p, json{{"u", to_string(u)},
                                  {"v", to_string(v)},
                                  {"normal_forms_equal", same_nf},
                                  {"britton_equal", same_br}});
            }
          }
          r.cases_run  = exhaustive + p.cases;
          r.details    = json{{"exhaustive_words", exhaustive},
                              {"exhaustive_len", p.exhaustive_len},
                              {"random_pairs", p.cases},
                              {"random_equal_pairs", equal_pairs}};
        });
  }

  // [t^n, a] = b^n for 1 <= n <= cases.
  inline CheckResult check_commutator_power(CheckParams const& p) {
    return detail::timed(
        "commutator-power", "b^n-is-a-commutator", [&](CheckResult& r) {
          for (std::size_t n = 1; n <= p.cases; ++n) {
            auto [word, h] = commutator_power(static_cast<integer>(n));
            if (!(h == h_b_power(static_cast<integer>(n)))) {
              r.violation(p, json{{"n", n}, {"normal_form", to_json(h)}});
            }
          }
          r.cases_run = p.cases;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // The retraction pi
  ////////////////////////////////////////////////////////////////////////

  // |pi(h) - pi(h s)| <= 1 for `cases` random h and every generator s; the
  // same for pi_u with cases/100 random u, each against 100 random h.
  inline CheckResult check_pi_lipschitz(CheckParams const& p) {
    return detail::timed("pi-lipschitz", "pi-is-1-lipschitz", [&](CheckResult& r) {
      using namespace letters;
      static constexpr Letter gens[] = {a, A, b, B, t, T};
      Rng rng(mix_seed(p.seed, detail::stream_lipschitz));
      for (std::size_t i = 0; i < p.cases; ++i) {
        LetterSeq   word = detail::random_word(rng, p.max_len);
        HNormalForm h    = h_normalize(word);
        for (Letter s : gens) {
          HNormalForm g = h;
          right_mul_letter(g, s);
          if (checked_abs(pi(g) - pi(h)) > 1) {
            r.violation(p, json{{"h", to_string(word)},
                                {"s", std::string(1, to_char(s))}});
          }
        }
      }
      std::size_t const us = std::max<std::size_t>(1, p.cases / 100);
      for (std::size_t i = 0; i < us; ++i) {
        LetterSeq   uw  = detail::random_word(rng, p.max_len);
        HNormalForm u   = h_normalize(uw);
        HNormalForm uin = h_inv(u);
        for (std::size_t k = 0; k < 100; ++k) {
          LetterSeq   word = detail::random_word(rng, p.max_len);
          HNormalForm h    = h_normalize(word);
          integer     base = pi(h_mul(uin, h));
          for (Letter s : gens) {
            HNormalForm g = h;
            right_mul_letter(g, s);
            if (checked_abs(pi(h_mul(uin, g)) - base) > 1) {
              r.violation(p, json{{"u", to_string(uw)},
                                  {"h", to_string(word)},
                                  {"s", std::string(1, to_char(s))}});
            }
          }
        }
      }
      r.cases_run = 6 * (p.cases + 100 * us);
      r.details   = json{{"normal_forms", p.cases}, {"translates", us}};
    });
  }

  // Coset dichotomy and parallelism: for random u, u' and n in [-50, 50]
  //  - pi(u b^n) follows coset_shape(u);
  //  - pi_u on u'<b> is a translation or constant, and a translation exactly
  //    when is_parallel(u, u');
  //  - is_parallel is reflexive, symmetric and invariant under right
  //    multiplication by powers of b.
  inline CheckResult check_pi_cosets(CheckParams const& p) {
    return detail::timed("pi-cosets", "coset-dichotomy-and-parallelism", [&](CheckResult& r) {
      Rng         rng(mix_seed(p.seed, detail::stream_cosets));
      std::size_t parallel_pairs = 0;
      for (std::size_t i = 0; i < p.cases; ++i) {
        LetterSeq   uw = detail::random_word(rng, p.max_len);
        HNormalForm u  = h_normalize(uw);
        LetterSeq   vw;
        if (rng.chance(1, 2)) {
          vw = uw;
          for (integer k = rng.between(-4, 4); k != 0; k += (k > 0 ? -1 : 1)) {
            vw.push_back(k > 0 ? letters::t : letters::T);
          }
          for (integer k = rng.between(-4, 4); k != 0; k += (k > 0 ? -1 : 1)) {
            vw.push_back(k > 0 ? letters::b : letters::B);
          }
        } else {
          vw = detail::random_word(rng, p.max_len);
        }
        HNormalForm v = h_normalize(vw);
        auto witness  = [&](std::string what) {
          return json{{"u", to_string(uw)}, {"v", to_string(vw)}, {"failed", what}};
        };

        CosetShape shape = coset_shape(u);
        HNormalForm uin  = h_inv(u);
        bool        translation = true, constant = true;
        std::optional<integer> prev;
        for (integer n = -50; n <= 50; ++n) {
          HNormalForm ubn = h_mul(u, h_b_power(n));
          if (pi(ubn) != shape.evaluate(n)) {
            r.violation(p, witness("coset shape at n=" + std::to_string(n)));
          }
          integer val = pi(h_mul(uin, h_mul(v, h_b_power(n))));
          if (prev) {
            translation &= (val - *prev == 1);
            constant &= (val == *prev);
          }
          prev = val;
        }
        bool par = is_parallel(u, v);
        parallel_pairs += par;
        if (translation == constant) {
          r.violation(p, witness("pi_u on u'<b> is neither translation nor constant"));
        }
        if (translation != par) {
          r.violation(p, witness("translation != is_parallel"));
        }
        if (par != is_parallel(v, u)) {
          r.violation(p, witness("symmetry"));
        }
        if (!is_parallel(u, u) || !is_parallel(v, v)) {
          r.violation(p, witness("reflexivity"));
        }
        integer k = rng.between(-20, 20);
        if (is_parallel(h_mul(u, h_b_power(k)), v) != par
            || is_parallel(u, h_mul(v, h_b_power(k))) != par) {
          r.violation(p, witness("b-invariance"));
        }
      }
      r.cases_run = p.cases;
      r.details   = json{{"parallel_pairs", parallel_pairs}};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Area of circuits
  ////////////////////////////////////////////////////////////////////////

  // A circuit at (1, 0) crossing the root strip at l_1, l_3, l_8, l_4 with
  // signs +, -, +, -.
  inline Circuit four_crossing_circuit() {
    using namespace letters;
    Circuit c;
    auto    run = [&c](Letter l, int n) {
      for (int i = 0; i < n; ++i) {
        c.steps.push_back(Step::factor(l));
      }
    };
    run(b, 1);
    c.steps.push_back(Step::toward1());
    run(b, 2);
    c.steps.push_back(Step::toward0());
    run(b, 5);
    c.steps.push_back(Step::toward1());
    run(B, 4);
    c.steps.push_back(Step::toward0());
    run(B, 4);
    return c;
  }

  inline CheckResult check_area_definition(CheckParams const& p) {
    return detail::timed("area-definition", "strip-area-example", [&](CheckResult& r) {
      Circuit    c = four_crossing_circuit();
      WalkResult w = walk(c);
      StripMap   s = area_per_strip(w);
      std::vector<std::pair<int, integer>> seen;
      for (auto const& x : w.crossings) {
        seen.emplace_back(x.sign, x.index);
      }
      bool ok = s.size() == 1 && s.begin()->second == 2 && area(w) == 2
                && seen
                       == std::vector<std::pair<int, integer>>{
                           {1, 1}, {-1, 3}, {1, 8}, {-1, 4}};
      if (!ok) {
        r.violation(p, json{{"circuit", to_json(c)}, {"area", area(w)}});
      }
      r.cases_run = 1;
      r.details   = json{{"area", area(w)}, {"len", c.len()}};
    });
  }

  // Area is unchanged when each strip is rebased by a random offset, and every
  // strip is crossed as often positively as negatively.
  inline CheckResult check_area_basing(CheckParams const& p) {
    return detail::timed("area-basing", "area-independent-of-strip-basing", [&](CheckResult& r) {
      Rng rng(mix_seed(p.seed, detail::stream_basing));
      for (std::size_t i = 0; i < p.cases; ++i) {
        Circuit    c = detail::bounded_circuit(rng.next(), p.max_len);
        WalkResult w = walk(c);
        integer    a = area(w);
        for (auto const& [strip, counts] : crossing_counts(w)) {
          if (counts.first != counts.second) {
            r.violation(p, json{{"circuit", to_json(c)}, {"failed", "balance"}});
          }
        }
        StripMap strips = area_per_strip(w);
        for (int k = 0; k < 100; ++k) {
          StripMap offsets;
          for (auto const& [strip, _] : strips) {
            offsets[strip] = rng.between(-1000, 1000);
          }
          if (rebase_area(w, offsets) != a) {
            r.violation(p, json{{"circuit", to_json(c)}, {"failed", "rebase"}});
            break;
          }
        }
      }
      r.cases_run = p.cases;
      r.details   = json{{"rebasings_per_circuit", 100}};
    });
  }

  // Area of a concatenation is the sum of the areas.
  inline CheckResult check_area_additivity(CheckParams const& p) {
    return detail::timed("area-additivity", "area-is-additive", [&](CheckResult& r) {
      Rng rng(mix_seed(p.seed, detail::stream_additivity));
      for (std::size_t i = 0; i < p.cases; ++i) {
        Circuit c1 = detail::bounded_circuit(rng.next(), p.max_len / 2);
        Circuit c2 = detail::bounded_circuit(rng.next(), p.max_len / 2);
        if (area(concatenate(c1, c2)) != area(c1) + area(c2)
            || area(concatenate(c1, reversed(c1))) != 0) {
          r.violation(p, json{{"c1", to_json(c1)}, {"c2", to_json(c2)}});
        }
      }
      r.cases_run = p.cases;
    });
  }

  namespace detail {
    // Per-class bound and global bound on one circuit; returns whether some
    // class attains equality |sum| = Len_V with a nonzero sum.
    inline bool check_bounds_one(CheckParams const& p,
                                 Circuit const&     c,
                                 CheckResult&       r,
                                 std::size_t&       classes) {
      WalkResult w          = walk(c);
      bool       equality   = false;
      for (auto const& e : parallel_class_sums(c, w)) {
        ++classes;
        if (!e.holds()) {
          r.violation(p, json{{"circuit", to_json(c)},
                              {"failed", "per-class bound"},
                              {"copy", to_string(e.copy)},
                              {"sum", e.sum},
                              {"bound", e.bound}});
        }
        equality |= (e.sum != 0 && checked_abs(e.sum) == e.bound);
      }
      IsoReport iso = check_isoperimetric(c, w);
      if (!iso.ok) {
        r.violation(p, json{{"circuit", to_json(c)},
                            {"failed", "isoperimetric"},
                            {"area", iso.area},
                            {"len", iso.len}});
      }
      return equality;
    }
  }  // namespace detail

  // |sum of Area_s over a parallel class at V| <= Len_V and |Area| <= Len on
  // `cases` random circuits of length <= max_len, plus the rectangles
  // n = 1..128, each of which must attain equality in the per-class bound.
  inline CheckResult check_isoperimetric_bounds(CheckParams const& p) {
    return detail::timed("isoperimetric", "area-length-and-isoperimetric", [&](CheckResult& r) {
      Rng         rng(mix_seed(p.seed, detail::stream_circuits));
      std::size_t classes = 0, longest = 0;
      integer     max_ratio_num = 0, max_ratio_den = 1;
      for (std::size_t i = 0; i < p.cases; ++i) {
        Circuit c = detail::bounded_circuit(rng.next(), p.max_len);
        longest   = std::max(longest, c.len());
        detail::check_bounds_one(p, c, r, classes);
        integer a = checked_abs(area(c));
        if (a * max_ratio_den > max_ratio_num * static_cast<integer>(c.len())) {
          max_ratio_num = a;
          max_ratio_den = static_cast<integer>(c.len());
        }
      }
      for (integer n = 1; n <= 128; ++n) {
        Circuit c = rectangle(n);
        if (!detail::check_bounds_one(p, c, r, classes)) {
          r.violation(p, json{{"circuit", to_json(c)},
                              {"failed", "rectangle does not attain equality"}});
        }
      }
      r.cases_run = p.cases + 128;
      r.details   = json{{"classes_checked", classes},
                         {"longest_circuit", longest},
                         {"max_area_over_len",
                          json::array({max_ratio_num, max_ratio_den})}};
    });
  }

  // For every crossed strip: the coefficients of the strip 2-chain sum to
  // Area_s, the coefficient of each l_n in its boundary equals the signed
  // crossing count at n, and the support lies in [min index, max index).
  inline CheckResult check_strip_chains(CheckParams const& p) {
    return detail::timed("strip-chain", "strip-chain-boundary-and-evaluation", [&](CheckResult& r) {
      Rng         rng(mix_seed(p.seed, detail::stream_circuits));
      std::size_t chains = 0;
      auto        one    = [&](Circuit const& c) {
        WalkResult w = walk(c);
        StripMap   s = area_per_strip(w);
        for (auto const& [strip, area_s] : s) {
          ++chains;
          StripChain                 chain = strip_chain(w, strip);
          std::map<integer, integer> crossing_at;
          integer lo = std::numeric_limits<integer>::max();
          integer hi = std::numeric_limits<integer>::min();
          for (auto const& x : w.crossings) {
            if (x.strip == strip) {
              crossing_at[x.index] += x.sign;
              lo = std::min(lo, x.index);
              hi = std::max(hi, x.index);
            }
          }
          bool ok = chain.total() == area_s;
          for (auto const& [n, coeff] : chain.coeffs) {
            ok &= (n >= lo && n < hi);
          }
          for (integer n = lo - 1; n <= hi + 1; ++n) {
            integer expect = crossing_at.count(n) ? crossing_at[n] : 0;
            ok &= (chain.boundary_coefficient(n) == expect);
          }
          if (!ok) {
            r.violation(p, json{{"circuit", to_json(c)},
                                {"strip", to_string(strip)}});
          }
        }
      };
      for (std::size_t i = 0; i < p.cases; ++i) {
        one(detail::bounded_circuit(rng.next(), p.max_len));
      }
      for (integer n = 1; n <= 128; ++n) {
        one(rectangle(n));
      }
      one(four_crossing_circuit());
      r.cases_run = p.cases + 129;
      r.details   = json{{"chains_checked", chains}};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Tree coloring
  ////////////////////////////////////////////////////////////////////////

  // For each radius 1..radius, `cases` sampled subtrees with at most six
  // edges per vertex.
  inline CheckResult check_coloring(CheckParams const& p) {
    return detail::timed("coloring", "tree-coloring-one-endpoint", [&](CheckResult& r) {
      std::size_t edges = 0, trees = 0, max_colors = 0;
      for (std::size_t radius = 1; radius <= p.radius; ++radius) {
        for (std::size_t i = 0; i < p.cases; ++i) {
          std::uint64_t s = mix_seed(mix_seed(p.seed, detail::stream_coloring),
                                     radius * 1000003 + i);
          Subtree       t = sample_subtree(s, radius, 6);
          TreeColoring  c = tree_coloring(t);
          ColoringCheck k = check_coloring(t, c);
          edges += k.edges_checked;
          max_colors = std::max(max_colors, k.color_count);
          ++trees;
          if (k.endpoint_errors + k.parallel_errors > 0) {
            r.violation(p, json{{"seed", s},
                                {"radius", radius},
                                {"endpoint_errors", k.endpoint_errors},
                                {"parallel_errors", k.parallel_errors}});
          }
        }
      }
      r.cases_run = trees;
      r.details   = json{{"edges_checked", edges},
                         {"max_colors", max_colors},
                         {"radius", p.radius}};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Link condition
  ////////////////////////////////////////////////////////////////////////

  inline CheckResult check_links(CheckParams const& p) {
    return detail::timed("links", "link-condition", [&](CheckResult& r) {
      ModelCertificate cert = certify_models(p.cylinder_total, p.cylinder_segments);
      bool census = cert.y_link.vertex_count() == 10 && cert.y_link.edge_count() == 12;
      for (auto const& e : cert.y_link.edges()) {
        census &= (e.weight == Angle{4});
      }
      if (!census) {
        r.violation(p, json{{"failed", "Y link census"},
                            {"vertices", cert.y_link.vertex_count()},
                            {"edges", cert.y_link.edge_count()}});
      }
      if (!cert.y.ok || !cert.y.girth || *cert.y.girth != two_pi) {
        r.violation(p, json{{"failed", "Y link girth"}, {"report", to_json(cert.y)}});
      }
      if (!cert.g.ok) {
        r.violation(p, json{{"failed", "G link girth"},
                            {"report", to_json(cert.g)},
                            {"complex", wbound::to_json(builtin_complex(
                                            "g", p.cylinder_total,
                                            p.cylinder_segments))}});
      }
      if (!cert.y_subdivision.ok || !cert.g_subdivision.ok) {
        r.violation(p, json{{"failed", "subdivision vertices"}});
      }
      r.cases_run = 4;
      r.details   = json{{"y", to_json(cert.y)},
                         {"g", to_json(cert.g)},
                         {"y_vertices", cert.y_link.vertex_count()},
                         {"y_edges", cert.y_link.edge_count()},
                         {"b_out_to_b_in_units", cert.b_out_to_b_in.units},
                         {"cylinder_units", p.cylinder_total.units}};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  using CheckFn = CheckResult (*)(CheckParams const&);

  struct SuiteEntry {
    char const* name;
    CheckFn     fn;
    CheckParams defaults;  // seed and witness_limit are overridden
  };

  inline std::vector<SuiteEntry> const& suite() {
    static std::vector<SuiteEntry> const entries = [] {
      CheckParams words;
      words.cases          = 10000;
      words.max_len        = 64;
      words.exhaustive_len = 6;
      CheckParams comm;
      comm.cases = 512;
      CheckParams lip;
      lip.cases   = 10000;
      lip.max_len = 64;
      CheckParams cosets;
      cosets.cases   = 1000;
      cosets.max_len = 32;
      CheckParams one;
      one.cases = 1;
      CheckParams basing;
      basing.cases   = 200;
      basing.max_len = 400;
      CheckParams circuits;
      circuits.cases   = 1000;
      circuits.max_len = 400;
      CheckParams coloring;
      coloring.cases  = 5;
      coloring.radius = 3;
      return std::vector<SuiteEntry>{
          {"word-problem", &check_word_problem, words},
          {"commutator-power", &check_commutator_power, comm},
          {"pi-lipschitz", &check_pi_lipschitz, lip},
          {"pi-cosets", &check_pi_cosets, cosets},
          {"area-definition", &check_area_definition, one},
          {"area-basing", &check_area_basing, basing},
          {"area-additivity", &check_area_additivity, basing},
          {"isoperimetric", &check_isoperimetric_bounds, circuits},
          {"strip-chain", &check_strip_chains, circuits},
          {"coloring", &check_coloring, coloring},
          {"links", &check_links, one},
      };
    }();
    return entries;
  }

  // Overrides applied on top of each check's defaults.
  struct RunConfig {
    std::uint64_t              seed          = 1;
    std::size_t                witness_limit = 5;
    std::optional<std::size_t> cases;
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> radius;
    std::optional<std::size_t> exhaustive_len;
    Angle                      cylinder_total    = cylinder_path_total;
    std::size_t                cylinder_segments = cylinder_path_segments;
  };

  inline CheckParams params_for(SuiteEntry const& e, RunConfig const& cfg) {
    CheckParams p       = e.defaults;
    p.seed              = cfg.seed;
    p.witness_limit     = cfg.witness_limit;
    p.cylinder_total    = cfg.cylinder_total;
    p.cylinder_segments = cfg.cylinder_segments;
    if (cfg.cases) {
      p.cases = *cfg.cases;
    }
    if (cfg.max_len) {
      p.max_len = *cfg.max_len;
    }
    if (cfg.radius) {
      p.radius = *cfg.radius;
    }
    if (cfg.exhaustive_len) {
      p.exhaustive_len = *cfg.exhaustive_len;
    }
    return p;
  }

  // Runs the named checks (all of them if `names` is empty) in suite order.
  inline Report run_checks(std::vector<std::string> const& names,
                           RunConfig const&                cfg) {
    Report report;
    report.seed = cfg.seed;
    for (auto const& n : names) {
      bool known = false;
      for (auto const& e : suite()) {
        known |= (n == e.name);
      }
      if (!known) {
        throw std::invalid_argument("unknown check '" + n + "'");
      }
    }
    for (auto const& e : suite()) {
      if (!names.empty()
          && std::find(names.begin(), names.end(), e.name) == names.end()) {
        continue;
      }
      report.checks.push_back(e.fn(params_for(e, cfg)));
    }
    return report;
  }

}  // namespace wbound

#endif  // WBOUND_HARNESS_HPP_
