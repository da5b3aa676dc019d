#ifndef WBOUND_COLORING_HPP_
#define WBOUND_COLORING_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <set>        // for set
#include <stdexcept>  // for invalid_argument
#include <vector>     // for vector

#include "amalgam.hpp"
#include "hnn.hpp"
#include "rng.hpp"

// Edge and partial vertex colorings of finite subtrees of the Bass-Serre
// tree T.  Edge colors are generated by parallelism of b-lines inside a
// common copy; vertex colors follow a breadth-first rule from the root so that
// every edge has exactly one endpoint of its own color.

namespace wbound {

  struct SubtreeVertex {
    TreeVertexId               id;
    std::optional<std::size_t> parent_edge;
    std::size_t                depth = 0;
  };

  struct SubtreeEdge {
    GElement    element;  // g with tail 0; the edge is g<b>
    std::size_t upper;    // endpoint closer to the root
    std::size_t lower;
    HNormalForm line_upper;  // b-line of the edge inside the upper copy
    HNormalForm line_lower;  // b-line of the edge inside the lower copy
  };

  // vertices[0] is the root.
  struct Subtree {
    std::vector<SubtreeVertex> vertices;
    std::vector<SubtreeEdge>   edges;
  };

  struct TreeColoring {
    std::vector<std::size_t>                edge_color;
    std::vector<std::optional<std::size_t>> vertex_color;
    std::size_t                             color_count = 0;
  };

  inline void validate(Subtree const& t) {
    auto fail = [](std::string const& why) {
      throw std::invalid_argument("malformed subtree: " + why);
    };
    if (t.vertices.empty()) {
      fail("no root");
    }
    if (t.vertices[0].parent_edge || t.vertices[0].depth != 0) {
      fail("root must have depth 0 and no parent edge");
    }
    if (t.edges.size() + 1 != t.vertices.size()) {
      fail("edge count must be vertex count - 1");
    }
    std::set<TreeVertexId> seen_v;
    for (auto const& v : t.vertices) {
      if (!seen_v.insert(v.id).second) {
        fail("duplicate vertex");
      }
    }
    std::set<TreeEdgeId> seen_e;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      auto const& e = t.edges[i];
      if (e.upper >= t.vertices.size() || e.lower >= t.vertices.size()) {
        fail("edge endpoint out of range");
      }
      if (!is_valid(e.element) || e.element.tail != 0) {
        fail("edge element not in normal form with tail 0");
      }
      TreeEdgeId id{e.element.syllables};
      if (!seen_e.insert(id).second) {
        fail("duplicate edge");
      }
      auto const& up = t.vertices[e.upper];
      auto const& lo = t.vertices[e.lower];
      if (up.id.side == lo.id.side) {
        fail("edge joins two vertices of the same side");
      }
      if (!(tree_vertex(e.element, up.id.side) == up.id)
          || !(tree_vertex(e.element, lo.id.side) == lo.id)) {
        fail("edge is not incident to its endpoints");
      }
      if (lo.parent_edge != i || lo.depth != up.depth + 1) {
        fail("lower endpoint must hang from this edge one level down");
      }
      if (!(e.line_upper == local_b_line(id, up.id.side))
          || !(e.line_lower == local_b_line(id, lo.id.side))) {
        fail("b-line data disagrees with the edge element");
      }
    }
    for (std::size_t i = 1; i < t.vertices.size(); ++i) {
      if (!t.vertices[i].parent_edge) {
        fail("non-root vertex without parent edge");
      }
    }
  }

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // (edge index, b-line in that vertex) for every edge at each vertex.
    inline std::vector<std::vector<std::pair<std::size_t, HNormalForm const*>>>
    incidence(Subtree const& t) {
      std::vector<std::vector<std::pair<std::size_t, HNormalForm const*>>> inc(
          t.vertices.size());
      for (std::size_t i = 0; i < t.edges.size(); ++i) {
        inc[t.edges[i].upper].emplace_back(i, &t.edges[i].line_upper);
        inc[t.edges[i].lower].emplace_back(i, &t.edges[i].line_lower);
      }
      return inc;
    }
  }  // namespace detail

  inline TreeColoring tree_coloring(Subtree const& t) {
    validate(t);
    TreeColoring out;

    detail::UnionFind uf(t.edges.size());
    for (auto const& at : detail::incidence(t)) {
      for (std::size_t i = 0; i < at.size(); ++i) {
        for (std::size_t j = i + 1; j < at.size(); ++j) {
          if (is_parallel(*at[i].second, *at[j].second)) {
            uf.unite(at[i].first, at[j].first);
          }
        }
      }
    }
    std::vector<std::optional<std::size_t>> label(t.edges.size());
    out.edge_color.resize(t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      auto root = uf.find(i);
      if (!label[root]) {
        label[root] = out.color_count++;
      }
      out.edge_color[i] = *label[root];
    }

    // breadth-first: a vertex takes the color of its parent edge unless the
    // parent vertex already has it
    out.vertex_color.assign(t.vertices.size(), std::nullopt);
    std::vector<std::vector<std::size_t>> children(t.vertices.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      children[t.edges[i].upper].push_back(i);
    }
    std::vector<std::size_t> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t v = queue[k];
      for (std::size_t e : children[v]) {
        std::size_t c     = out.edge_color[e];
        std::size_t child = t.edges[e].lower;
        if (out.vertex_color[v] != c) {
          out.vertex_color[child] = c;
        }
        queue.push_back(child);
      }
    }
    if (queue.size() != t.vertices.size()) {
      throw std::invalid_argument("malformed subtree: not connected");
    }
    return out;
  }

  struct ColoringCheck {
    std::size_t edges_checked    = 0;
    std::size_t endpoint_errors  = 0;  // edges without exactly one endpoint
    std::size_t parallel_errors  = 0;  // same color at a vertex != parallel
    std::size_t color_count      = 0;
  };

  inline ColoringCheck check_coloring(Subtree const& t, TreeColoring const& c) {
    ColoringCheck r;
    r.color_count = c.color_count;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      auto const& e    = t.edges[i];
      int         hits = (c.vertex_color[e.upper] == c.edge_color[i])
                 + (c.vertex_color[e.lower] == c.edge_color[i]);
      ++r.edges_checked;
      r.endpoint_errors += (hits != 1);
    }
    for (auto const& at : detail::incidence(t)) {
      for (std::size_t i = 0; i < at.size(); ++i) {
        for (std::size_t j = i + 1; j < at.size(); ++j) {
          bool same = c.edge_color[at[i].first] == c.edge_color[at[j].first];
          r.parallel_errors += (same != is_parallel(*at[i].second,
                                                    *at[j].second));
        }
      }
    }
    return r;
  }

  namespace detail {
    inline HNormalForm random_h(Rng& rng, std::size_t max_len) {
      using namespace letters;
      static constexpr Letter gens[] = {a, A, b, B, t, T};
      LetterSeq               word;
      std::size_t len = 1 + static_cast<std::size_t>(rng.below(max_len));
      for (std::size_t i = 0; i < len; ++i) {
        word.push_back(gens[rng.below(6)]);
      }
      return h_normalize(word);
    }
  }  // namespace detail

  // Grows a subtree of T around the root H_0 to depth `radius`, giving each
  // vertex at most `branching` incident edges.  Each vertex's new edges mix
  // b-lines parallel to the parent's line (t-powers), one random non-parallel
  // line, a line parallel to that one, and random lines, so every vertex with
  // at least three incident edges sees at least two parallelism classes.
  inline Subtree sample_subtree(std::uint64_t seed,
                                std::size_t   radius,
                                std::size_t   branching) {
    if (branching < 2) {
      throw std::invalid_argument("sample_subtree: branching must be >= 2");
    }
    Rng     rng(seed);
    Subtree t;
    t.vertices.push_back(SubtreeVertex{TreeVertexId{Side::zero, {}}, {}, 0});

    auto add_edge = [&t](std::size_t upper, GElement g) {
      TreeEdgeId  id{g.syllables};
      Side        up_side = t.vertices[upper].id.side;
      Side        lo_side = other(up_side);
      std::size_t lower   = t.vertices.size();
      t.vertices.push_back(SubtreeVertex{tree_vertex(g, lo_side),
                                         t.edges.size(),
                                         t.vertices[upper].depth + 1});
      t.edges.push_back(SubtreeEdge{std::move(g),
                                    upper,
                                    lower,
                                    local_b_line(id, up_side),
                                    local_b_line(id, lo_side)});
    };

    // the root edge <b>
    if (radius > 0) {
      add_edge(0, g_identity());
    }

    for (std::size_t k = 0; k < t.vertices.size(); ++k) {
      if (t.vertices[k].depth >= radius) {
        continue;
      }
      Side const     side   = t.vertices[k].id.side;
      GElement const prefix = element_of(t.vertices[k].id);
      std::size_t    slots  = branching - 1;  // one edge is already present

      std::set<HNormalForm>    used{h_identity()};
      std::vector<HNormalForm> reps;
      auto                     offer = [&](HNormalForm const& h) {
        HNormalForm rep = coset_rep(h).rep;
        if (reps.size() < slots && used.insert(rep).second) {
          reps.push_back(std::move(rep));
        }
      };
      integer p = rng.between(1, 3) * (rng.chance(1, 2) ? 1 : -1);
      offer(h_t_power(p));
      HNormalForm h;
      do {
        h = detail::random_h(rng, 6);
      } while (h.w.empty());
      offer(h);
      HNormalForm shift = h_mul(h_t_power(rng.between(1, 2)),
                                h_b_power(rng.between(-2, 2)));
      offer(h_mul(h, shift));
      for (int attempts = 0; reps.size() < slots && attempts < 64; ++attempts) {
        offer(detail::random_h(rng, 6));
      }
      for (auto& rep : reps) {
        GElement g = prefix;
        g.syllables.push_back(Syllable{side, std::move(rep)});
        add_edge(k, std::move(g));
      }
    }
    return t;
  }

}  // namespace wbound

#endif  // WBOUND_COLORING_HPP_
