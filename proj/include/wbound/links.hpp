#ifndef WBOUND_LINKS_HPP_
#define WBOUND_LINKS_HPP_

#include <algorithm>  // for find, reverse
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t
#include <limits>     // for numeric_limits
#include <numeric>    // for gcd
#include <optional>   // for optional
#include <queue>      // for priority_queue
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

// Vertex links of one-vertex piecewise-Euclidean triangle complexes and the
// link condition: a 2-complex is locally CAT(0) iff no vertex link contains an
// injective loop shorter than 2 pi.  Angles are exact integers in units of
// pi/12.

namespace wbound {

  struct Angle {
    std::int64_t units = 0;  // multiples of pi/12

    static constexpr std::int64_t per_pi = 12;

    friend constexpr Angle operator+(Angle x, Angle y) {
      return Angle{x.units + y.units};
    }
    friend constexpr bool operator==(Angle, Angle)  = default;
    friend constexpr auto operator<=>(Angle, Angle) = default;
  };

  inline constexpr Angle two_pi{24};

  // Reduced multiple of pi: 24 -> "2pi", 6 -> "pi/2", 0 -> "0".
  inline std::string to_string(Angle a) {
    std::int64_t num = a.units, den = Angle::per_pi;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (num == 0) {
      return "0";
    }
    num /= g;
    den /= g;
    std::string out = num == 1 ? "" : num == -1 ? "-" : std::to_string(num);
    out += "pi";
    if (den != 1) {
      out += "/" + std::to_string(den);
    }
    return out;
  }

  struct BoundaryEntry {
    std::string label;
    int         orientation;  // +1 or -1
  };

  // Corner i sits between boundary entries i and i+1 (cyclically).
  struct TriangleSpec {
    BoundaryEntry boundary[3];
    Angle         corners[3];
  };

  struct LinkEdge {
    std::size_t u;
    std::size_t v;
    Angle       weight;
  };

  class LinkGraph {
   public:
    std::size_t add_vertex(std::string name) {
      if (find(name)) {
        throw std::invalid_argument("duplicate link vertex " + name);
      }
      _names.push_back(std::move(name));
      return _names.size() - 1;
    }

    void add_edge(std::size_t u, std::size_t v, Angle w) {
      if (u >= _names.size() || v >= _names.size()) {
        throw std::invalid_argument("link edge endpoint out of range");
      }
      if (w.units <= 0) {
        throw std::invalid_argument("link edge weights must be positive");
      }
      _edges.push_back(LinkEdge{u, v, w});
    }

    std::optional<std::size_t> find(std::string const& name) const {
      auto it = std::find(_names.begin(), _names.end(), name);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _names.begin());
    }

    std::size_t index_of(std::string const& name) const {
      auto i = find(name);
      if (!i) {
        throw std::invalid_argument("no link vertex named " + name);
      }
      return *i;
    }

    std::size_t vertex_count() const noexcept {
      return _names.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::vector<LinkEdge> const& edges() const noexcept {
      return _edges;
    }

    // The graph as it was with only its first n vertices and m edges.
    LinkGraph truncated(std::size_t n, std::size_t m) const {
      LinkGraph g;
      g._names.assign(_names.begin(), _names.begin() + std::min(n, _names.size()));
      for (std::size_t i = 0; i < std::min(m, _edges.size()); ++i) {
        g.add_edge(_edges[i].u, _edges[i].v, _edges[i].weight);
      }
      return g;
    }

   private:
    std::vector<std::string> _names;
    std::vector<LinkEdge>    _edges;
  };

  inline std::string out_vertex(std::string const& label) {
    return label + "_out";
  }
  inline std::string in_vertex(std::string const& label) {
    return label + "_in";
  }

  // Link of the single vertex: two vertices per 1-cell (tail direction _out,
  // head direction _in) and one edge per triangle corner.  Walking the
  // boundary, entry i arrives at the corner through the head of its label if
  // it is traversed positively (tail otherwise) and entry i+1 leaves through
  // its tail if positive (head otherwise).
  inline LinkGraph build_link(std::vector<std::string> const&  labels,
                              std::vector<TriangleSpec> const& triangles) {
    LinkGraph g;
    for (auto const& l : labels) {
      g.add_vertex(out_vertex(l));
      g.add_vertex(in_vertex(l));
    }
    auto check = [&labels](BoundaryEntry const& e) {
      if (std::find(labels.begin(), labels.end(), e.label) == labels.end()) {
        throw std::invalid_argument("triangle uses undeclared edge label "
                                    + e.label);
      }
      if (e.orientation != 1 && e.orientation != -1) {
        throw std::invalid_argument("boundary orientation must be +1 or -1");
      }
    };
    for (auto const& tri : triangles) {
      for (int i = 0; i < 3; ++i) {
        BoundaryEntry const& arrive = tri.boundary[i];
        BoundaryEntry const& leave  = tri.boundary[(i + 1) % 3];
        check(arrive);
        check(leave);
        std::string const u = arrive.orientation > 0 ? in_vertex(arrive.label)
                                                     : out_vertex(arrive.label);
        std::string const v = leave.orientation > 0 ? out_vertex(leave.label)
                                                    : in_vertex(leave.label);
        g.add_edge(g.index_of(u), g.index_of(v), tri.corners[i]);
      }
    }
    return g;
  }

  // Appends a simple path from `from` to `to` with `segments` edges of equal
  // weight total/segments through fresh vertices.  A single segment from a
  // vertex to itself is a loop.
  inline LinkGraph add_path(LinkGraph          link,
                            std::string const& from,
                            std::string const& to,
                            Angle              total,
                            std::size_t        segments,
                            std::string const& prefix = "path") {
    std::size_t const u = link.index_of(from);
    std::size_t const v = link.index_of(to);
    if (segments == 0) {
      throw std::invalid_argument("add_path: segments must be >= 1");
    }
    auto const n = static_cast<std::int64_t>(segments);
    if (total.units <= 0 || total.units % n != 0) {
      throw std::invalid_argument(
          "add_path: total angle must split into equal positive segments");
    }
    Angle const step{total.units / n};
    std::size_t prev = u;
    for (std::size_t i = 1; i < segments; ++i) {
      std::string name = prefix + "_" + std::to_string(i);
      for (int k = 1; link.find(name); ++k) {
        name = prefix + "_" + std::to_string(i) + "_" + std::to_string(k);
      }
      std::size_t w = link.add_vertex(name);
      link.add_edge(prev, w, step);
      prev = w;
    }
    link.add_edge(prev, v, step);
    return link;
  }

  struct Cat0Report {
    std::optional<Angle>     girth;  // nullopt: no loops at all
    bool                     ok = true;
    std::vector<std::string> witness;  // vertices of a shortest loop
  };

  namespace detail {
    // Dijkstra from s to t ignoring edge `skip`; returns distance and path.
    inline std::optional<std::pair<std::int64_t, std::vector<std::size_t>>>
    shortest_path(LinkGraph const& g,
                  std::size_t      s,
                  std::size_t      t,
                  std::size_t      skip) {
      std::size_t const n = g.vertex_count();
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (i == skip) {
          continue;
        }
        auto const& e = g.edges()[i];
        adj[e.u].emplace_back(e.v, i);
        adj[e.v].emplace_back(e.u, i);
      }
      constexpr auto inf = std::numeric_limits<std::int64_t>::max();
      std::vector<std::int64_t> dist(n, inf);
      std::vector<std::size_t>  prev(n, n);
      using item = std::pair<std::int64_t, std::size_t>;
      std::priority_queue<item, std::vector<item>, std::greater<>> pq;
      dist[s] = 0;
      pq.emplace(0, s);
      while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[x]) {
          continue;
        }
        for (auto [y, ei] : adj[x]) {
          std::int64_t nd = d + g.edges()[ei].weight.units;
          if (nd < dist[y]) {
            dist[y] = nd;
            prev[y] = x;
            pq.emplace(nd, y);
          }
        }
      }
      if (dist[t] == inf) {
        return std::nullopt;
      }
      std::vector<std::size_t> path{t};
      while (path.back() != s) {
        path.push_back(prev[path.back()]);
      }
      std::reverse(path.begin(), path.end());
      return std::make_pair(dist[t], std::move(path));
    }
  }  // namespace detail

  // Exact length of a shortest injective loop (weighted girth): for every
  // edge (u, v, w) a candidate w + dist(u, v) in the graph without that edge.
  inline Cat0Report shortest_injective_loop(LinkGraph const& g) {
    Cat0Report                r;
    std::vector<std::size_t>  best_path;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto const& e = g.edges()[i];
      std::int64_t             len;
      std::vector<std::size_t> path;
      if (e.u == e.v) {
        len  = e.weight.units;
        path = {e.u};
      } else {
        auto sp = detail::shortest_path(g, e.v, e.u, i);
        if (!sp) {
          continue;
        }
        len  = e.weight.units + sp->first;
        path = std::move(sp->second);  // v ... u, closed by the edge u-v
      }
      if (!r.girth || len < r.girth->units) {
        r.girth   = Angle{len};
        best_path = std::move(path);
      }
    }
    r.ok = !r.girth || *r.girth >= two_pi;
    for (auto i : best_path) {
      r.witness.push_back(g.names()[i]);
    }
    return r;
  }

  // Distance between two named vertices, nullopt if disconnected.
  inline std::optional<Angle> link_distance(LinkGraph const&   g,
                                            std::string const& from,
                                            std::string const& to) {
    auto sp = detail::shortest_path(
        g, g.index_of(from), g.index_of(to), g.edge_count());
    if (!sp) {
      return std::nullopt;
    }
    return Angle{sp->first};
  }

  ////////////////////////////////////////////////////////////////////////
  // The one-vertex model of H and the glued model of G
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> model_labels() {
    return {"a", "b", "t", "x", "y"};
  }

  // Relations by = t, ax = y, yb = t, xa = t; the relation uv = w is the
  // triangle with boundary u v w^-1, every corner pi/3.
  inline std::vector<TriangleSpec> model_triangles() {
    auto tri = [](std::string u, std::string v, std::string w) {
      return TriangleSpec{{{std::move(u), 1}, {std::move(v), 1}, {std::move(w), -1}},
                          {Angle{4}, Angle{4}, Angle{4}}};
    };
    return {tri("b", "y", "t"),
            tri("a", "x", "y"),
            tri("y", "b", "t"),
            tri("x", "a", "t")};
  }

  // Cylinder path at the vertex: pi/2 in three equal segments.
  inline constexpr Angle       cylinder_path_total{6};
  inline constexpr std::size_t cylinder_path_segments = 3;

  // Vertices created by subdividing the triangles and 1-cells into regular
  // triangles: an interior vertex has total angle 6 * pi/3, and a vertex
  // inside a 1-cell has a link made of one arc of length pi per 2-cell side
  // glued to that 1-cell (including the flat cylinder on b).
  struct SubdivisionCheck {
    Angle interior_total;
    Angle edge_girth;   // shortest loop over all 1-cell interior vertices
    bool  ok;
  };

  inline SubdivisionCheck check_subdivision_vertices(
      std::vector<std::string> const&  labels,
      std::vector<TriangleSpec> const& triangles,
      std::vector<std::string> const&  cylinder_labels) {
    SubdivisionCheck r{Angle{6 * 4}, Angle{0}, true};
    std::optional<Angle> girth;
    for (auto const& l : labels) {
      std::int64_t sheets = 0;
      for (auto const& tri : triangles) {
        for (auto const& e : tri.boundary) {
          sheets += (e.label == l);
        }
      }
      sheets += std::count(cylinder_labels.begin(), cylinder_labels.end(), l);
      if (sheets >= 2) {
        Angle loop{2 * Angle::per_pi};  // two arcs of length pi
        if (!girth || loop < *girth) {
          girth = loop;
        }
      }
    }
    r.edge_girth = girth.value_or(Angle{0});
    r.ok = r.interior_total >= two_pi && (!girth || *girth >= two_pi);
    return r;
  }

  struct ModelCertificate {
    LinkGraph        y_link;
    LinkGraph        g_link;
    Cat0Report       y;
    Cat0Report       g;
    Angle            b_out_to_b_in;  // in the link of Y
    SubdivisionCheck y_subdivision;
    SubdivisionCheck g_subdivision;
  };

  inline ModelCertificate certify_models(
      Angle       cylinder_total    = cylinder_path_total,
      std::size_t cylinder_segments = cylinder_path_segments) {
    auto const labels    = model_labels();
    auto const triangles = model_triangles();
    LinkGraph  y         = build_link(labels, triangles);
    LinkGraph  g         = add_path(
        y, out_vertex("b"), in_vertex("b"), cylinder_total, cylinder_segments,
        "cyl");
    ModelCertificate cert{y,
                          g,
                          shortest_injective_loop(y),
                          shortest_injective_loop(g),
                          link_distance(y, out_vertex("b"), in_vertex("b"))
                              .value_or(Angle{-1}),
                          check_subdivision_vertices(labels, triangles, {}),
                          check_subdivision_vertices(labels, triangles, {"b"})};
    return cert;
  }

}  // namespace wbound

#endif  // WBOUND_LINKS_HPP_
