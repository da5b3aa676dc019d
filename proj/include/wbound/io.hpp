#ifndef WBOUND_IO_HPP_
#define WBOUND_IO_HPP_

#include <fstream>    // for ifstream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include <nlohmann/json.hpp>

#include "amalgam.hpp"
#include "circuit.hpp"
#include "hnn.hpp"
#include "links.hpp"
#include "word.hpp"

// JSON encodings of the value types, and the circuit / complex file formats.

namespace wbound {

  using json = nlohmann::json;

  class parse_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline json to_json(HNormalForm const& h) {
    return json{{"p", h.p}, {"q", h.q}, {"w", to_string(h.w)}};
  }

  inline json to_json(GElement const& g) {
    json syl = json::array();
    for (auto const& s : g.syllables) {
      syl.push_back(json{{"side", to_int(s.side)},
                         {"p", s.rep.p},
                         {"q", s.rep.q},
                         {"w", to_string(s.rep.w)}});
    }
    return json{{"syllables", std::move(syl)}, {"tail", g.tail}};
  }

  inline json to_json(Cat0Report const& r) {
    json j;
    j["girth_units"] = r.girth ? json(r.girth->units) : json(nullptr);
    j["ok"]          = r.ok;
    j["witness"]     = r.witness;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Circuit files
  //   {"start": {"g": "0:t 0:a", "side": 0}, "steps": ["a", "+", "b", "-"]}
  ////////////////////////////////////////////////////////////////////////

  inline Circuit circuit_from_json(json const& j) {
    try {
      Circuit c;
      if (j.contains("start")) {
        auto const& s = j.at("start");
        if (s.contains("g")) {
          c.start.g = g_from_word(parse_sided_word(s.at("g").get<std::string>()));
        }
        if (s.contains("side")) {
          c.start.side = side_from_int(s.at("side").get<long long>());
        }
      }
      for (auto const& tok : j.at("steps")) {
        c.steps.push_back(parse_step(tok.get<std::string>()));
      }
      return c;
    } catch (json::exception const& e) {
      throw parse_error(std::string("circuit JSON: ") + e.what());
    } catch (std::invalid_argument const& e) {
      throw parse_error(std::string("circuit JSON: ") + e.what());
    }
  }

  inline json to_json(Circuit const& c) {
    json steps = json::array();
    for (auto const& s : c.steps) {
      steps.push_back(to_string(s));
    }
    return json{{"start",
                 {{"g", to_string(spell(c.start.g))},
                  {"side", to_int(c.start.side)}}},
                {"steps", std::move(steps)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Complex files
  //   {"edges": ["a", ...],
  //    "triangles": [{"boundary": [["b", 1], ["y", 1], ["t", -1]],
  //                   "corners": [4, 4, 4]}],
  //    "paths": [{"from": "b_out", "to": "b_in", "total": 6, "segments": 3}]}
  ////////////////////////////////////////////////////////////////////////

  struct PathSpec {
    std::string from;
    std::string to;
    Angle       total;
    std::size_t segments;
  };

  struct ComplexSpec {
    std::vector<std::string>  edges;
    std::vector<TriangleSpec> triangles;
    std::vector<PathSpec>     paths;
  };

  inline ComplexSpec complex_from_json(json const& j) {
    try {
      ComplexSpec spec;
      spec.edges = j.at("edges").get<std::vector<std::string>>();
      for (auto const& t : j.value("triangles", json::array())) {
        auto const& bd = t.at("boundary");
        auto const& cs = t.at("corners");
        if (bd.size() != 3 || cs.size() != 3) {
          throw parse_error("complex JSON: triangles need 3 boundary entries "
                            "and 3 corners");
        }
        TriangleSpec tri;
        for (std::size_t i = 0; i < 3; ++i) {
          tri.boundary[i] = BoundaryEntry{bd[i].at(0).get<std::string>(),
                                          bd[i].at(1).get<int>()};
          tri.corners[i]  = Angle{cs[i].get<std::int64_t>()};
        }
        spec.triangles.push_back(std::move(tri));
      }
      for (auto const& p : j.value("paths", json::array())) {
        spec.paths.push_back(PathSpec{p.at("from").get<std::string>(),
                                      p.at("to").get<std::string>(),
                                      Angle{p.at("total").get<std::int64_t>()},
                                      p.value("segments", std::size_t{1})});
      }
      return spec;
    } catch (json::exception const& e) {
      throw parse_error(std::string("complex JSON: ") + e.what());
    }
  }

  inline json to_json(ComplexSpec const& spec) {
    json tris = json::array();
    for (auto const& t : spec.triangles) {
      json bd = json::array();
      json cs = json::array();
      for (int i = 0; i < 3; ++i) {
        bd.push_back(json::array({t.boundary[i].label, t.boundary[i].orientation}));
        cs.push_back(t.corners[i].units);
      }
      tris.push_back(json{{"boundary", bd}, {"corners", cs}});
    }
    json paths = json::array();
    for (auto const& p : spec.paths) {
      paths.push_back(json{{"from", p.from},
                           {"to", p.to},
                           {"total", p.total.units},
                           {"segments", p.segments}});
    }
    return json{{"edges", spec.edges}, {"triangles", tris}, {"paths", paths}};
  }

  inline LinkGraph build_link(ComplexSpec const& spec) {
    LinkGraph g = build_link(spec.edges, spec.triangles);
    for (std::size_t i = 0; i < spec.paths.size(); ++i) {
      auto const& p = spec.paths[i];
      g = add_path(std::move(g), p.from, p.to, p.total, p.segments,
                   "path" + std::to_string(i));
    }
    return g;
  }

  // The built-in models as complex files.
  inline ComplexSpec builtin_complex(std::string const& name,
                                     Angle cylinder_total = cylinder_path_total,
                                     std::size_t cylinder_segments
                                     = cylinder_path_segments) {
    ComplexSpec spec{model_labels(), model_triangles(), {}};
    if (name == "y") {
      return spec;
    }
    if (name == "g") {
      spec.paths.push_back(PathSpec{
          out_vertex("b"), in_vertex("b"), cylinder_total, cylinder_segments});
      return spec;
    }
    throw std::invalid_argument("unknown builtin complex '" + name
                                + "' (expected y or g)");
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw parse_error("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      // e.byte is the offset of the error; report the line
      std::ifstream again(path);
      std::string   line;
      std::size_t   consumed = 0, lineno = 1;
      while (std::getline(again, line)) {
        if (consumed + line.size() + 1 >= e.byte) {
          break;
        }
        consumed += line.size() + 1;
        ++lineno;
      }
      throw parse_error(path + ":" + std::to_string(lineno) + ": "
                        + e.what());
    }
  }

}  // namespace wbound

#endif  // WBOUND_IO_HPP_
