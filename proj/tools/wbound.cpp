// Command-line front end: single-case commands and seeded check campaigns.
//
// Exit status: 0 on success, 1 if a check reports violations, 2 on usage,
// parse or I/O errors.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wbound/harness.hpp"

namespace {

  using namespace wbound;

  std::string triple(HNormalForm const& h) {
    std::string w = to_string(h.w);
    return "(" + std::to_string(h.p) + "," + std::to_string(h.q) + ","
           + (w.empty() ? "\xCE\xB5" : w) + ")";
  }

  std::string spelled(HNormalForm const& h) {
    std::string s = to_string(spell(h));
    return s.empty() ? "1" : s;
  }

  struct Common {
    bool                        json_out      = false;
    bool                        timing        = false;
    std::uint64_t               seed          = 1;
    std::size_t                 witness_limit = 5;
    std::optional<std::size_t>  cases;
    std::optional<std::size_t>  max_len;
    std::optional<std::size_t>  radius;
    std::optional<std::size_t>  exhaustive_len;
    std::int64_t                cylinder_units    = cylinder_path_total.units;
    std::size_t                 cylinder_segments = cylinder_path_segments;
    std::vector<std::string>    checks;

    RunConfig config() const {
      RunConfig c;
      c.seed              = seed;
      c.witness_limit     = witness_limit;
      c.cases             = cases;
      c.max_len           = max_len;
      c.radius            = radius;
      c.exhaustive_len    = exhaustive_len;
      c.cylinder_total    = Angle{cylinder_units};
      c.cylinder_segments = cylinder_segments;
      return c;
    }
  };

  void add_campaign_flags(CLI::App* app, Common& c) {
    app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
    app->add_option("--cases,--seeds", c.cases, "number of random cases");
    app->add_option("--max-len,--len", c.max_len, "maximum word / circuit length");
    app->add_option("--radius", c.radius, "subtree radius");
    app->add_option("--exhaustive-len", c.exhaustive_len,
                    "enumerate all words up to this length");
    app->add_option("--witness-limit", c.witness_limit,
                    "witnesses kept per check")
        ->capture_default_str();
    app->add_option("--cylinder-units", c.cylinder_units,
                    "length of the b_out -> b_in path in units of pi/12")
        ->capture_default_str();
    app->add_option("--cylinder-segments", c.cylinder_segments,
                    "edges on the b_out -> b_in path")
        ->capture_default_str();
    app->add_flag("--timing", c.timing, "include wall times in the report");
  }

  int print_report(Report const& r, Common const& c) {
    if (c.json_out) {
      std::cout << r.to_json(c.timing).dump(2) << "\n";
    } else {
      for (auto const& check : r.checks) {
        std::cout << (check.violations == 0 ? "ok   " : "FAIL ") << check.name
                  << " [" << check.property << "] cases=" << check.cases_run
                  << " violations=" << check.violations;
        if (c.timing) {
          std::cout << " ms=" << static_cast<long long>(check.wall_ms);
        }
        std::cout << "\n";
        for (auto const& w : check.witnesses) {
          std::cout << "     witness " << w.dump() << "\n";
        }
      }
      std::cout << "seed " << r.seed << ": " << r.total_violations()
                << " violation(s)\n";
    }
    return r.total_violations() == 0 ? 0 : 1;
  }

  Circuit load_circuit(std::string const& file,
                       std::string const& steps,
                       int                start_side) {
    if (!file.empty()) {
      return circuit_from_json(read_json_file(file));
    }
    Circuit c;
    c.start.side = side_from_int(start_side);
    for (char ch : steps) {
      if (ch != ' ' && ch != '\t' && ch != ',') {
        c.steps.push_back(parse_step(std::string(1, ch)));
      }
    }
    return c;
  }

  json circuit_report(Circuit const& c) {
    WalkResult w      = walk(c);
    json       strips = json::array();
    for (auto const& [strip, a] : area_per_strip(w)) {
      StripChain chain = strip_chain(w, strip);
      json       coeffs = json::object();
      for (auto const& [n, k] : chain.coeffs) {
        coeffs[std::to_string(n)] = k;
      }
      strips.push_back(json{{"strip", to_json(element_of(strip))},
                            {"area", a},
                            {"chain", coeffs}});
    }
    json classes = json::array();
    bool classes_ok = true;
    for (auto const& e : parallel_class_sums(c, w)) {
      classes_ok &= e.holds();
      classes.push_back(json{{"copy", to_string(e.copy)},
                             {"strips", e.strips.size()},
                             {"sum", e.sum},
                             {"bound", e.bound}});
    }
    IsoReport iso = check_isoperimetric(c, w);
    return json{{"len", iso.len},
                {"area", iso.area},
                {"isoperimetric_ok", iso.ok},
                {"class_bounds_ok", classes_ok},
                {"strips", strips},
                {"classes", classes}};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, circuit areas and link checks for H and G = H *_<b> H"};
  app.require_subcommand(1);

  Common      common;
  std::string word, word2, u_word, file, steps, builtin;
  int         start_side = 0;
  std::size_t ball_radius = 4;

  auto* normalize = app.add_subcommand("normalize", "normal form t^p b^q w of a word in H");
  normalize->add_option("word", word, "word over a b t (uppercase = inverse)")->required();
  normalize->add_flag("--json", common.json_out);

  auto* gnormalize = app.add_subcommand(
      "gnormalize", "normal form in G of a sided word such as '0:ta 1:b'");
  gnormalize->add_option("word", word, "sided word")->required();
  gnormalize->add_flag("--json", common.json_out);

  auto* pi_cmd = app.add_subcommand("pi", "retraction pi (or pi_u with --u)");
  pi_cmd->add_option("word", word, "word in H")->required();
  pi_cmd->add_option("--u", u_word, "translate: report pi(u^-1 h)");
  pi_cmd->add_flag("--json", common.json_out);

  auto* parallel = app.add_subcommand("parallel", "are u<b> and v<b> parallel");
  parallel->add_option("u", word, "word in H")->required();
  parallel->add_option("v", word2, "word in H")->required();
  parallel->add_flag("--json", common.json_out);

  auto* ball = app.add_subcommand("ball", "sphere sizes of the Cayley graph of H");
  ball->add_option("--radius", ball_radius, "radius")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{0}, max_ball_radius));
  ball->add_flag("--json", common.json_out);

  auto* area_cmd = app.add_subcommand("area", "area and strip chains of one circuit");
  auto* circuit_in = area_cmd->add_option_group("circuit");
  circuit_in->add_option("file", file, "circuit JSON file");
  circuit_in->add_option("--steps", steps, "steps such as 'b+bb-' (start at the identity)");
  circuit_in->require_option(1);
  area_cmd->add_option("--start-side", start_side, "side of the start vertex with --steps")
      ->check(CLI::Range(0, 1));
  area_cmd->add_flag("--json", common.json_out);

  auto* iso = app.add_subcommand("check-iso",
                                 "per-class and global area bounds on random circuits");
  add_campaign_flags(iso, common);
  iso->add_flag("--json", common.json_out);

  auto* lemmas = app.add_subcommand(
      "check-area-lemmas", "area example, basing independence, additivity, strip chains");
  add_campaign_flags(lemmas, common);
  lemmas->add_flag("--json", common.json_out);

  auto* coloring = app.add_subcommand("check-coloring", "colorings of sampled subtrees");
  add_campaign_flags(coloring, common);
  coloring->add_flag("--json", common.json_out);

  auto* links = app.add_subcommand("check-links", "link condition of a 2-complex");
  auto* link_in = links->add_option_group("complex");
  link_in->add_option("--builtin", builtin, "y or g")->check(CLI::IsMember({"y", "g"}));
  link_in->add_option("--file", file, "complex JSON file");
  link_in->require_option(0, 1);
  add_campaign_flags(links, common);
  links->add_flag("--json", common.json_out);

  auto* verify = app.add_subcommand("verify-all", "every check in the suite");
  add_campaign_flags(verify, common);
  verify->add_option("--check", common.checks, "restrict to the named checks");
  verify->add_flag("--json", common.json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      LetterSeq   in = parse_letters(word);
      HNormalForm h  = h_normalize(in);
      if (common.json_out) {
        json j     = to_json(h);
        j["input"] = to_string(in);
        j["spelled"] = to_string(spell(h));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << triple(h) << "\n" << spelled(h) << "\n";
      }
      return 0;
    }
    if (*gnormalize) {
      GElement g = g_from_word(parse_sided_word(word));
      if (common.json_out) {
        json j       = to_json(g);
        j["spelled"] = to_string(spell(g));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << to_string(g) << "\n" << to_string(spell(g)) << "\n";
      }
      return 0;
    }
    if (*pi_cmd) {
      HNormalForm h = h_normalize(parse_letters(word));
      HNormalForm u = h_normalize(parse_letters(u_word));
      integer     v = pi_u(u, h);
      CosetShape  s = coset_shape(h_mul(h_inv(u), h));
      std::string kind = s.kind == CosetKind::translation ? "translation" : "constant";
      if (common.json_out) {
        std::cout << json{{"pi", v}, {"coset", {{"kind", kind}, {"c", s.c}}}}.dump(2)
                  << "\n";
      } else {
        std::cout << v << "\n"
                  << "on h<b>: " << kind << " c=" << s.c << "\n";
      }
      return 0;
    }
    if (*parallel) {
      bool par = is_parallel(h_normalize(parse_letters(word)),
                             h_normalize(parse_letters(word2)));
      if (common.json_out) {
        std::cout << json{{"parallel", par}}.dump(2) << "\n";
      } else {
        std::cout << (par ? "parallel" : "not parallel") << "\n";
      }
      return 0;
    }
    if (*ball) {
      auto                     b = cayley_ball(ball_radius);
      std::vector<std::size_t> sphere(ball_radius + 1, 0);
      for (auto const& [h, d] : b) {
        ++sphere[d];
      }
      if (common.json_out) {
        std::cout << json{{"radius", ball_radius}, {"spheres", sphere}, {"ball", b.size()}}
                         .dump(2)
                  << "\n";
      } else {
        for (std::size_t r = 0; r <= ball_radius; ++r) {
          std::cout << "|S(" << r << ")| = " << sphere[r] << "\n";
        }
        std::cout << "|B(" << ball_radius << ")| = " << b.size() << "\n";
      }
      return 0;
    }
    if (*area_cmd) {
      Circuit c = load_circuit(file, steps, start_side);
      json    r = circuit_report(c);
      if (common.json_out) {
        std::cout << r.dump(2) << "\n";
      } else {
        std::cout << "len " << r["len"] << "\narea " << r["area"] << "\n";
        for (auto const& s : r["strips"]) {
          std::cout << "strip " << s["strip"].dump() << " area " << s["area"]
                    << " chain " << s["chain"].dump() << "\n";
        }
        std::cout << "|Area| <= Len: " << (r["isoperimetric_ok"].get<bool>() ? "yes" : "no")
                  << "\nclass bounds: "
                  << (r["class_bounds_ok"].get<bool>() ? "hold" : "VIOLATED") << "\n";
      }
      return r["isoperimetric_ok"].get<bool>() && r["class_bounds_ok"].get<bool>() ? 0 : 1;
    }
    if (*iso) {
      return print_report(run_checks({"isoperimetric"}, common.config()), common);
    }
    if (*lemmas) {
      return print_report(run_checks({"area-definition", "area-basing",
                                      "area-additivity", "strip-chain"},
                                     common.config()),
                          common);
    }
    if (*coloring) {
      return print_report(run_checks({"coloring"}, common.config()), common);
    }
    if (*links) {
      if (builtin.empty() && file.empty()) {
        return print_report(run_checks({"links"}, common.config()), common);
      }
      ComplexSpec spec = file.empty()
                             ? builtin_complex(builtin, Angle{common.cylinder_units},
                                               common.cylinder_segments)
                             : complex_from_json(read_json_file(file));
      LinkGraph  g = build_link(spec);
      Cat0Report r = shortest_injective_loop(g);
      if (common.json_out) {
        json j        = to_json(r);
        j["vertices"] = g.vertex_count();
        j["edges"]    = g.edge_count();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "link: " << g.vertex_count() << " vertices, " << g.edge_count()
                  << " edges\n";
        if (r.girth) {
          std::cout << "girth " << to_string(*r.girth) << "\n";
        } else {
          std::cout << "no injective loops\n";
        }
        if (!r.witness.empty()) {
          std::cout << "shortest loop:";
          for (auto const& v : r.witness) {
            std::cout << " " << v;
          }
          std::cout << "\n";
        }
        std::cout << (r.ok ? "ok" : "link condition FAILS") << "\n";
      }
      return r.ok ? 0 : 1;
    }
    if (*verify) {
      return print_report(run_checks(common.checks, common.config()), common);
    }
  } catch (parse_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (circuit_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
