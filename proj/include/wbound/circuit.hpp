#ifndef WBOUND_CIRCUIT_HPP_
#define WBOUND_CIRCUIT_HPP_

#include <algorithm>  // for sort, max, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t, uint64_t
#include <map>        // for map
#include <set>        // for set
#include <stdexcept>  // for runtime_error, invalid_argument
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "amalgam.hpp"
#include "checked.hpp"
#include "hnn.hpp"
#include "rng.hpp"
#include "word.hpp"

// Circuits in the 1-skeleton of the universal cover of X = Y_0 u_b Y_1.
//
// The 0-cells are pairs (g, side) with g in G: (g, 0) lies in the copy
// g H_0 of the cover of Y_0 and (g, 1) in the copy g H_1 of the cover of Y_1.
// A factor step multiplies g on the right by a generator of H_side; a cross
// step moves between (g, 0) and (g, 1) along a lift of the vertical 1-cell l.
// That lift lies in the strip g<b> and, under the basing g = rep * b^tail,
// it is l_tail.

namespace wbound {

  enum class StepKind : std::uint8_t { factor, toward1, toward0 };

  struct Step {
    StepKind kind   = StepKind::factor;
    Letter   letter = letters::a;  // meaningful for factor steps only

    static Step factor(Letter l) {
      return Step{StepKind::factor, l};
    }
    static Step toward1() {
      return Step{StepKind::toward1, letters::a};
    }
    static Step toward0() {
      return Step{StepKind::toward0, letters::a};
    }

    Step inverse() const {
      switch (kind) {
        case StepKind::toward1: return toward0();
        case StepKind::toward0: return toward1();
        default: return factor(letter.inverse());
      }
    }

    friend bool operator==(Step const& x, Step const& y) {
      return x.kind == y.kind
             && (x.kind != StepKind::factor || x.letter == y.letter);
    }
  };

  struct CoverVertex {
    GElement g;
    Side     side = Side::zero;

    friend bool operator==(CoverVertex const&, CoverVertex const&) = default;
  };

  struct Circuit {
    CoverVertex       start;
    std::vector<Step> steps;

    std::size_t len() const noexcept {
      return steps.size();
    }

    friend bool operator==(Circuit const&, Circuit const&) = default;
  };

  struct CrossingRecord {
    TreeEdgeId  strip;
    integer     index;
    int         sign;           // +1 iff the step goes toward side 1
    std::size_t step_position;  // 1-based
  };

  class circuit_error : public std::runtime_error {
   public:
    enum class kind { not_closed, invalid_step };

    circuit_error(kind k, std::string const& what)
        : std::runtime_error(what), _kind(k) {}

    kind code() const noexcept {
      return _kind;
    }

   private:
    kind _kind;
  };

  struct WalkResult {
    std::vector<CoverVertex>    vertices;  // Len + 1 entries, last == first
    std::vector<CrossingRecord> crossings;
  };

  inline void apply_step(CoverVertex& v, Step const& s, std::size_t pos) {
    switch (s.kind) {
      case StepKind::factor: {
        Symbol sym = s.letter.symbol;
        if (sym != Symbol::a && sym != Symbol::b && sym != Symbol::t) {
          throw circuit_error(circuit_error::kind::invalid_step,
                              "step " + std::to_string(pos)
                                  + ": factor steps must be a, b or t");
        }
        right_mul_sided(v.g, SidedLetter{v.side, s.letter});
        return;
      }
      case StepKind::toward1:
        if (v.side != Side::zero) {
          throw circuit_error(circuit_error::kind::invalid_step,
                              "step " + std::to_string(pos)
                                  + ": crossing toward side 1 from side 1");
        }
        v.side = Side::one;
        return;
      case StepKind::toward0:
        if (v.side != Side::one) {
          throw circuit_error(circuit_error::kind::invalid_step,
                              "step " + std::to_string(pos)
                                  + ": crossing toward side 0 from side 0");
        }
        v.side = Side::zero;
        return;
    }
  }

  // Walks the circuit, recording every crossing of a vertical edge.  Throws
  // circuit_error if a step is invalid or the walk does not return to start.
  inline WalkResult walk(Circuit const& c) {
    WalkResult r;
    r.vertices.reserve(c.steps.size() + 1);
    CoverVertex v = c.start;
    r.vertices.push_back(v);
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      Step const& s = c.steps[i];
      if (s.kind != StepKind::factor) {
        auto coord = tree_edge(v.g);
        apply_step(v, s, i + 1);
        r.crossings.push_back(
            CrossingRecord{std::move(coord.id),
                           coord.index,
                           s.kind == StepKind::toward1 ? 1 : -1,
                           i + 1});
      } else {
        apply_step(v, s, i + 1);
      }
      r.vertices.push_back(v);
    }
    if (!(v == c.start)) {
      throw circuit_error(circuit_error::kind::not_closed,
                          "circuit does not return to its start vertex");
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Area
  ////////////////////////////////////////////////////////////////////////

  using StripMap = std::map<TreeEdgeId, integer>;

  // Area_s for every strip the circuit crosses: sum of sign * index.
  inline StripMap area_per_strip(WalkResult const& w) {
    StripMap out;
    for (auto const& x : w.crossings) {
      integer& a = out[x.strip];
      a = checked_add(a, checked_mul(x.sign, x.index));
    }
    return out;
  }

  inline StripMap area_per_strip(Circuit const& c) {
    return area_per_strip(walk(c));
  }

  inline integer area(WalkResult const& w) {
    integer total = 0;
    for (auto const& [strip, a] : area_per_strip(w)) {
      total = checked_add(total, a);
    }
    return total;
  }

  inline integer area(Circuit const& c) {
    return area(walk(c));
  }

  // Area with each strip's index shifted by offsets[strip] (missing = 0).
  inline integer rebase_area(WalkResult const& w, StripMap const& offsets) {
    integer total = 0;
    for (auto const& x : w.crossings) {
      auto    it  = offsets.find(x.strip);
      integer idx = x.index;
      if (it != offsets.end()) {
        idx = checked_add(idx, it->second);
      }
      total = checked_add(total, checked_mul(x.sign, idx));
    }
    return total;
  }

  inline integer rebase_area(Circuit const& c, StripMap const& offsets) {
    return rebase_area(walk(c), offsets);
  }

  // Per strip: (#positive crossings, #negative crossings).
  inline std::map<TreeEdgeId, std::pair<std::size_t, std::size_t>>
  crossing_counts(WalkResult const& w) {
    std::map<TreeEdgeId, std::pair<std::size_t, std::size_t>> out;
    for (auto const& x : w.crossings) {
      auto& [pos, neg] = out[x.strip];
      (x.sign > 0 ? pos : neg)++;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Length per copy and the parallel-class bound
  ////////////////////////////////////////////////////////////////////////

  using CopyMap = std::map<TreeVertexId, integer>;

  // Number of factor steps taken inside each copy of the cover of Y.
  inline CopyMap len_per_copy(Circuit const& c, WalkResult const& w) {
    CopyMap out;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      if (c.steps[i].kind == StepKind::factor) {
        auto const& v = w.vertices[i];
        ++out[tree_vertex(v.g, v.side)];
      }
    }
    return out;
  }

  inline CopyMap len_per_copy(Circuit const& c) {
    return len_per_copy(c, walk(c));
  }

  struct ParallelClassSum {
    TreeVertexId            copy;
    std::vector<TreeEdgeId> strips;  // crossed strips glued on copy, one class
    integer                 sum;     // sum of Area_s over the class
    integer                 bound;   // Len_V

    bool holds() const {
      return checked_abs(sum) <= bound;
    }
  };

  // For every copy V the circuit touches, splits the crossed strips glued on V
  // into parallelism classes of their b-lines in V and reports the class sum
  // of Area_s next to Len_V.  Copies with no crossed strip get one entry with
  // an empty class.
  inline std::vector<ParallelClassSum> parallel_class_sums(Circuit const&    c,
                                                           WalkResult const& w) {
    StripMap const area_s = area_per_strip(w);
    CopyMap const  lens   = len_per_copy(c, w);

    std::map<TreeVertexId, std::set<TreeEdgeId>> attached;
    for (auto const& v : w.vertices) {
      attached[tree_vertex(v.g, v.side)];
    }
    for (auto const& x : w.crossings) {
      GElement g = element_of(x.strip);
      attached[tree_vertex(g, Side::zero)].insert(x.strip);
      attached[tree_vertex(g, Side::one)].insert(x.strip);
    }

    std::vector<ParallelClassSum> out;
    for (auto const& [copy, strips] : attached) {
      integer bound = 0;
      if (auto it = lens.find(copy); it != lens.end()) {
        bound = it->second;
      }
      if (strips.empty()) {
        out.push_back(ParallelClassSum{copy, {}, 0, bound});
        continue;
      }
      // classes[i] = (representative b-line, members)
      std::vector<std::pair<HNormalForm, std::vector<TreeEdgeId>>> classes;
      for (auto const& s : strips) {
        HNormalForm line = local_b_line(s, copy.side);
        bool        placed = false;
        for (auto& [rep, members] : classes) {
          if (is_parallel(rep, line)) {
            members.push_back(s);
            placed = true;
            break;
          }
        }
        if (!placed) {
          classes.push_back({line, {s}});
        }
      }
      for (auto& [rep, members] : classes) {
        integer sum = 0;
        for (auto const& s : members) {
          sum = checked_add(sum, area_s.at(s));
        }
        out.push_back(ParallelClassSum{copy, std::move(members), sum, bound});
      }
    }
    return out;
  }

  inline std::vector<ParallelClassSum> parallel_class_sums(Circuit const& c) {
    return parallel_class_sums(c, walk(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // The strip 2-chain
  ////////////////////////////////////////////////////////////////////////

  struct StripChain {
    TreeEdgeId                 strip;
    std::map<integer, integer> coeffs;  // square Q_n -> coefficient, nonzero

    integer coefficient(integer n) const {
      auto it = coeffs.find(n);
      return it == coeffs.end() ? 0 : it->second;
    }

    // Coefficient of l_n in the boundary, using dQ_n = l_(n+1) - l_n + ...
    integer boundary_coefficient(integer n) const {
      return checked_sub(coefficient(checked_sub(n, 1)), coefficient(n));
    }

    integer total() const {
      integer s = 0;
      for (auto const& [n, c] : coeffs) {
        s = checked_add(s, c);
      }
      return s;
    }
  };

  // Coefficient of Q_n is #{positive crossings with index >= n+1} minus
  // #{negative crossings with index >= n+1}; it vanishes outside
  // [min index, max index).
  inline StripChain strip_chain(WalkResult const& w, TreeEdgeId const& strip) {
    StripChain chain{strip, {}};
    std::vector<std::pair<integer, int>> xs;
    for (auto const& x : w.crossings) {
      if (x.strip == strip) {
        xs.emplace_back(x.index, x.sign);
      }
    }
    if (xs.empty()) {
      return chain;
    }
    std::sort(xs.begin(), xs.end());
    integer const lo = xs.front().first;
    integer const hi = xs.back().first;
    // suffix count of (sign-weighted) crossings with index >= n+1, swept
    // downward from hi
    std::size_t j     = xs.size();
    integer     count = 0;
    for (integer n = checked_sub(hi, 1); n >= lo; --n) {
      while (j > 0 && xs[j - 1].first >= n + 1) {
        --j;
        count += xs[j].second;
      }
      if (count != 0) {
        chain.coeffs[n] = count;
      }
    }
    return chain;
  }

  inline StripChain strip_chain(Circuit const& c, TreeEdgeId const& strip) {
    return strip_chain(walk(c), strip);
  }

  ////////////////////////////////////////////////////////////////////////
  // The isoperimetric inequality
  ////////////////////////////////////////////////////////////////////////

  struct IsoReport {
    integer     area;
    std::size_t len;
    bool        ok;
  };

  inline IsoReport check_isoperimetric(Circuit const& c, WalkResult const& w) {
    integer a = area(w);
    return IsoReport{a, c.len(),
                     checked_abs(a) <= static_cast<integer>(c.len())};
  }

  inline IsoReport check_isoperimetric(Circuit const& c) {
    return check_isoperimetric(c, walk(c));
  }

  ////////////////////////////////////////////////////////////////////////
  // Building circuits
  ////////////////////////////////////////////////////////////////////////

  // Steps that read the sided word starting from `side`, crossing whenever
  // the next letter lives on the other side.  b letters never force a
  // crossing.  Returns the side the walk ends on.
  inline Side append_sided_word(std::vector<Step>& steps,
                                SidedWord const&   word,
                                Side               side) {
    for (auto const& s : word) {
      if (s.side != side && s.letter.symbol != Symbol::b) {
        steps.push_back(side == Side::zero ? Step::toward1() : Step::toward0());
        side = s.side;
      }
      steps.push_back(Step::factor(s.letter));
    }
    return side;
  }

  // The circuit at (1, 0): cross, b^n in copy 1, cross back, b^-n in copy 0.
  // Area -n, length 2n + 2.
  inline Circuit rectangle(integer n) {
    Circuit c;
    c.steps.push_back(Step::toward1());
    for (integer i = 0; i < n; ++i) {
      c.steps.push_back(Step::factor(letters::b));
    }
    c.steps.push_back(Step::toward0());
    for (integer i = 0; i < n; ++i) {
      c.steps.push_back(Step::factor(letters::B));
    }
    return c;
  }

  inline Circuit reversed(Circuit const& c) {
    Circuit r{c.start, {}};
    r.steps.reserve(c.steps.size());
    for (auto it = c.steps.rbegin(); it != c.steps.rend(); ++it) {
      r.steps.push_back(it->inverse());
    }
    return r;
  }

  // Both circuits must start at the same vertex.
  inline Circuit concatenate(Circuit const& c1, Circuit const& c2) {
    if (!(c1.start == c2.start)) {
      throw std::invalid_argument("concatenate: circuits have different starts");
    }
    Circuit r = c1;
    r.steps.insert(r.steps.end(), c2.steps.begin(), c2.steps.end());
    return r;
  }

  // A random walk of target_len steps from (1, 0), closed by the canonical
  // spelling of the inverse of its endpoint.
  inline Circuit random_circuit(std::uint64_t seed, std::size_t target_len) {
    if (target_len < 2) {
      throw std::invalid_argument("random_circuit: target_len must be >= 2");
    }
    using namespace letters;
    Rng         rng(seed);
    Circuit     c;
    CoverVertex v;
    for (std::size_t i = 0; i < target_len; ++i) {
      Step s;
      switch (rng.below(10)) {
        case 0: s = Step::factor(a); break;
        case 1: s = Step::factor(A); break;
        case 2: s = Step::factor(t); break;
        case 3: s = Step::factor(T); break;
        case 4:
        case 5: s = Step::factor(b); break;
        case 6:
        case 7: s = Step::factor(B); break;
        default:
          s = v.side == Side::zero ? Step::toward1() : Step::toward0();
          break;
      }
      apply_step(v, s, i + 1);
      c.steps.push_back(s);
    }
    Side side = append_sided_word(c.steps, spell(g_inv(v.g)), v.side);
    if (side == Side::one) {
      c.steps.push_back(Step::toward0());
    }
    return c;
  }

  inline std::string to_string(Step const& s) {
    switch (s.kind) {
      case StepKind::toward1: return "+";
      case StepKind::toward0: return "-";
      default: return std::string(1, to_char(s.letter));
    }
  }

  // Parses one step token: a letter, or "+"/"-" (also "l"/"L") for crossings.
  inline Step parse_step(std::string const& tok) {
    if (tok == "+" || tok == "l") {
      return Step::toward1();
    }
    if (tok == "-" || tok == "L" || tok == "\xE2\x88\x92") {  // U+2212
      return Step::toward0();
    }
    if (tok.size() != 1) {
      throw std::invalid_argument("malformed step '" + tok + "'");
    }
    Letter l = letter_from_char(tok[0]);
    if (l.symbol != Symbol::a && l.symbol != Symbol::b
        && l.symbol != Symbol::t) {
      throw std::invalid_argument("factor steps must be a, b or t, got '" + tok
                                  + "'");
    }
    return Step::factor(l);
  }

}  // namespace wbound

#endif  // WBOUND_CIRCUIT_HPP_
