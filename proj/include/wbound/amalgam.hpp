#ifndef WBOUND_AMALGAM_HPP_
#define WBOUND_AMALGAM_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t
#include <stdexcept>    // for invalid_argument
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "checked.hpp"
#include "hnn.hpp"
#include "word.hpp"

// The amalgam G = H *_<b> H.  Elements are stored in normal form
//   rep_1 rep_2 ... rep_k b^tail
// where the rep_i lie alternately in the two factors and are nontrivial
// elements of the <b>-transversal given by coset_rep().

namespace wbound {

  enum class Side : std::uint8_t { zero = 0, one = 1 };

  constexpr Side other(Side s) noexcept {
    return s == Side::zero ? Side::one : Side::zero;
  }

  constexpr int to_int(Side s) noexcept {
    return static_cast<int>(s);
  }

  inline Side side_from_int(long long v) {
    if (v != 0 && v != 1) {
      throw std::invalid_argument("side must be 0 or 1, got "
                                  + std::to_string(v));
    }
    return v == 0 ? Side::zero : Side::one;
  }

  struct Syllable {
    Side        side;
    HNormalForm rep;

    friend bool operator==(Syllable const&, Syllable const&) = default;
    friend auto operator<=>(Syllable const&, Syllable const&) = default;
  };

  struct GElement {
    std::vector<Syllable> syllables;
    integer               tail = 0;

    bool is_identity() const noexcept {
      return syllables.empty() && tail == 0;
    }

    friend bool operator==(GElement const&, GElement const&) = default;
    friend auto operator<=>(GElement const&, GElement const&) = default;
  };

  // Checks alternation and the transversal conditions on every syllable.
  inline bool is_valid(GElement const& g) {
    for (std::size_t i = 0; i < g.syllables.size(); ++i) {
      auto const& s = g.syllables[i];
      if (s.rep.is_identity() || !is_transversal_rep(s.rep)) {
        return false;
      }
      if (i > 0 && g.syllables[i - 1].side == s.side) {
        return false;
      }
    }
    return true;
  }

  inline GElement g_identity() {
    return GElement{};
  }

  inline GElement g_b_power(integer n) {
    GElement g;
    g.tail = n;
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group law
  ////////////////////////////////////////////////////////////////////////

  // g := g * h with h in the factor H_side.
  inline void right_mul_factor(GElement& g, Side side, HNormalForm const& h) {
    HNormalForm z = h_mul(h_b_power(g.tail), h);
    if (!g.syllables.empty() && g.syllables.back().side == side) {
      z = h_mul(g.syllables.back().rep, z);
      g.syllables.pop_back();
    }
    CosetRep c = coset_rep(z);
    g.tail     = c.offset;
    if (!c.rep.is_identity()) {
      g.syllables.push_back(Syllable{side, std::move(c.rep)});
    }
  }

  inline void right_mul_b_power(GElement& g, integer n) {
    g.tail = checked_add(g.tail, n);
  }

  inline GElement g_mul(GElement g, GElement const& h) {
    for (auto const& s : h.syllables) {
      right_mul_factor(g, s.side, s.rep);
    }
    right_mul_b_power(g, h.tail);
    return g;
  }

  inline GElement g_inv(GElement const& g) {
    GElement r = g_b_power(checked_neg(g.tail));
    for (auto it = g.syllables.rbegin(); it != g.syllables.rend(); ++it) {
      right_mul_factor(r, it->side, h_inv(it->rep));
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sided words
  ////////////////////////////////////////////////////////////////////////

  struct SidedLetter {
    Side   side;
    Letter letter;

    friend bool operator==(SidedLetter const&, SidedLetter const&) = default;
  };

  using SidedWord = std::vector<SidedLetter>;

  inline void right_mul_sided(GElement& g, SidedLetter const& s) {
    if (s.letter.symbol == Symbol::b) {
      right_mul_b_power(g, s.letter.sign);
      return;
    }
    HNormalForm h;
    right_mul_letter(h, s.letter);
    right_mul_factor(g, s.side, h);
  }

  inline GElement g_from_word(SidedWord const& steps) {
    GElement g;
    for (auto const& s : steps) {
      right_mul_sided(g, s);
    }
    return g;
  }

  // Canonical spelling: each syllable as t^p b^q w on its side, then the
  // tail as a b-power on the side of the last syllable (side 0 if none).
  inline SidedWord spell(GElement const& g) {
    SidedWord out;
    for (auto const& s : g.syllables) {
      for (Letter l : spell(s.rep)) {
        out.push_back(SidedLetter{s.side, l});
      }
    }
    Side   tail_side = g.syllables.empty() ? Side::zero
                                           : g.syllables.back().side;
    Letter bl        = g.tail >= 0 ? letters::b : letters::B;
    for (integer i = 0; i < checked_abs(g.tail); ++i) {
      out.push_back(SidedLetter{tail_side, bl});
    }
    return out;
  }

  // Syntax: whitespace-separated tokens "side:letters", e.g. "0:t 0:a 1:bB".
  inline SidedWord parse_sided_word(std::string_view text) {
    SidedWord   out;
    std::size_t i = 0;
    auto        is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      if (i >= text.size()) {
        break;
      }
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) {
        ++j;
      }
      std::string_view tok = text.substr(i, j - i);
      if (tok.size() < 3 || tok[1] != ':' || (tok[0] != '0' && tok[0] != '1')) {
        throw std::invalid_argument("malformed sided token '"
                                    + std::string(tok)
                                    + "', expected side:letters");
      }
      Side side = tok[0] == '0' ? Side::zero : Side::one;
      for (Letter l : parse_letters(tok.substr(2))) {
        if (l.symbol == Symbol::l) {
          throw std::invalid_argument("letter l is not an element of G");
        }
        out.push_back(SidedLetter{side, l});
      }
      i = j;
    }
    return out;
  }

  inline std::string to_string(SidedWord const& w) {
    std::string out;
    for (auto const& s : w) {
      if (!out.empty()) {
        out.push_back(' ');
      }
      out.push_back(s.side == Side::zero ? '0' : '1');
      out.push_back(':');
      out.push_back(to_char(s.letter));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bass-Serre tree coordinates
  ////////////////////////////////////////////////////////////////////////

  // The vertex g H_side.  `prefix` never ends with a syllable on `side`.
  struct TreeVertexId {
    Side                  side;
    std::vector<Syllable> prefix;

    friend bool operator==(TreeVertexId const&, TreeVertexId const&) = default;
    friend auto operator<=>(TreeVertexId const&,
                            TreeVertexId const&) = default;
  };

  // The edge g<b>: all syllables of g, tail dropped.
  struct TreeEdgeId {
    std::vector<Syllable> syllables;

    friend bool operator==(TreeEdgeId const&, TreeEdgeId const&) = default;
    friend auto operator<=>(TreeEdgeId const&, TreeEdgeId const&) = default;
  };

  inline TreeVertexId tree_vertex(GElement const& g, Side side) {
    TreeVertexId v{side, g.syllables};
    if (!v.prefix.empty() && v.prefix.back().side == side) {
      v.prefix.pop_back();
    }
    return v;
  }

  struct TreeEdgeCoord {
    TreeEdgeId id;
    integer    index;  // the vertical edge at g is l_index in its strip
  };

  inline TreeEdgeCoord tree_edge(GElement const& g) {
    return TreeEdgeCoord{TreeEdgeId{g.syllables}, g.tail};
  }

  inline GElement element_of(TreeVertexId const& v) {
    return GElement{v.prefix, 0};
  }

  inline GElement element_of(TreeEdgeId const& e) {
    return GElement{e.syllables, 0};
  }

  // For g in the copy V = tree_vertex(g, side) with V = x H_side (x the
  // prefix), returns x^-1 g as an element of H_side.
  inline HNormalForm local_element(GElement const& g, Side side) {
    HNormalForm h = h_b_power(g.tail);
    if (!g.syllables.empty() && g.syllables.back().side == side) {
      h = h_mul(g.syllables.back().rep, h);
    }
    return h;
  }

  // Transversal representative of the b-line of the edge g<b> inside the
  // copy tree_vertex(g, side).
  inline HNormalForm local_b_line(TreeEdgeId const& e, Side side) {
    if (!e.syllables.empty() && e.syllables.back().side == side) {
      return e.syllables.back().rep;
    }
    return h_identity();
  }

  inline std::string to_string(GElement const& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.syllables.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += std::to_string(to_int(g.syllables[i].side)) + ":("
             + to_string(g.syllables[i].rep) + ")";
    }
    out += "] tail=" + std::to_string(g.tail);
    return out;
  }

  inline std::string to_string(TreeEdgeId const& e) {
    return to_string(element_of(e));
  }

  inline std::string to_string(TreeVertexId const& v) {
    return "side " + std::to_string(to_int(v.side)) + " prefix "
           + to_string(element_of(v));
  }

}  // namespace wbound

#endif  // WBOUND_AMALGAM_HPP_
