#ifndef WBOUND_WORD_HPP_
#define WBOUND_WORD_HPP_

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, int8_t
#include <stdexcept>    // for invalid_argument
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "checked.hpp"

namespace wbound {

  // Generators that can appear in a word literal.  a, b, t generate H; x, y
  // are the auxiliary generators of the triangular presentation; l is the
  // vertical 1-cell of the cylinder.
  enum class Symbol : std::uint8_t { a, b, t, x, y, l };

  struct Letter {
    Symbol      symbol;
    std::int8_t sign;  // +1 or -1

    constexpr Letter inverse() const noexcept {
      return Letter{symbol, static_cast<std::int8_t>(-sign)};
    }

    constexpr bool cancels(Letter other) const noexcept {
      return symbol == other.symbol && sign == -other.sign;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  namespace letters {
    inline constexpr Letter a{Symbol::a, 1};
    inline constexpr Letter A{Symbol::a, -1};
    inline constexpr Letter b{Symbol::b, 1};
    inline constexpr Letter B{Symbol::b, -1};
    inline constexpr Letter t{Symbol::t, 1};
    inline constexpr Letter T{Symbol::t, -1};
    inline constexpr Letter x{Symbol::x, 1};
    inline constexpr Letter X{Symbol::x, -1};
    inline constexpr Letter y{Symbol::y, 1};
    inline constexpr Letter Y{Symbol::y, -1};
  }  // namespace letters

  // An arbitrary, possibly unreduced, sequence of letters.
  using LetterSeq = std::vector<Letter>;

  ////////////////////////////////////////////////////////////////////////
  // Literal syntax
  ////////////////////////////////////////////////////////////////////////

  inline char to_char(Letter l) {
    static constexpr char lower[] = {'a', 'b', 't', 'x', 'y', 'l'};
    char c = lower[static_cast<std::size_t>(l.symbol)];
    return l.sign > 0 ? c : static_cast<char>(c - 'a' + 'A');
  }

  inline Letter letter_from_char(char c) {
    switch (c) {
      case 'a': return Letter{Symbol::a, 1};
      case 'A': return Letter{Symbol::a, -1};
      case 'b': return Letter{Symbol::b, 1};
      case 'B': return Letter{Symbol::b, -1};
      case 't': return Letter{Symbol::t, 1};
      case 'T': return Letter{Symbol::t, -1};
      case 'x': return Letter{Symbol::x, 1};
      case 'X': return Letter{Symbol::x, -1};
      case 'y': return Letter{Symbol::y, 1};
      case 'Y': return Letter{Symbol::y, -1};
      case 'l': return Letter{Symbol::l, 1};
      case 'L': return Letter{Symbol::l, -1};
      default:
        throw std::invalid_argument(std::string("unknown letter '") + c
                                    + "' in word literal");
    }
  }

  // Whitespace is ignored; uppercase letters are inverses.
  inline LetterSeq parse_letters(std::string_view text) {
    LetterSeq out;
    out.reserve(text.size());
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        continue;
      }
      out.push_back(letter_from_char(c));
    }
    return out;
  }

  inline std::string to_string(LetterSeq const& seq) {
    std::string out;
    out.reserve(seq.size());
    for (Letter l : seq) {
      out.push_back(to_char(l));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ReducedWord
  ////////////////////////////////////////////////////////////////////////

  // A freely reduced word.  The only ways to obtain one are reduce(), the
  // operations below, and append(), all of which keep the word reduced.
  class ReducedWord {
   public:
    ReducedWord() = default;

    static ReducedWord reduce(LetterSeq const& seq) {
      ReducedWord w;
      w._letters.reserve(seq.size());
      for (Letter l : seq) {
        w.append(l);
      }
      return w;
    }

    // Right-multiply by a single letter, cancelling if possible.
    void append(Letter l) {
      if (!_letters.empty() && _letters.back().cancels(l)) {
        _letters.pop_back();
      } else {
        _letters.push_back(l);
      }
    }

    void append(ReducedWord const& w) {
      for (Letter l : w._letters) {
        append(l);
      }
    }

    LetterSeq const& letters() const noexcept {
      return _letters;
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    Letter front() const {
      return _letters.front();
    }

    Letter back() const {
      return _letters.back();
    }

    // Split off the maximal prefix made of a single symbol; returns its
    // exponent sum and leaves the remainder in *this.
    integer strip_leading(Symbol s) {
      std::size_t i = 0;
      integer     e = 0;
      while (i < _letters.size() && _letters[i].symbol == s) {
        e = checked_add(e, _letters[i].sign);
        ++i;
      }
      _letters.erase(_letters.begin(), _letters.begin() + i);
      return e;
    }

    integer strip_trailing(Symbol s) {
      integer e = 0;
      while (!_letters.empty() && _letters.back().symbol == s) {
        e = checked_add(e, _letters.back().sign);
        _letters.pop_back();
      }
      return e;
    }

    std::size_t count(Symbol s) const noexcept {
      std::size_t n = 0;
      for (Letter l : _letters) {
        n += (l.symbol == s);
      }
      return n;
    }

    friend bool operator==(ReducedWord const&, ReducedWord const&) = default;
    friend auto operator<=>(ReducedWord const&,
                            ReducedWord const&) = default;

   private:
    LetterSeq _letters;
  };

  inline ReducedWord reduce(LetterSeq const& seq) {
    return ReducedWord::reduce(seq);
  }

  inline ReducedWord concat(ReducedWord u, ReducedWord const& v) {
    u.append(v);
    return u;
  }

  inline ReducedWord invert(ReducedWord const& w) {
    LetterSeq seq;
    seq.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      seq.push_back(it->inverse());
    }
    // already reduced, but going through reduce keeps the invariant local
    return reduce(seq);
  }

  inline ReducedWord power(Letter l, integer k) {
    ReducedWord w;
    Letter      step = k >= 0 ? l : l.inverse();
    for (integer i = 0; i < checked_abs(k); ++i) {
      w.append(step);
    }
    return w;
  }

  inline std::string to_string(ReducedWord const& w) {
    return to_string(w.letters());
  }

  ////////////////////////////////////////////////////////////////////////
  // The automorphism sigma of F(a, b): conjugation by t^-1 in H.
  //   sigma(a) = b^-1 a,  sigma(b) = b
  //   sigma^-1(a) = b a,  sigma^-1(b) = b
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void append_sigma_image(ReducedWord& out, Letter l, int dir) {
      using namespace letters;
      if (l.symbol == Symbol::b) {
        out.append(l);
        return;
      }
      if (l.symbol != Symbol::a) {
        throw std::invalid_argument("sigma is only defined on words in a, b");
      }
      if (dir > 0) {
        if (l.sign > 0) {  // a -> B a
          out.append(B);
          out.append(a);
        } else {  // A -> A b
          out.append(A);
          out.append(b);
        }
      } else {
        if (l.sign > 0) {  // a -> b a
          out.append(b);
          out.append(a);
        } else {  // A -> A B
          out.append(A);
          out.append(B);
        }
      }
    }
  }  // namespace detail

  // sigma^k(w), applying the one-step substitution |k| times.
  inline ReducedWord sigma_power(ReducedWord const& w, integer k) {
    ReducedWord current = w;
    int const   dir     = k >= 0 ? 1 : -1;
    integer     steps   = checked_abs(k);
    for (integer i = 0; i < steps; ++i) {
      ReducedWord next;
      for (Letter l : current.letters()) {
        detail::append_sigma_image(next, l, dir);
      }
      current = std::move(next);
    }
    return current;
  }

}  // namespace wbound

#endif  // WBOUND_WORD_HPP_
