#ifndef WBOUND_BRITTON_HPP_
#define WBOUND_BRITTON_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for invalid_argument
#include <vector>     // for vector

#include "word.hpp"

// Word problem in H by Britton reduction.  This deliberately shares nothing
// with the normal-form arithmetic in hnn.hpp beyond the Letter type: pinches
// t u t^-1 and t^-1 u t are rewritten directly from the defining relations.

namespace wbound {

  namespace detail {
    // Free reduction stack over {a, b, t} that also remembers where the t
    // letters are, so the most recent potential pinch is found in O(1).
    class BrittonStack {
     public:
      void push(Letter l) {
        if (l.symbol == Symbol::t) {
          push_t(l);
        } else {
          push_free(l);
        }
      }

      bool empty() const noexcept {
        return _stack.empty();
      }

     private:
      void push_free(Letter l) {
        if (!_stack.empty() && _stack.back().cancels(l)) {
          _stack.pop_back();
        } else {
          _stack.push_back(l);
        }
      }

      void push_t(Letter l) {
        if (_t_positions.empty()
            || _stack[_t_positions.back()].sign == l.sign) {
          _t_positions.push_back(_stack.size());
          _stack.push_back(l);
          return;
        }
        // pinch: t^e u t^-e with u the free word after the last t
        std::size_t const pos    = _t_positions.back();
        int const         e      = _stack[pos].sign;
        LetterSeq         inside(_stack.begin() + pos + 1, _stack.end());
        _t_positions.pop_back();
        _stack.resize(pos);
        for (Letter c : inside) {
          conjugate_into(c, e);
        }
      }

      // Pushes t^e c t^-e, read off the relations
      //   t b t^-1 = b,   t a t^-1 = b a,   t^-1 a t = b^-1 a.
      void conjugate_into(Letter c, int e) {
        using namespace letters;
        if (c.symbol == Symbol::b) {
          push_free(c);
          return;
        }
        if (e > 0) {
          if (c.sign > 0) {
            push_free(b);
            push_free(a);
          } else {
            push_free(A);
            push_free(B);
          }
        } else {
          if (c.sign > 0) {
            push_free(B);
            push_free(a);
          } else {
            push_free(A);
            push_free(b);
          }
        }
      }

      LetterSeq                _stack;
      std::vector<std::size_t> _t_positions;
    };

    inline void push_expanded(BrittonStack& s, Letter l) {
      using namespace letters;
      switch (l.symbol) {
        case Symbol::a:
        case Symbol::b:
        case Symbol::t:
          s.push(l);
          return;
        case Symbol::y:  // y = b^-1 t
          if (l.sign > 0) {
            s.push(B);
            s.push(t);
          } else {
            s.push(T);
            s.push(b);
          }
          return;
        case Symbol::x:  // x = a^-1 b^-1 t
          if (l.sign > 0) {
            s.push(A);
            s.push(B);
            s.push(t);
          } else {
            s.push(T);
            s.push(b);
            s.push(a);
          }
          return;
        case Symbol::l:
          break;
      }
      throw std::invalid_argument("letter l is not an element of H");
    }
  }  // namespace detail

  // True iff the word represents the identity of H.  After all pinches are
  // removed, any surviving t letters share one sign, so the word is trivial
  // exactly when nothing survives.
  inline bool britton_is_identity(LetterSeq const& word) {
    detail::BrittonStack s;
    for (Letter l : word) {
      detail::push_expanded(s, l);
    }
    return s.empty();
  }

}  // namespace wbound

#endif  // WBOUND_BRITTON_HPP_
