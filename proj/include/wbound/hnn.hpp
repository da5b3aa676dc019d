#ifndef WBOUND_HNN_HPP_
#define WBOUND_HNN_HPP_

#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <map>        // for map
#include <stdexcept>  // for invalid_argument, length_error
#include <utility>    // for pair
#include <vector>     // for vector

#include "checked.hpp"
#include "word.hpp"

namespace wbound {

  // Normal form t^p b^q w of an element of
  //   H = < a, b, t | t b t^-1 = b, t a t^-1 = b a >
  // where w is a freely reduced word in a, b not beginning with b^{+-1}.
  struct HNormalForm {
    integer     p = 0;
    integer     q = 0;
    ReducedWord w;

    // t^p u for an arbitrary reduced u in F(a, b): the leading b-run of u
    // becomes q.
    static HNormalForm from_parts(integer p, ReducedWord u) {
      HNormalForm h;
      h.p = p;
      h.q = u.strip_leading(Symbol::b);
      h.w = std::move(u);
      return h;
    }

    bool is_identity() const noexcept {
      return p == 0 && q == 0 && w.empty();
    }

    bool is_valid() const {
      for (Letter l : w.letters()) {
        if (l.symbol != Symbol::a && l.symbol != Symbol::b) {
          return false;
        }
      }
      return w.empty() || w.front().symbol != Symbol::b;
    }

    friend bool operator==(HNormalForm const&, HNormalForm const&) = default;
    friend auto operator<=>(HNormalForm const&,
                            HNormalForm const&) = default;
  };

  inline HNormalForm h_identity() {
    return HNormalForm{};
  }

  inline HNormalForm h_b_power(integer n) {
    HNormalForm h;
    h.q = n;
    return h;
  }

  inline HNormalForm h_t_power(integer n) {
    HNormalForm h;
    h.p = n;
    return h;
  }

  // Spelling t^p b^q w as a letter sequence.
  inline LetterSeq spell(HNormalForm const& h) {
    LetterSeq out;
    auto      push_power = [&out](Letter l, integer k) {
      Letter s = k >= 0 ? l : l.inverse();
      for (integer i = 0; i < checked_abs(k); ++i) {
        out.push_back(s);
      }
    };
    push_power(letters::t, h.p);
    push_power(letters::b, h.q);
    for (Letter l : h.w.letters()) {
      out.push_back(l);
    }
    return out;
  }

  inline std::string to_string(HNormalForm const& h) {
    return "p=" + std::to_string(h.p) + " q=" + std::to_string(h.q) + " w=\""
           + to_string(h.w) + "\"";
  }

  ////////////////////////////////////////////////////////////////////////
  // Right multiplication by generators
  ////////////////////////////////////////////////////////////////////////

  // h * t^k = t^(p+k) b^q sigma^k(w)
  inline void right_mul_t_power(HNormalForm& h, integer k) {
    if (k == 0) {
      return;
    }
    ReducedWord image = sigma_power(h.w, k);
    h.p               = checked_add(h.p, k);
    h.q               = checked_add(h.q, image.strip_leading(Symbol::b));
    h.w               = std::move(image);
  }

  inline void right_mul_letter(HNormalForm& h, Letter l) {
    using namespace letters;
    switch (l.symbol) {
      case Symbol::a:
        // w does not start with b, so the only cancellation is at the end and
        // cannot expose a leading b
        h.w.append(l);
        return;
      case Symbol::b:
        if (h.w.empty()) {
          h.q = checked_add(h.q, l.sign);
        } else {
          h.w.append(l);
        }
        return;
      case Symbol::t:
        right_mul_t_power(h, l.sign);
        return;
      case Symbol::y:
        // y = b^-1 t
        if (l.sign > 0) {
          right_mul_letter(h, B);
          right_mul_letter(h, t);
        } else {
          right_mul_letter(h, T);
          right_mul_letter(h, b);
        }
        return;
      case Symbol::x:
        // x = a^-1 b^-1 t
        if (l.sign > 0) {
          right_mul_letter(h, A);
          right_mul_letter(h, B);
          right_mul_letter(h, t);
        } else {
          right_mul_letter(h, T);
          right_mul_letter(h, b);
          right_mul_letter(h, a);
        }
        return;
      case Symbol::l:
        break;
    }
    throw std::invalid_argument("letter l is not an element of H");
  }

  inline HNormalForm h_normalize(LetterSeq const& word) {
    HNormalForm h;
    for (Letter l : word) {
      right_mul_letter(h, l);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group law
  ////////////////////////////////////////////////////////////////////////

  //   t^p1 b^q1 w1 * t^p2 b^q2 w2 = t^(p1+p2) b^q1 sigma^p2(w1) b^q2 w2
  inline HNormalForm h_mul(HNormalForm const& g, HNormalForm const& h) {
    ReducedWord u = power(letters::b, g.q);
    u.append(sigma_power(g.w, h.p));
    u.append(power(letters::b, h.q));
    u.append(h.w);
    return HNormalForm::from_parts(checked_add(g.p, h.p), std::move(u));
  }

  //   (t^p u)^-1 = t^-p sigma^-p(u^-1)  with u = b^q w
  inline HNormalForm h_inv(HNormalForm const& g) {
    ReducedWord u = invert(g.w);
    u.append(power(letters::b, checked_neg(g.q)));
    return HNormalForm::from_parts(checked_neg(g.p),
                                   sigma_power(u, checked_neg(g.p)));
  }

  ////////////////////////////////////////////////////////////////////////
  // The retraction pi : H -> Z and its translates
  ////////////////////////////////////////////////////////////////////////

  inline integer pi(HNormalForm const& h) noexcept {
    return h.q;
  }

  // pi_u(h) = pi(u^-1 h)
  inline integer pi_u(HNormalForm const& u, HNormalForm const& h) {
    return pi(h_mul(h_inv(u), h));
  }

  ////////////////////////////////////////////////////////////////////////
  // Cosets of <b>
  ////////////////////////////////////////////////////////////////////////

  // Transversal of <b> in H: strip the trailing b-power of w; when w is empty
  // the whole b^q is the offset.  Element = rep * b^offset.
  struct CosetRep {
    HNormalForm rep;
    integer     offset = 0;

    friend bool operator==(CosetRep const&, CosetRep const&) = default;
  };

  inline CosetRep coset_rep(HNormalForm const& h) {
    CosetRep c;
    c.rep = h;
    if (h.w.empty()) {
      c.rep.q  = 0;
      c.offset = h.q;
    } else {
      c.offset = c.rep.w.strip_trailing(Symbol::b);
    }
    return c;
  }

  inline bool is_transversal_rep(HNormalForm const& h) {
    if (!h.is_valid()) {
      return false;
    }
    return h.w.empty() ? h.q == 0 : h.w.back().symbol != Symbol::b;
  }

  enum class CosetKind { translation, constant };

  // pi restricted to u<b>: n |-> c + n (translation) or n |-> c (constant).
  struct CosetShape {
    CosetKind kind;
    integer   c;

    integer evaluate(integer n) const {
      return kind == CosetKind::translation ? checked_add(c, n) : c;
    }

    friend bool operator==(CosetShape const&, CosetShape const&) = default;
  };

  inline CosetShape coset_shape(HNormalForm const& u) {
    return CosetShape{
        u.w.empty() ? CosetKind::translation : CosetKind::constant, u.q};
  }

  // u<b> and u'<b> are parallel iff u^-1 u' = t^p b^q.
  inline bool is_parallel(HNormalForm const& u, HNormalForm const& v) {
    return h_mul(h_inv(u), v).w.empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Explicit witnesses
  ////////////////////////////////////////////////////////////////////////

  // The word [t^n, a] = t^n a t^-n a^-1 together with its normal form, which
  // is b^n.
  inline std::pair<LetterSeq, HNormalForm> commutator_power(integer n) {
    if (n < 1) {
      throw std::invalid_argument("commutator_power expects n >= 1");
    }
    LetterSeq word;
    for (integer i = 0; i < n; ++i) {
      word.push_back(letters::t);
    }
    word.push_back(letters::a);
    for (integer i = 0; i < n; ++i) {
      word.push_back(letters::T);
    }
    word.push_back(letters::A);
    HNormalForm h = h_normalize(word);
    return {std::move(word), std::move(h)};
  }

  inline constexpr std::size_t max_ball_radius = 8;

  // Breadth-first search of the Cayley graph of H with respect to
  // {a, b, t}^{+-1}; maps each element within distance `radius` of 1 to its
  // distance.
  inline std::map<HNormalForm, std::size_t> cayley_ball(std::size_t radius) {
    if (radius > max_ball_radius) {
      throw std::length_error("cayley_ball: radius "
                              + std::to_string(radius) + " exceeds limit "
                              + std::to_string(max_ball_radius));
    }
    using namespace letters;
    static constexpr Letter gens[] = {a, A, b, B, t, T};

    std::map<HNormalForm, std::size_t> dist;
    std::vector<HNormalForm>           frontier{h_identity()};
    dist.emplace(h_identity(), 0);
    for (std::size_t r = 1; r <= radius; ++r) {
      std::vector<HNormalForm> next;
      for (auto const& h : frontier) {
        for (Letter s : gens) {
          HNormalForm g = h;
          right_mul_letter(g, s);
          if (dist.emplace(g, r).second) {
            next.push_back(std::move(g));
          }
        }
      }
      frontier = std::move(next);
    }
    return dist;
  }

}  // namespace wbound

#endif  // WBOUND_HNN_HPP_
