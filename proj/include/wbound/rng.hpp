#ifndef WBOUND_RNG_HPP_
#define WBOUND_RNG_HPP_

#include <cstdint>    // for uint64_t, int64_t
#include <random>     // for mt19937_64
#include <stdexcept>  // for invalid_argument

namespace wbound {

  // Fuzzing RNG.  The engine is std::mt19937_64, whose output sequence is
  // fixed by the standard; the distributions below are our own because the
  // standard library ones are implementation-defined.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() {
      return _engine();
    }

    // Uniform in [0, n), by rejection.
    std::uint64_t below(std::uint64_t n) {
      if (n == 0) {
        throw std::invalid_argument("Rng::below(0)");
      }
      std::uint64_t const limit = UINT64_MAX - UINT64_MAX % n;
      std::uint64_t       v;
      do {
        v = _engine();
      } while (v >= limit);
      return v % n;
    }

    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
      if (hi < lo) {
        throw std::invalid_argument("Rng::between: empty range");
      }
      auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
      if (span == UINT64_MAX) {
        return static_cast<std::int64_t>(_engine());
      }
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo)
                                       + below(span + 1));
    }

    bool chance(std::uint64_t num, std::uint64_t den) {
      return below(den) < num;
    }

   private:
    std::mt19937_64 _engine;
  };

  // SplitMix64 finaliser; used to derive independent per-check and per-case
  // seeds from one master seed.
  constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

}  // namespace wbound

#endif  // WBOUND_RNG_HPP_
