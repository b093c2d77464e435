#ifndef LINKFORGE_RNG_HH
#define LINKFORGE_RNG_HH

#include <cstdint>
#include <random>

namespace linkforge {

// splitmix64, used to derive well-separated engine seeds from (seed, stream) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seeded generator. mt19937_64 output is fully specified by the
// standard; u01() avoids std::uniform_real_distribution, whose mapping is
// implementation-defined. Per-stream forks keep loss draws from perturbing
// event ordering between unrelated consumers.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)), seed_(seed) {}

  // Independent child stream; fork(id) is stable for a given (seed, id).
  Rng fork(std::uint64_t stream_id) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream_id + 0x51ed2701ULL)));
  }

  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

} // namespace linkforge

#endif
