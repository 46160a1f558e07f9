#ifndef EPIGRAPH_RNG_H_
#define EPIGRAPH_RNG_H_

#include <cstdint>
#include <random>

namespace epigraph {

// SplitMix64 finaliser (Steele, Lea, Flood 2014).
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of stream `stream` under master seed `master`:
//   derive_seed(m, s) = mix64(mix64(m) ^ mix64(s + 1))
// Replication i of an experiment with master seed m uses derive_seed(m, i).
constexpr uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return mix64(mix64(master) ^ mix64(stream + 1));
}

// mt19937_64 with platform-independent conversions. The std distributions
// are implementation-defined, so every draw here is spelled out.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  uint64_t next() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Inverse-transform exponential; strictly positive.
  double exponential(double rate);

  // Uniform on {0, ..., bound-1}; rejection keeps it unbiased.
  uint64_t below(uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

  // Independent child stream, e.g. the policy's randomness inside a run.
  Rng split(uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace epigraph

#endif  // EPIGRAPH_RNG_H_
