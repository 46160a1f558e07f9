#include "epigraph/rng.h"

#include <cmath>

namespace epigraph {

double Rng::exponential(double rate) { return -std::log(uniform()) / rate; }

uint64_t Rng::below(uint64_t bound) {
  // Reject the top sliver so that every residue is equally likely.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

}  // namespace epigraph
