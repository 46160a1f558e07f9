#include "epigraph/oracle.h"

#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "epigraph/error.h"

namespace epigraph {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

void check_oracle_size(const Graph& g, int max_n) {
  if (g.n() > max_n) {
    throw SizeCapExceeded("oracle needs n <= " + std::to_string(max_n) + ", got " +
                          std::to_string(g.n()));
  }
  if (!g.connected()) throw ConnectivityError("resilience is only defined on connected graphs");
}

using Entry = std::pair<int, uint64_t>;  // (bottleneck value, bag)
using MinHeap = std::priority_queue<Entry, std::vector<Entry>, std::greater<>>;

}  // namespace

int oracle_resilience(const Graph& g, NodeSet a, int max_n) {
  check_oracle_size(g, max_n);
  if (!g.contains(a)) throw InvalidArgument("bag " + to_string(a) + " is not over the graph");
  if (a.empty()) return 0;
  const uint64_t full = g.vertices().mask();
  std::vector<int> dist(full + 1, kUnreached);
  std::vector<uint8_t> done(full + 1, 0);
  MinHeap heap;
  dist[a.mask()] = 0;
  heap.push({0, a.mask()});
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (done[s]) continue;
    done[s] = 1;
    if (s == 0) return d;
    auto relax = [&](uint64_t b) {
      const int nd = std::max(d, cut(g, NodeSet::FromMask(b)));
      if (nd < dist[b]) {
        dist[b] = nd;
        heap.push({nd, b});
      }
    };
    const uint64_t outside = full & ~s;
    for (uint64_t extra = outside;; extra = (extra - 1) & outside) {
      const uint64_t b0 = s | extra;
      if (extra != 0) relax(b0);
      for (uint64_t rest = s; rest != 0; rest &= rest - 1) relax(b0 & ~(rest & -rest));
      if (extra == 0) break;
    }
  }
  throw DomainError("empty bag unreachable");  // every bag reaches it by removals
}

std::vector<int> oracle_resilience_all(const Graph& g, int max_n) {
  check_oracle_size(g, max_n);
  const uint64_t full = g.vertices().mask();
  std::vector<int> dist(full + 1, kUnreached);
  std::vector<uint8_t> done(full + 1, 0);
  MinHeap heap;
  dist[0] = 0;
  heap.push({0, 0});
  while (!heap.empty()) {
    auto [d, b] = heap.top();
    heap.pop();
    if (done[b]) continue;
    done[b] = 1;
    // Every S with |S \ B| <= 1 can step to B and pays max(cut(B), d).
    const int via = std::max(d, cut(g, NodeSet::FromMask(b)));
    auto relax = [&](uint64_t s) {
      if (s != b && via < dist[s]) {
        dist[s] = via;
        heap.push({via, s});
      }
    };
    const uint64_t outside = full & ~b;
    for (uint64_t kept = b;; kept = (kept - 1) & b) {
      relax(kept);
      for (uint64_t rest = outside; rest != 0; rest &= rest - 1) relax(kept | (rest & -rest));
      if (kept == 0) break;
    }
  }
  return dist;
}

}  // namespace epigraph
