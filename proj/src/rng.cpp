#include "elnet/rng.hpp"

namespace elnet {

Rat RatRng::positive(unsigned max_num, unsigned max_den) {
  std::uniform_int_distribution<unsigned> num(1, max_num), den(1, max_den);
  return Rat(num(engine_), den(engine_));
}

Rat RatRng::any(unsigned max_num, unsigned max_den) {
  std::uniform_int_distribution<int> num(-int(max_num), int(max_num));
  std::uniform_int_distribution<unsigned> den(1, max_den);
  return Rat(num(engine_), den(engine_));
}

std::size_t RatRng::index(std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> d(lo, hi);
  return d(engine_);
}

Network RatRng::network(std::size_t boundary_count, std::size_t max_interior,
                        std::size_t extra_edges) {
  std::size_t ni = index(0, max_interior);
  std::vector<std::string> interior;
  for (std::size_t i = 0; i < ni; ++i) interior.push_back("v" + std::to_string(i + 1));

  std::vector<std::string> names;
  for (std::size_t b = 1; b <= boundary_count; ++b) names.push_back(std::to_string(b));

  std::vector<Edge> edges;
  // anchor each interior vertex to an earlier vertex (boundary included)
  for (std::size_t i = 0; i < ni; ++i) {
    std::string prev = names[index(0, names.size() - 1)];
    names.push_back(interior[i]);
    edges.push_back({prev, interior[i], positive()});
  }
  for (std::size_t e = 0; e < extra_edges; ++e) {
    std::size_t a = index(0, names.size() - 1), b = index(0, names.size() - 1);
    if (a == b) continue;  // keep random networks loop-free
    edges.push_back({names[a], names[b], positive()});
  }
  return Network(boundary_count, std::move(interior), std::move(edges));
}

}  // namespace elnet
