#include "elnet/network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace elnet {

namespace {

bool is_boundary_label(const std::string& s, std::size_t boundary_count) {
  if (s.empty() || s.size() > 9) return false;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return false;
  if (s.size() > 1 && s[0] == '0') return false;
  std::size_t v = std::stoul(s);
  return v >= 1 && v <= boundary_count;
}

}  // namespace

Network::Network(std::size_t boundary_count, std::vector<std::string> interior,
                 std::vector<Edge> edges)
    : boundary_count_(boundary_count),
      interior_(std::move(interior)),
      edges_(std::move(edges)) {
  std::set<std::string> seen;
  for (const auto& id : interior_) {
    if (id.empty()) throw ValidationError("empty interior vertex id");
    if (is_boundary_label(id, boundary_count_))
      throw ValidationError("interior id \"" + id + "\" collides with a boundary label");
    if (!seen.insert(id).second)
      throw ValidationError("duplicate interior vertex id \"" + id + "\"");
  }
  for (const auto& e : edges_) {
    if (e.w <= 0)
      throw ValidationError("edge weight must be positive, got " + to_string(e.w));
    for (const auto& v : {e.u, e.v})
      if (!has_vertex(v))
        throw ValidationError("edge endpoint \"" + v + "\" is not a vertex");
  }
}

bool Network::is_boundary(const std::string& vertex) const {
  return is_boundary_label(vertex, boundary_count_);
}

bool Network::has_vertex(const std::string& vertex) const {
  return is_boundary(vertex) ||
         std::find(interior_.begin(), interior_.end(), vertex) != interior_.end();
}

std::size_t Network::vertex_index(const std::string& vertex) const {
  if (is_boundary(vertex)) return std::stoul(vertex) - 1;
  auto it = std::find(interior_.begin(), interior_.end(), vertex);
  if (it == interior_.end()) throw IndexOutOfRange("unknown vertex \"" + vertex + "\"");
  return boundary_count_ + std::size_t(it - interior_.begin());
}

std::string Network::boundary_name(std::size_t label) const {
  if (label < 1 || label > boundary_count_)
    throw IndexOutOfRange("boundary label out of range");
  return std::to_string(label);
}

std::vector<std::size_t> Network::incident_edges(const std::string& vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == vertex || edges_[i].v == vertex) out.push_back(i);
  return out;
}

std::string Network::fresh_interior_id(const std::string& base) const {
  if (!has_vertex(base) && !base.empty() && !is_boundary(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!has_vertex(candidate)) return candidate;
  }
}

LocalMove::Kind move_kind_from_string(const std::string& s) {
  using K = LocalMove::Kind;
  if (s == "series") return K::series;
  if (s == "parallel") return K::parallel;
  if (s == "loop") return K::loop;
  if (s == "pendant") return K::pendant;
  if (s == "y_to_delta") return K::y_to_delta;
  if (s == "delta_to_y") return K::delta_to_y;
  throw ValidationError("unknown move kind \"" + s + "\"");
}

Mat kirchhoff(const Network& n) {
  const std::size_t size = n.boundary_count() + n.interior().size();
  Mat k(size, size);
  for (const auto& e : n.edges()) {
    std::size_t i = n.vertex_index(e.u), j = n.vertex_index(e.v);
    if (i == j) {
      k.at(i, i) += e.w;  // self-loop: incident once, no off-diagonal term
    } else {
      k.at(i, j) -= e.w;
      k.at(j, i) -= e.w;
      k.at(i, i) += e.w;
      k.at(j, j) += e.w;
    }
  }
  return k;
}

ResponseMatrix response(const Network& n) {
  std::set<std::size_t> interior;
  for (std::size_t i = 0; i < n.interior().size(); ++i)
    interior.insert(n.boundary_count() + i);
  try {
    return schur_complement(kirchhoff(n), interior);
  } catch (const SingularInterior&) {
    throw SingularInterior("interior block is singular (interior vertex with no path to the boundary)");
  }
}

namespace {

// Non-loop incident edges, and whether the vertex carries a self-loop.
std::pair<std::vector<std::size_t>, bool> proper_incident(const Network& n,
                                                          const std::string& v) {
  std::vector<std::size_t> out;
  bool loop = false;
  for (std::size_t i : n.incident_edges(v)) {
    const Edge& e = n.edges()[i];
    if (e.u == e.v)
      loop = true;
    else
      out.push_back(i);
  }
  return {out, loop};
}

std::string other_end(const Edge& e, const std::string& v) {
  return e.u == v ? e.v : e.u;
}

Network drop_vertex_and_edges(const Network& n, const std::string& v,
                              const std::vector<std::size_t>& drop,
                              std::vector<Edge> extra,
                              std::vector<std::string> extra_interior = {}) {
  std::vector<std::string> interior;
  for (const auto& id : n.interior())
    if (id != v) interior.push_back(id);
  for (auto& id : extra_interior) interior.push_back(std::move(id));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n.edges().size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end())
      edges.push_back(n.edges()[i]);
  for (auto& e : extra) edges.push_back(std::move(e));
  return Network(n.boundary_count(), std::move(interior), std::move(edges));
}

}  // namespace

Network apply_local_move(const Network& n, const LocalMove& m) {
  using K = LocalMove::Kind;
  auto need_edge = [&](std::size_t i) -> const Edge& {
    if (i >= n.edges().size())
      throw MoveNotApplicable("edge index " + std::to_string(i) + " out of range");
    return n.edges()[i];
  };
  switch (m.kind) {
    case K::series: {
      const std::string& v = m.vertex;
      if (!n.has_vertex(v) || n.is_boundary(v))
        throw MoveNotApplicable("series site \"" + v + "\" is not an interior vertex");
      auto [inc, loop] = proper_incident(n, v);
      if (loop || inc.size() != 2)
        throw MoveNotApplicable("series site \"" + v + "\" is not a loop-free degree-2 vertex");
      const Edge& e1 = n.edges()[inc[0]];
      const Edge& e2 = n.edges()[inc[1]];
      Rat w = e1.w * e2.w / (e1.w + e2.w);
      return drop_vertex_and_edges(n, v, inc, {{other_end(e1, v), other_end(e2, v), w}});
    }
    case K::parallel: {
      if (m.edges.size() != 2)
        throw MoveNotApplicable("parallel move needs exactly two edge indices");
      const Edge& e1 = need_edge(m.edges[0]);
      const Edge& e2 = need_edge(m.edges[1]);
      if (m.edges[0] == m.edges[1])
        throw MoveNotApplicable("parallel move needs two distinct edges");
      bool same = (e1.u == e2.u && e1.v == e2.v) || (e1.u == e2.v && e1.v == e2.u);
      if (!same || e1.u == e1.v)
        throw MoveNotApplicable("edges do not form a loop-free multi-edge pair");
      return drop_vertex_and_edges(n, "", {m.edges[0], m.edges[1]},
                                   {{e1.u, e1.v, e1.w + e2.w}});
    }
    case K::loop: {
      if (m.edges.size() != 1)
        throw MoveNotApplicable("loop removal needs exactly one edge index");
      const Edge& e = need_edge(m.edges[0]);
      if (e.u != e.v)
        throw MoveNotApplicable("edge " + std::to_string(m.edges[0]) + " is not a self-loop");
      return drop_vertex_and_edges(n, "", {m.edges[0]}, {});
    }
    case K::pendant: {
      const std::string& v = m.vertex;
      if (!n.has_vertex(v) || n.is_boundary(v))
        throw MoveNotApplicable("pendant site \"" + v + "\" is not an interior vertex");
      auto [inc, loop] = proper_incident(n, v);
      if (loop || inc.size() != 1)
        throw MoveNotApplicable("pendant site \"" + v + "\" is not a degree-1 vertex");
      return drop_vertex_and_edges(n, v, inc, {});
    }
    case K::y_to_delta: {
      const std::string& v = m.vertex;
      if (!n.has_vertex(v) || n.is_boundary(v))
        throw MoveNotApplicable("Y site \"" + v + "\" is not an interior vertex");
      auto [inc, loop] = proper_incident(n, v);
      if (loop || inc.size() != 3)
        throw MoveNotApplicable("Y site \"" + v + "\" is not a loop-free degree-3 vertex");
      const Edge& ea = n.edges()[inc[0]];
      const Edge& eb = n.edges()[inc[1]];
      const Edge& ec = n.edges()[inc[2]];
      std::string x = other_end(ea, v), y = other_end(eb, v), z = other_end(ec, v);
      if (x == y || y == z || x == z)
        throw MoveNotApplicable("Y site \"" + v + "\" has coincident neighbors");
      Rat s = ea.w + eb.w + ec.w;
      // edge opposite each leg
      return drop_vertex_and_edges(n, v, inc,
                                   {{y, z, eb.w * ec.w / s},
                                    {x, z, ea.w * ec.w / s},
                                    {x, y, ea.w * eb.w / s}});
    }
    case K::delta_to_y: {
      if (m.edges.size() != 3)
        throw MoveNotApplicable("delta_to_y needs exactly three edge indices");
      const Edge& eA = need_edge(m.edges[0]);
      const Edge& eB = need_edge(m.edges[1]);
      const Edge& eC = need_edge(m.edges[2]);
      if (m.edges[0] == m.edges[1] || m.edges[1] == m.edges[2] || m.edges[0] == m.edges[2])
        throw MoveNotApplicable("delta_to_y needs three distinct edges");
      // triangle vertices: x opposite eA, y opposite eB, z opposite eC
      std::set<std::string> verts{eA.u, eA.v, eB.u, eB.v, eC.u, eC.v};
      if (verts.size() != 3 || eA.u == eA.v || eB.u == eB.v || eC.u == eC.v)
        throw MoveNotApplicable("edges do not form a triangle");
      auto opposite = [&](const Edge& e) -> std::string {
        for (const auto& w : verts)
          if (w != e.u && w != e.v) return w;
        throw MoveNotApplicable("edges do not form a triangle");
      };
      std::string x = opposite(eA), y = opposite(eB), z = opposite(eC);
      if (x == y || y == z || x == z)
        throw MoveNotApplicable("edges do not form a triangle");
      Rat s = eA.w * eB.w + eA.w * eC.w + eB.w * eC.w;
      std::string v = n.fresh_interior_id("y");
      std::vector<std::size_t> drop(m.edges.begin(), m.edges.end());
      return drop_vertex_and_edges(n, "", drop,
                                   {{v, x, s / eA.w}, {v, y, s / eB.w}, {v, z, s / eC.w}},
                                   {v});
    }
  }
  throw MoveNotApplicable("unknown move kind");
}

}  // namespace elnet
