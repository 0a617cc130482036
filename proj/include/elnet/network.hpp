#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "elnet/linalg.hpp"
#include "elnet/mat.hpp"

namespace elnet {

struct Edge {
  std::string u, v;
  Rat w;
};

// Electrical network in a disk: boundary vertices are the labels "1".."n+1"
// in circular order, interior vertices carry opaque string ids. Multi-edges
// and self-loops are allowed; zero or negative weights are not.
class Network {
 public:
  Network(std::size_t boundary_count, std::vector<std::string> interior,
          std::vector<Edge> edges);

  static Network empty(std::size_t boundary_count) {
    return Network(boundary_count, {}, {});
  }

  std::size_t boundary_count() const { return boundary_count_; }
  const std::vector<std::string>& interior() const { return interior_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_boundary(const std::string& vertex) const;
  bool has_vertex(const std::string& vertex) const;
  // Position in the Kirchhoff ordering: boundary 1..n+1 first, then interior
  // in list order.
  std::size_t vertex_index(const std::string& vertex) const;
  std::string boundary_name(std::size_t label) const;  // label in 1..n+1

  // Incident edge indices; self-loops appear once.
  std::vector<std::size_t> incident_edges(const std::string& vertex) const;

  // An interior id not yet in use, derived from `base`.
  std::string fresh_interior_id(const std::string& base) const;

 private:
  std::size_t boundary_count_;
  std::vector<std::string> interior_;
  std::vector<Edge> edges_;
};

using ResponseMatrix = Mat;  // symmetric, zero row sums, (n+1)x(n+1)

struct LocalMove {
  enum class Kind { series, parallel, loop, pendant, y_to_delta, delta_to_y };
  Kind kind;
  std::string vertex;               // series / pendant / y_to_delta site
  std::vector<std::size_t> edges;   // parallel (2), loop (1), delta_to_y (3)
};

LocalMove::Kind move_kind_from_string(const std::string& s);

// Weighted graph Laplacian over all vertices, boundary first. A self-loop
// contributes its weight once to the diagonal and nothing off-diagonal.
Mat kirchhoff(const Network& n);

// L(N): Schur complement of the Kirchhoff matrix over the interior block.
// Throws SingularInterior when some interior part has no path to the boundary.
ResponseMatrix response(const Network& n);

// Applies one electrically-equivalent transformation. Throws MoveNotApplicable
// with a site diagnosis when the precondition fails.
Network apply_local_move(const Network& n, const LocalMove& m);

}  // namespace elnet
