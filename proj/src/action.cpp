#include "elnet/action.hpp"

namespace elnet {

GenWord make_word(std::size_t n, std::vector<GenLetter> letters) {
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > 2 * n + 2)
      throw IndexOutOfRange("generator index " + std::to_string(l.index) +
                            " out of range 1.." + std::to_string(2 * n + 2));
    if (l.param < 0)
      throw NegativeParameter("generator parameter " + to_string(l.param) +
                              " must be nonnegative");
  }
  return GenWord{n, std::move(letters)};
}

Network adjoin_spike(const Network& n, std::size_t k, const Rat& t) {
  if (k < 1 || k > n.boundary_count())
    throw IndexOutOfRange("spike index out of range");
  if (t < 0) throw NegativeParameter("spike parameter must be nonnegative");
  if (t == 0) return n;

  std::string old_name = n.boundary_name(k);
  std::string renamed = n.fresh_interior_id("b" + old_name);
  std::vector<Edge> edges;
  for (Edge e : n.edges()) {
    if (e.u == old_name) e.u = renamed;
    if (e.v == old_name) e.v = renamed;
    edges.push_back(std::move(e));
  }
  edges.push_back({old_name, renamed, Rat(1) / t});
  std::vector<std::string> interior = n.interior();
  interior.push_back(renamed);
  return Network(n.boundary_count(), std::move(interior), std::move(edges));
}

Network adjoin_edge(const Network& n, std::size_t k, const Rat& t) {
  if (k < 1 || k > n.boundary_count())
    throw IndexOutOfRange("edge index out of range");
  if (t < 0) throw NegativeParameter("edge parameter must be nonnegative");
  if (t == 0) return n;
  std::size_t next = k % n.boundary_count() + 1;
  std::vector<Edge> edges = n.edges();
  edges.push_back({n.boundary_name(k), n.boundary_name(next), t});
  return Network(n.boundary_count(), n.interior(), std::move(edges));
}

ResponseMatrix act_response_unchecked(const ResponseMatrix& l, std::size_t i, const Rat& t) {
  const std::size_t size = l.rows();  // n+1
  if (!l.square() || size == 0) throw DimensionMismatch("response matrix must be square");
  if (i < 1 || i > 2 * size) throw IndexOutOfRange("generator index out of range");
  ResponseMatrix out = l;
  std::size_t k = (i + 1) / 2;  // 1-based boundary index
  if (i % 2 == 1) {
    Rat den = t * l.at(k - 1, k - 1) + 1;
    if (den == 0) throw SingularDenominator("t*x_kk + 1 vanished");
    for (std::size_t p = 0; p < size; ++p)
      for (std::size_t q = 0; q < size; ++q)
        out.at(p, q) -= t * l.at(p, k - 1) * l.at(k - 1, q) / den;
  } else {
    // rank-one update (eps_k - eps_{k+1})(eps_k - eps_{k+1})^T * t, the
    // response of a fresh boundary edge k -- k+1 (mod n+1)
    std::size_t knext = k % size + 1;
    auto delta = [&](std::size_t p) -> int {
      return int(p + 1 == k) - int(p + 1 == knext);
    };
    for (std::size_t p = 0; p < size; ++p)
      for (std::size_t q = 0; q < size; ++q)
        out.at(p, q) += Rat(delta(p) * delta(q)) * t;
  }
  return out;
}

ResponseMatrix act_response(const ResponseMatrix& l, std::size_t i, const Rat& t) {
  if (t < 0) throw NegativeParameter("parameter must be nonnegative");
  return act_response_unchecked(l, i, t);
}

ResponseMatrix act_word(const ResponseMatrix& l, const GenWord& word) {
  if (l.rows() != word.n + 1)
    throw DimensionMismatch("word rank does not match response matrix size");
  ResponseMatrix out = l;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = act_response(out, it->index, it->param);
  return out;
}

Network act_word(const Network& n, const GenWord& word) {
  if (n.boundary_count() != word.n + 1)
    throw DimensionMismatch("word rank does not match network boundary count");
  Network out = n;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    std::size_t k = (it->index + 1) / 2;
    out = it->index % 2 == 1 ? adjoin_spike(out, k, it->param)
                             : adjoin_edge(out, k, it->param);
  }
  return out;
}

}  // namespace elnet
