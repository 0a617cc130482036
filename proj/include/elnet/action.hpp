#pragma once

#include <cstddef>
#include <vector>

#include "elnet/network.hpp"

namespace elnet {

// Semigroup word u_{i1}(a1) ... u_{il}(al). Indices run in 1..2n+2 at the
// network/response level; 2n+1 and 2n+2 are the wrap-around operations and are
// flagged extended (they are not EL_2n generators).
struct GenLetter {
  std::size_t index;
  Rat param;
};

struct GenWord {
  std::size_t n = 0;
  std::vector<GenLetter> letters;

  bool has_extended() const {
    for (const auto& l : letters)
      if (l.index > 2 * n) return true;
    return false;
  }
};

// Validates index ranges and nonnegative parameters.
GenWord make_word(std::size_t n, std::vector<GenLetter> letters);

// Boundary spike at k: new boundary vertex named k, old k becomes interior,
// joined by an edge of weight 1/t. t = 0 is the identity.
Network adjoin_spike(const Network& n, std::size_t k, const Rat& t);

// Boundary edge k -- k+1 (mod n+1) of weight t. t = 0 is the identity.
Network adjoin_edge(const Network& n, std::size_t k, const Rat& t);

// The response-matrix operation v_i(t). Requires t >= 0.
ResponseMatrix act_response(const ResponseMatrix& l, std::size_t i, const Rat& t);

// Same formulas with any rational t; the odd-index denominator is still
// checked at runtime.
ResponseMatrix act_response_unchecked(const ResponseMatrix& l, std::size_t i, const Rat& t);

// u_{i1}(a1) ... u_{il}(al) . L : the rightmost letter acts first.
ResponseMatrix act_word(const ResponseMatrix& l, const GenWord& word);
Network act_word(const Network& n, const GenWord& word);

}  // namespace elnet
