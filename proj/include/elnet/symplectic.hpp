#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "elnet/action.hpp"
#include "elnet/linalg.hpp"
#include "elnet/perms.hpp"

namespace elnet {

// The generator images phi(e_1)..phi(e_2n) inside sp_2n: odd generators carry
// the upper-right block a_i a_i^T, even ones the lower-left block b_i b_i^T.
struct ElGenerators {
  std::size_t n;
  std::vector<Mat> mats;  // 2n matrices of size 2n x 2n
};

ElGenerators el_generators(std::size_t n);

struct SpElement {
  std::size_t n;
  Mat mat;  // 2n x 2n

  friend bool operator==(const SpElement&, const SpElement&) = default;
};

// True iff mat^T J mat = J for the symplectic form fixed by the block
// convention A = -D^T, B = B^T, C = C^T. Debug check, not enforced elsewhere.
bool is_symplectic(const SpElement& m);

// Product of I + a_j phi(e_{i_j}), left to right. Indices must lie in 1..2n.
SpElement sp_of_word(const GenWord& word);

struct BraidTriple {
  Rat a, b, c;
  Rat tau;
};

// (b', a', c') with a' = a+c+tau*abc, so that
// u_i(a) u_j(b) u_i(c) = u_j(b') u_i(a') u_j(c').
std::tuple<Rat, Rat, Rat> braid_move(const BraidTriple& t);

struct NormalWord {
  std::vector<std::size_t> word;  // reduced, lex-smallest in its commutation class
  std::vector<Rat> params;        // positive
  Permutation perm;               // in S_{2n+1}
};

// Rewrites a positive word via merge/commutation/braid moves into a reduced
// word, then commutes it to the lexicographically smallest word of its
// commutation class. Throws NonPositiveParameter unless all params > 0.
NormalWord normalize_word(const GenWord& word);

// The staircase reduced word [1][2 1][3 2 1]...[2n ... 1] of the top cell,
// as generator indices.
std::vector<std::size_t> staircase_word(std::size_t n);

// Recovers the (2n+1)(2n)/2 positive staircase parameters from the matrix,
// block by block. Throws NotInTopCell / ResidueNotIdentity on failure.
std::vector<Rat> factorize_top_cell(const SpElement& m, std::size_t n);

}  // namespace elnet
