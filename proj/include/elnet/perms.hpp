#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "elnet/action.hpp"
#include "elnet/network.hpp"

namespace elnet {

// One-line notation w(1)..w(m), values 1..m.
using Permutation = std::vector<std::size_t>;

Permutation perm_identity(std::size_t m);
bool perm_is_valid(const Permutation& w);
std::size_t perm_inversions(const Permutation& w);

// Product s_{i1}...s_{il} evaluated so that a word and its one-line notation
// match the usual reduced-word conventions: appending a letter i swaps the
// values i and i+1. Second component: whether the word is reduced.
std::pair<Permutation, bool> perm_of_word(const std::vector<std::size_t>& word,
                                          std::size_t m);

// True iff the word can be the last letter of some reduced word of w,
// i.e. value i+1 occurs before value i in one-line notation.
bool has_trailing_letter(const Permutation& w, std::size_t i);

// w with values i and i+1 swapped (drops/adds a trailing letter i).
Permutation swap_values(const Permutation& w, std::size_t i);

// A deterministic reduced word for w (smallest trailing letter peeled last).
std::vector<std::size_t> reduced_word(const Permutation& w);

// All reduced words of w. Intended for short permutations only.
std::vector<std::vector<std::size_t>> all_reduced_words(const Permutation& w);

// Odd positions increasing, even positions increasing, w(2k-1) < w(2k).
// Throws EvenSize unless |w| is odd.
bool is_efficient(const Permutation& w);

// All efficient w in S_{2n+1}; |result| = Catalan(n+1).
std::vector<Permutation> enumerate_efficient(std::size_t n);

// The maximal efficient permutation 1 (n+2) 2 (n+3) ... (n+1) in S_{2n+1}.
Permutation maximal_efficient(std::size_t n);

// The unique efficient v whose image under the L0-action map equals w's,
// obtained by dropping trailing odd letters and contracting trailing
// (i+-1, i) pairs for even i.
Permutation canonical_efficient(Permutation w);

// Acts on the empty network with the given letters (indices in 1..2n) and
// positive parameters; params.size() must equal word.size().
Network network_of_word(const std::vector<std::size_t>& word,
                        const std::vector<Rat>& params, std::size_t n);

// Whether floor((j-i+1)/2) vertex-disjoint paths pair the boundary groups
// {i..} and {..j} while avoiding all other boundary vertices. Unit-capacity
// max-flow on the vertex-split graph.
bool is_ij_connected(const Network& net, std::size_t i, std::size_t j);

}  // namespace elnet
