#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "elnet/linalg.hpp"
#include "elnet/poly.hpp"

namespace elnet {

// Cartan matrix: a_ii = 2, off-diagonal entries <= 0, symmetric zero pattern.
struct CartanSpec {
  std::size_t size;
  std::vector<std::vector<int>> a;

  static CartanSpec path_a(std::size_t m);  // type A_m
  static CartanSpec make(std::vector<std::vector<int>> entries);
};

// A matrix representation of an electrical Lie algebra presentation.
struct LieRep {
  std::string name;
  std::vector<Mat> gens;
  CartanSpec cartan;
};

struct RelationReport {
  struct Entry {
    std::string description;
    bool pass;
  };
  std::vector<Entry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// For every ordered pair i != j checks ad(e_i)^{1-a_ij}(e_j) = 0, or
// ad(e_i)^2(e_j) = -2 e_i when a_ij = -1.
RelationReport check_electrical_serre(const LieRep& rep);

// Same relations for the derivation fields of the type-A presentation.
RelationReport check_electrical_serre_fields(const std::vector<VectorField>& fields,
                                             const CartanSpec& cartan);

// Validated construction: throws Error if the transcribed generators fail
// their own relations.
LieRep builtin_el(std::size_t n);
// Accepts "eb2", "eg2", "ec3", or "el<N>". Throws UnknownName.
LieRep builtin_rep(const std::string& name);

// Dimension of the smallest bracket-closed subspace containing the
// generators. Throws ClosureBudgetExceeded once the dimension passes budget.
std::size_t lie_closure_dim(const LieRep& rep, std::size_t budget = 512);

// Positive-root count of the built-in finite types: A_m, B2/C2, G2, C3.
std::size_t positive_root_count(const CartanSpec& cartan);

// B2 relations for E = phi(e_2), F = (phi(e_1) + phi(e_3))/2 inside sp_4,
// plus negative controls showing the cubic relation is genuinely needed.
RelationReport folding_check_b2();

// The infinitesimal action on response-matrix entries: even generators give
// constant fields, odd ones quadratic fields.
VectorField derivation_field(std::size_t i, std::size_t n);

// dim(el_2n) - dim(stabilizer at the zero matrix) = n(n+1)/2, computed by
// closing the derivation fields under brackets and evaluating at x = 0.
std::size_t stabilizer_codim(std::size_t n);

// Type-B braid move u(t1) v(t2) u(t3) v(t4) = v(p1) u(p2) v(p3) u(p4).
std::array<Rat, 4> b2_braid(const Rat& t1, const Rat& t2, const Rat& t3,
                            const Rat& t4, const Rat& tau);

}  // namespace elnet
