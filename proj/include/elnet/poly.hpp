#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "elnet/rat.hpp"

namespace elnet {

// Symmetric-matrix variable x_{pq} with 1 <= p <= q <= n+1; x_{qp} is
// identified with x_{pq} at construction.
struct Var {
  std::size_t p, q;

  Var(std::size_t p_, std::size_t q_) : p(p_), q(q_) {
    if (p > q) std::swap(p, q);
  }
  auto operator<=>(const Var&) const = default;
};

// Exponent map, sorted by variable; no zero exponents stored.
using Monomial = std::map<Var, std::size_t>;

// Sparse polynomial over the x_{pq}.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rat& c);
  static Polynomial variable(Var v);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  Polynomial derivative(Var v) const;
  // Evaluation with every variable at zero: the constant term.
  Rat constant_term() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Rat> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);

// Derivation sum_v coeff_v(x) d/dx_v with polynomial coefficients.
class VectorField {
 public:
  VectorField() = default;

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Var, Polynomial>& coeffs() const { return coeffs_; }
  Polynomial coeff(Var v) const;

  void add(Var v, const Polynomial& p);

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField operator-() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::map<Var, Polynomial> coeffs_;  // no zero coefficients stored
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(const Rat& s, VectorField f);

// Commutator of derivations: [V,W]_v = sum_u (V_u dW_v/dx_u - W_u dV_v/dx_u).
VectorField vf_bracket(const VectorField& v, const VectorField& w);

}  // namespace elnet
