#include "elnet/poly.hpp"

namespace elnet {

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(Var v) {
  Polynomial p;
  p.add_term({{v, 1}}, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      out.add_term(m, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(v);
    if (it == m.end()) continue;
    Monomial d = m;
    if (it->second == 1)
      d.erase(v);
    else
      d[v] -= 1;
    out.add_term(d, c * Rat(it->second));
  }
  return out;
}

Rat Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial VectorField::coeff(Var v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Polynomial{} : it->second;
}

void VectorField::add(Var v, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(v, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (const auto& [v, p] : o.coeffs_) add(v, p);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (const auto& [v, p] : o.coeffs_) add(v, -p);
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField out;
  for (const auto& [v, p] : coeffs_) out.add(v, -p);
  return out;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

VectorField operator*(const Rat& s, VectorField f) {
  VectorField out;
  for (const auto& [v, p] : f.coeffs()) out.add(v, Polynomial::constant(s) * p);
  return out;
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
  VectorField out;
  for (const auto& [tv, wp] : w.coeffs())
    for (const auto& [u, vp] : v.coeffs()) out.add(tv, vp * wp.derivative(u));
  for (const auto& [tv, vp] : v.coeffs())
    for (const auto& [u, wp] : w.coeffs()) out.add(tv, -(wp * vp.derivative(u)));
  return out;
}

}  // namespace elnet
