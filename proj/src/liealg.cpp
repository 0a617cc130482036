#include "elnet/liealg.hpp"

#include <map>

#include "elnet/symplectic.hpp"

namespace elnet {

CartanSpec CartanSpec::path_a(std::size_t m) {
  std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    a[i][i] = 2;
    if (i + 1 < m) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return CartanSpec{m, std::move(a)};
}

CartanSpec CartanSpec::make(std::vector<std::vector<int>> entries) {
  std::size_t m = entries.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (entries[i].size() != m) throw ValidationError("Cartan matrix not square");
    if (entries[i][i] != 2) throw ValidationError("Cartan diagonal must be 2");
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && entries[i][j] > 0)
        throw ValidationError("Cartan off-diagonal must be <= 0");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw ValidationError("Cartan zero pattern must be symmetric");
    }
  }
  return CartanSpec{m, std::move(entries)};
}

namespace {

template <typename T, typename Bracket, typename Scale>
RelationReport check_serre(const std::vector<T>& gens, const CartanSpec& cartan,
                           Bracket bracket, Scale scale) {
  RelationReport report;
  for (std::size_t i = 0; i < cartan.size; ++i) {
    for (std::size_t j = 0; j < cartan.size; ++j) {
      if (i == j) continue;
      int aij = cartan.a[i][j];
      std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (aij == -1) {
        T lhs = bracket(gens[i], bracket(gens[i], gens[j]));
        T rhs = scale(Rat(-2), gens[i]);
        report.entries.push_back({"ad(e_i)^2(e_j) = -2 e_i at " + tag, lhs == rhs});
      } else {
        T acc = gens[j];
        for (int s = 0; s < 1 - aij; ++s) acc = bracket(gens[i], acc);
        report.entries.push_back(
            {"ad(e_i)^" + std::to_string(1 - aij) + "(e_j) = 0 at " + tag,
             acc == T{}});
      }
    }
  }
  return report;
}

Mat mat_scale(const Rat& s, const Mat& m) { return s * m; }

// T{} comparison needs a zero of the right shape for Mat; wrap equality.
RelationReport check_serre_mats(const std::vector<Mat>& gens, const CartanSpec& cartan) {
  RelationReport report;
  for (std::size_t i = 0; i < cartan.size; ++i) {
    for (std::size_t j = 0; j < cartan.size; ++j) {
      if (i == j) continue;
      int aij = cartan.a[i][j];
      std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (aij == -1) {
        Mat lhs = lie_bracket(gens[i], lie_bracket(gens[i], gens[j]));
        report.entries.push_back(
            {"ad(e_i)^2(e_j) = -2 e_i at " + tag, lhs == mat_scale(-2, gens[i])});
      } else {
        Mat acc = gens[j];
        for (int s = 0; s < 1 - aij; ++s) acc = lie_bracket(gens[i], acc);
        report.entries.push_back(
            {"ad(e_i)^" + std::to_string(1 - aij) + "(e_j) = 0 at " + tag,
             acc.is_zero()});
      }
    }
  }
  return report;
}

}  // namespace

RelationReport check_electrical_serre(const LieRep& rep) {
  if (rep.gens.size() != rep.cartan.size)
    throw DimensionMismatch("generator count does not match Cartan size");
  return check_serre_mats(rep.gens, rep.cartan);
}

RelationReport check_electrical_serre_fields(const std::vector<VectorField>& fields,
                                             const CartanSpec& cartan) {
  if (fields.size() != cartan.size)
    throw DimensionMismatch("field count does not match Cartan size");
  return check_serre<VectorField>(
      fields, cartan, [](const VectorField& a, const VectorField& b) { return vf_bracket(a, b); },
      [](const Rat& s, const VectorField& f) { return s * f; });
}

LieRep builtin_el(std::size_t n) {
  ElGenerators g = el_generators(n);
  LieRep rep{"el" + std::to_string(n), std::move(g.mats), CartanSpec::path_a(2 * n)};
  if (!check_electrical_serre(rep).all_pass())
    throw Error("el generators fail their relations (transcription bug)");
  return rep;
}

namespace {

Mat unit(std::size_t size, std::size_t i, std::size_t j, const Rat& v) {
  Mat m(size, size);
  m.at(i - 1, j - 1) = v;
  return m;
}

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

LieRep validated(LieRep rep) {
  if (!check_electrical_serre(rep).all_pass())
    throw Error(rep.name + " generators fail their relations (transcription bug)");
  return rep;
}

}  // namespace

LieRep builtin_rep(const std::string& name) {
  if (name == "eb2") {
    Mat e{{1, 1}, {0, 1}};
    Mat f{{0, 0}, {1, 0}};
    return validated({"eb2", {e, f}, CartanSpec::make({{2, -2}, {-1, 2}})});
  }
  if (name == "eg2") {
    Mat e{{1, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    Mat f = unit(4, 4, 1, 1);
    return validated({"eg2", {e, f}, CartanSpec::make({{2, -3}, {-1, 2}})});
  }
  if (name == "ec3") {
    Mat e9 = unit(9, 4, 2, 1) + unit(9, 5, 4, 1) + unit(9, 7, 6, 1) +
             unit(9, 8, 7, 1) + unit(9, 8, 9, 1);
    Mat f9 = unit(9, 2, 4, 2) + unit(9, 2, 6, -2) + unit(9, 4, 1, 2) +
             unit(9, 4, 5, 2) + unit(9, 4, 7, -1) + unit(9, 6, 3, -2) +
             unit(9, 6, 7, 1) + unit(9, 9, 8, 1);
    Mat g9 = unit(9, 3, 6, -1) + unit(9, 6, 2, -1) + unit(9, 7, 4, -1) +
             unit(9, 8, 5, -1) + unit(9, 8, 9, 1);
    Mat e2{{1, 1}, {0, 1}};
    Mat f2{{0, 0}, {1, 0}};
    Mat g2{{0, 1}, {0, 0}};
    CartanSpec c3 = CartanSpec::make({{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});
    return validated({"ec3",
                      {direct_sum(e9, e2), direct_sum(f9, f2), direct_sum(g9, g2)},
                      c3});
  }
  if (name.rfind("el", 0) == 0 && name.size() > 2) {
    try {
      return builtin_el(std::stoul(name.substr(2)));
    } catch (const std::logic_error&) {
    }
  }
  throw UnknownName("unknown representation \"" + name + "\"");
}

std::size_t lie_closure_dim(const LieRep& rep, std::size_t budget) {
  RowSpace space;
  std::vector<Mat> reps;
  std::vector<std::size_t> fresh;
  for (const auto& g : rep.gens) {
    if (space.insert(g.flat())) {
      reps.push_back(g);
      fresh.push_back(reps.size() - 1);
    }
  }
  while (!fresh.empty()) {
    if (space.dim() > budget)
      throw ClosureBudgetExceeded("closure dimension exceeded budget " +
                                  std::to_string(budget));
    std::vector<std::size_t> next;
    for (std::size_t idx : fresh) {
      for (const auto& g : rep.gens) {
        Mat c = lie_bracket(g, reps[idx]);
        if (space.insert(c.flat())) {
          reps.push_back(std::move(c));
          next.push_back(reps.size() - 1);
        }
      }
    }
    fresh = std::move(next);
  }
  if (space.dim() > budget)
    throw ClosureBudgetExceeded("closure dimension exceeded budget " +
                                std::to_string(budget));
  return space.dim();
}

std::size_t positive_root_count(const CartanSpec& cartan) {
  // A_m path
  bool path = true;
  for (std::size_t i = 0; i < cartan.size && path; ++i)
    for (std::size_t j = 0; j < cartan.size && path; ++j) {
      int expect = i == j ? 2 : ((i > j ? i - j : j - i) == 1 ? -1 : 0);
      if (cartan.a[i][j] != expect) path = false;
    }
  if (path) return cartan.size * (cartan.size + 1) / 2;
  auto is = [&](std::vector<std::vector<int>> m) {
    return cartan.a == m;
  };
  if (is({{2, -2}, {-1, 2}}) || is({{2, -1}, {-2, 2}})) return 4;  // B2 / C2
  if (is({{2, -3}, {-1, 2}}) || is({{2, -1}, {-3, 2}})) return 6;  // G2
  if (is({{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}}) ||
      is({{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}}))
    return 9;  // C3 / B3
  throw UnsupportedType("no built-in root count for this Cartan matrix");
}

// Folded generators E = phi(e_2), F = (phi(e_1) + phi(e_3))/2 satisfy the
// two-node relations with a doubled edge on the F side: ad(F)^3(E) = 0 and
// ad(E)^2(F) = -2E. The normalization of F is forced by the quadratic
// relation; the cubic one is scale-invariant.
RelationReport folding_check_b2() {
  ElGenerators g = el_generators(2);  // generators e_1..e_3 inside sp_4
  const Mat& e1 = g.mats[0];
  const Mat& e2 = g.mats[1];
  const Mat& e3 = g.mats[2];
  Mat big_e = e2;
  Mat raw_f = e1 + e3;
  Mat big_f = Rat(1, 2) * raw_f;

  RelationReport report;
  Mat fffe =
      lie_bracket(big_f, lie_bracket(big_f, lie_bracket(big_f, big_e)));
  report.entries.push_back({"[F,[F,[F,E]]] = 0", fffe.is_zero()});
  Mat eef = lie_bracket(big_e, lie_bracket(big_e, big_f));
  report.entries.push_back({"[E,[E,F]] = -2E", eef == Rat(-2) * big_e});
  Mat ffe = lie_bracket(raw_f, lie_bracket(raw_f, big_e));
  report.entries.push_back(
      {"control: [e_1+e_3, [e_1+e_3, E]] is neither -2(e_1+e_3) nor 0",
       !(ffe == Rat(-2) * raw_f) && !ffe.is_zero()});
  Mat deg = lie_bracket(big_e, lie_bracket(big_e, e1));
  report.entries.push_back({"degenerate fold F = e_1: [E,[E,F]] = -2E",
                            deg == Rat(-2) * big_e});
  return report;
}

VectorField derivation_field(std::size_t i, std::size_t n) {
  if (i < 1 || i > 2 * n) throw IndexOutOfRange("derivation index outside 1..2n");
  VectorField f;
  std::size_t k = (i + 1) / 2;
  if (i % 2 == 0) {
    f.add(Var(k, k), Polynomial::constant(1));
    f.add(Var(k + 1, k + 1), Polynomial::constant(1));
    f.add(Var(k, k + 1), Polynomial::constant(-1));
  } else {
    for (std::size_t p = 1; p <= n + 1; ++p)
      for (std::size_t q = p; q <= n + 1; ++q)
        f.add(Var(p, q), -(Polynomial::variable(Var(k, p)) *
                           Polynomial::variable(Var(k, q))));
  }
  return f;
}

namespace {

using Coord = std::pair<Var, Monomial>;

std::vector<Rat> flatten_field(const VectorField& f, const std::map<Coord, std::size_t>& dict) {
  std::vector<Rat> row(dict.size());
  for (const auto& [v, p] : f.coeffs())
    for (const auto& [m, c] : p.terms()) row[dict.at({v, m})] = c;
  return row;
}

bool extend_dict(const VectorField& f, std::map<Coord, std::size_t>& dict) {
  bool grew = false;
  for (const auto& [v, p] : f.coeffs())
    for (const auto& [m, c] : p.terms())
      if (dict.emplace(Coord{v, m}, dict.size()).second) grew = true;
  return grew;
}

}  // namespace

std::size_t stabilizer_codim(std::size_t n) {
  std::vector<VectorField> gens;
  for (std::size_t i = 1; i <= 2 * n; ++i) gens.push_back(derivation_field(i, n));

  const std::size_t budget = n * (2 * n + 1);  // dim el_2n
  std::map<Coord, std::size_t> dict;
  RowSpace space;
  std::vector<VectorField> reps;
  auto try_insert = [&](const VectorField& f) {
    if (extend_dict(f, dict)) {
      RowSpace rebuilt;
      for (const auto& r : reps) rebuilt.insert(flatten_field(r, dict));
      space = std::move(rebuilt);
    }
    if (!space.insert(flatten_field(f, dict))) return false;
    reps.push_back(f);
    return true;
  };

  std::vector<std::size_t> fresh;
  for (const auto& g : gens)
    if (try_insert(g)) fresh.push_back(reps.size() - 1);
  while (!fresh.empty()) {
    if (space.dim() > budget)
      throw ClosureBudgetExceeded("derivation closure exceeded dim el_2n");
    std::vector<std::size_t> next;
    for (std::size_t idx : fresh)
      for (const auto& g : gens) {
        VectorField c = vf_bracket(g, reps[idx]);
        if (try_insert(c)) next.push_back(reps.size() - 1);
      }
    fresh = std::move(next);
  }

  // tangent vectors at the zero matrix
  RowSpace tangent;
  const std::size_t vars = (n + 1) * (n + 2) / 2;
  for (const auto& f : reps) {
    std::vector<Rat> row;
    row.reserve(vars);
    for (std::size_t p = 1; p <= n + 1; ++p)
      for (std::size_t q = p; q <= n + 1; ++q) row.push_back(f.coeff(Var(p, q)).constant_term());
    tangent.insert(std::move(row));
  }
  return tangent.dim();
}

std::array<Rat, 4> b2_braid(const Rat& t1, const Rat& t2, const Rat& t3,
                            const Rat& t4, const Rat& tau) {
  Rat pi1 = t1 * t2 + (t1 + t3) * t4 + tau * t1 * t2 * t3 * t4;
  Rat pi2 = t1 * t1 * t2 + (t1 + t3) * (t1 + t3) * t4 +
            tau * t1 * t2 * t3 * t4 * (t1 + t3);
  if (pi1 == 0 || pi2 == 0) throw SingularDenominator("pi_1 or pi_2 vanished");
  return {t2 * t3 * t3 * t4 / pi2, pi2 / pi1, pi1 * pi1 / pi2, t1 * t2 * t3 / pi1};
}

}  // namespace elnet
