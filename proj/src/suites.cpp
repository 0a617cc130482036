#include "elnet/suites.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "elnet/action.hpp"
#include "elnet/liealg.hpp"
#include "elnet/network.hpp"
#include "elnet/perms.hpp"
#include "elnet/rng.hpp"
#include "elnet/symplectic.hpp"

namespace elnet {

namespace {

std::string itos(std::size_t v) { return std::to_string(v); }

// ---- relations --------------------------------------------------------

Checks crit_serre(const SuiteOptions&) {
  Checks out;
  for (std::size_t n = 1; n <= 4; ++n) {
    LieRep rep{"el" + itos(n), el_generators(n).mats, CartanSpec::path_a(2 * n)};
    RelationReport r = check_electrical_serre(rep);
    bool pass = r.all_pass() && r.entries.size() == 2 * n * (2 * n - 1);
    out.push_back({"el" + itos(n) + ": all " + itos(2 * n * (2 * n - 1)) +
                       " electrical Serre relations in sp_" + itos(2 * n),
                   pass});
  }
  return out;
}

Checks crit_folding(const SuiteOptions&) {
  Checks out;
  for (const auto& e : folding_check_b2().entries)
    out.push_back({"folding: " + e.description, e.pass});
  return out;
}

// ---- dims -------------------------------------------------------------

Checks crit_dims(const SuiteOptions& opt) {
  Checks out;
  auto one = [&](const LieRep& rep, std::size_t expect) {
    std::size_t dim = lie_closure_dim(rep);
    bool pass = dim == expect && positive_root_count(rep.cartan) == expect;
    out.push_back({"dim(" + rep.name + ")=" + itos(dim) + " expected=" + itos(expect),
                   pass});
  };
  for (std::size_t n = 1; n <= std::max<std::size_t>(opt.n, 1); ++n)
    one(builtin_el(n), n * (2 * n + 1));
  one(builtin_rep("eb2"), 4);
  one(builtin_rep("eg2"), 6);
  one(builtin_rep("ec3"), 9);
  return out;
}

// ---- braid ------------------------------------------------------------

Checks crit_braid(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed);

  std::size_t bad = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rat a = rng.positive(), b = rng.positive(), c = rng.positive();
    auto [b2, a2, c2] = braid_move({a, b, c, 1});
    const std::pair<std::size_t, std::size_t> roles[] = {{1, 2}, {2, 1}};
    for (auto [i, j] : roles) {
      SpElement lhs = sp_of_word(make_word(1, {{i, a}, {j, b}, {i, c}}));
      SpElement rhs = sp_of_word(make_word(1, {{j, b2}, {i, a2}, {j, c2}}));
      if (!(lhs == rhs)) ++bad;
    }
  }
  out.push_back({"sp_2 braid identity at tau=1, " + itos(opt.trials) +
                     " random positive triples",
                 bad == 0});

  // tau = 0 in the 3x3 unipotent representation
  Mat e12(3, 3), e23(3, 3);
  e12.at(0, 1) = 1;
  e23.at(1, 2) = 1;
  auto u1 = [&](const Rat& t) { return exp_nilpotent(e12, t); };
  auto u2 = [&](const Rat& t) { return exp_nilpotent(e23, t); };
  bad = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Rat a = rng.positive(), b = rng.positive(), c = rng.positive();
    auto [b2, a2, c2] = braid_move({a, b, c, 0});
    if (!(u1(a) * u2(b) * u1(c) == u2(b2) * u1(a2) * u2(c2))) ++bad;
    if (!(u2(a) * u1(b) * u2(c) == u1(b2) * u2(a2) * u1(c2))) ++bad;
  }
  out.push_back({"3x3 unipotent braid identity at tau=0, " + itos(opt.trials) +
                     " random positive triples",
                 bad == 0});

  std::vector<Rat> taus{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  if (std::find(taus.begin(), taus.end(), opt.tau) == taus.end())
    taus.push_back(opt.tau);
  for (const Rat& tau : taus) {
    bad = 0;
    for (std::size_t t = 0; t < opt.trials; ++t) {
      Rat a = rng.positive(), b = rng.positive(), c = rng.positive();
      auto [x1, x2, x3] = braid_move({a, b, c, tau});
      auto [y1, y2, y3] = braid_move({x1, x2, x3, tau});
      if (!(y1 == a && y2 == b && y3 == c)) ++bad;
    }
    out.push_back({"braid move is an involution at tau=" + to_string(tau), bad == 0});
  }
  return out;
}

// ---- action -----------------------------------------------------------

Checks crit_action(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed);
  std::size_t bad = 0, nets = 0;
  for (; nets < 50; ++nets) {
    std::size_t bc = rng.index(2, 6);
    Network net = rng.network(bc, 6, rng.index(0, 4));
    ResponseMatrix l = response(net);
    for (std::size_t i = 1; i <= 2 * bc; ++i) {
      Rat t = i == 1 && nets % 5 == 0 ? Rat(0) : rng.positive();
      GenWord w = make_word(bc - 1, {{i, t}});
      if (!(response(act_word(net, w)) == act_response(l, i, t))) ++bad;
    }
  }
  out.push_back({"response(v_i(t)(N)) = v_i(t).L(N) for " + itos(nets) +
                     " random networks, every generator index",
                 bad == 0});
  return out;
}

namespace moves {

std::vector<std::string> all_names(const Network& n) {
  std::vector<std::string> names;
  for (std::size_t b = 1; b <= n.boundary_count(); ++b)
    names.push_back(n.boundary_name(b));
  for (const auto& id : n.interior()) names.push_back(id);
  return names;
}

Network with_extra(const Network& n, std::vector<std::string> extra_interior,
                   std::vector<Edge> extra_edges) {
  std::vector<std::string> interior = n.interior();
  for (auto& id : extra_interior) interior.push_back(std::move(id));
  std::vector<Edge> edges = n.edges();
  for (auto& e : extra_edges) edges.push_back(std::move(e));
  return Network(n.boundary_count(), std::move(interior), std::move(edges));
}

using EdgeKey = std::tuple<std::string, std::string, Rat>;

std::multiset<EdgeKey> edge_multiset(const Network& n) {
  std::multiset<EdgeKey> out;
  for (const auto& e : n.edges())
    out.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  return out;
}

}  // namespace moves

Checks crit_moves(const SuiteOptions& opt) {
  using moves::all_names;
  using moves::with_extra;
  Checks out;
  RatRng rng(opt.seed + 1);

  std::map<std::string, std::size_t> bad;
  const std::size_t rounds = 10;  // 6 move kinds per round: 60 sites
  for (std::size_t round = 0; round < rounds; ++round) {
    Network base = rng.network(rng.index(3, 5), 4, rng.index(0, 3));
    std::vector<std::string> names = all_names(base);
    auto pick_distinct = [&](std::size_t k) {
      std::set<std::size_t> idx;
      while (idx.size() < k) idx.insert(rng.index(0, names.size() - 1));
      std::vector<std::string> v;
      for (std::size_t i : idx) v.push_back(names[i]);
      return v;
    };

    {  // series: interior degree-2 vertex
      auto ends = pick_distinct(2);
      std::string s = base.fresh_interior_id("s");
      Network aug = with_extra(base, {s},
                               {{s, ends[0], rng.positive()}, {s, ends[1], rng.positive()}});
      Network res = apply_local_move(aug, {LocalMove::Kind::series, s, {}});
      if (!(response(res) == response(aug))) ++bad["series"];
    }
    {  // parallel: two fresh multi-edges
      auto ends = pick_distinct(2);
      Network aug = with_extra(base, {},
                               {{ends[0], ends[1], rng.positive()},
                                {ends[0], ends[1], rng.positive()}});
      std::size_t m = aug.edges().size();
      Network res = apply_local_move(aug, {LocalMove::Kind::parallel, "", {m - 2, m - 1}});
      if (!(response(res) == response(aug))) ++bad["parallel"];
    }
    {  // loop: removal restores the loop-free base exactly
      std::string v = names[rng.index(0, names.size() - 1)];
      Network aug = with_extra(base, {}, {{v, v, rng.positive()}});
      Network res = apply_local_move(aug, {LocalMove::Kind::loop, "", {aug.edges().size() - 1}});
      if (!(moves::edge_multiset(res) == moves::edge_multiset(base) &&
            response(res) == response(base)))
        ++bad["loop"];
    }
    {  // pendant: interior degree-1 vertex
      std::string p = base.fresh_interior_id("p");
      Network aug = with_extra(base, {p}, {{p, names[rng.index(0, names.size() - 1)], rng.positive()}});
      Network res = apply_local_move(aug, {LocalMove::Kind::pendant, p, {}});
      if (!(response(res) == response(aug) && response(res) == response(base)))
        ++bad["pendant"];
    }
    {  // Y -> Delta, then Delta -> Y recovers the star exactly
      auto ends = pick_distinct(3);
      Network aug = with_extra(base, {"y"},
                               {{"y", ends[0], rng.positive()},
                                {"y", ends[1], rng.positive()},
                                {"y", ends[2], rng.positive()}});
      Network tri = apply_local_move(aug, {LocalMove::Kind::y_to_delta, "y", {}});
      if (!(response(tri) == response(aug))) ++bad["y_to_delta"];
      std::size_t m = tri.edges().size();
      Network back =
          apply_local_move(tri, {LocalMove::Kind::delta_to_y, "", {m - 3, m - 2, m - 1}});
      if (!(moves::edge_multiset(back) == moves::edge_multiset(aug) &&
            response(back) == response(aug)))
        ++bad["delta_to_y o y_to_delta"];
    }
    {  // Delta -> Y on a fresh triangle
      auto ends = pick_distinct(3);
      Network aug = with_extra(base, {},
                               {{ends[0], ends[1], rng.positive()},
                                {ends[1], ends[2], rng.positive()},
                                {ends[0], ends[2], rng.positive()}});
      std::size_t m = aug.edges().size();
      Network res =
          apply_local_move(aug, {LocalMove::Kind::delta_to_y, "", {m - 3, m - 2, m - 1}});
      if (!(response(res) == response(aug))) ++bad["delta_to_y"];
    }
  }
  for (const auto& kind : {"series", "parallel", "loop", "pendant", "y_to_delta",
                           "delta_to_y", "delta_to_y o y_to_delta"}) {
    out.push_back({std::string("response invariance: ") + kind + " on " + itos(rounds) +
                       " random sites",
                   bad[kind] == 0});
  }
  return out;
}

// ---- cells ------------------------------------------------------------

Checks crit_factorize(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed + 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::size_t> word = staircase_word(n);
    std::size_t bad = 0;
    for (std::size_t trial = 0; trial < 20; ++trial) {
      std::vector<GenLetter> letters;
      std::vector<Rat> params;
      for (std::size_t idx : word) {
        params.push_back(rng.positive());
        letters.push_back({idx, params.back()});
      }
      SpElement m = sp_of_word(make_word(n, letters));
      if (!(factorize_top_cell(m, n) == params)) ++bad;
    }
    out.push_back({"factorize(sp_of_word) round-trip, n=" + itos(n) +
                       ", 20 random positive parameter vectors",
                   bad == 0});
  }
  {
    std::vector<std::size_t> word = staircase_word(2);
    std::size_t bad = 0;
    for (std::size_t zero_at = 0; zero_at < word.size(); ++zero_at) {
      std::vector<GenLetter> letters;
      for (std::size_t i = 0; i < word.size(); ++i)
        letters.push_back({word[i], i == zero_at ? Rat(0) : rng.positive()});
      SpElement m = sp_of_word(make_word(2, letters));
      try {
        factorize_top_cell(m, 2);
        ++bad;
      } catch (const NotInTopCell&) {
      } catch (const Error&) {
        ++bad;
      }
    }
    out.push_back({"single zeroed parameter at n=2 raises NotInTopCell, all 10 positions",
                   bad == 0});
  }
  return out;
}

Checks crit_worked_rows(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed + 3);
  std::size_t bad6 = 0, bad10 = 0;
  for (std::size_t trial = 0; trial < 5; ++trial) {
    std::vector<Rat> a;
    for (std::size_t i = 0; i < 10; ++i) a.push_back(rng.positive());

    std::vector<std::size_t> w6{1, 2, 1, 3, 2, 1};
    std::vector<GenLetter> l6;
    for (std::size_t i = 0; i < 6; ++i) l6.push_back({w6[i], a[i]});
    Mat m6 = sp_of_word(make_word(2, l6)).mat;
    std::vector<Rat> row2{a[3] * a[4], 1, a[3] + a[3] * a[4] * a[5], a[3]};
    for (std::size_t j = 0; j < 4; ++j)
      if (!(m6.at(1, j) == row2[j])) ++bad6;

    std::vector<std::size_t> w10 = staircase_word(2);
    std::vector<GenLetter> l10;
    for (std::size_t i = 0; i < 10; ++i) l10.push_back({w10[i], a[i]});
    Mat m10 = sp_of_word(make_word(2, l10)).mat;
    std::vector<Rat> row4{a[6] * a[7] * a[8], a[6],
                          a[6] * a[7] + a[6] * a[7] * a[8] * a[9], 1 + a[6] * a[7]};
    for (std::size_t j = 0; j < 4; ++j)
      if (!(m10.at(3, j) == row4[j])) ++bad10;
  }
  out.push_back({"six-letter n=2 product: second row (a4a5, 1, a4+a4a5a6, a4)", bad6 == 0});
  out.push_back(
      {"ten-letter n=2 product: last row (a7a8a9, a7, a7a8+a7a8a9a10, 1+a7a8)", bad10 == 0});
  return out;
}

// ---- efficient --------------------------------------------------------

// Words from all_reduced_words thread letter by letter; the action composes
// the other way round, so the network of w is built from the reversed word.
std::vector<std::size_t> reversed(const std::vector<std::size_t>& word) {
  return {word.rbegin(), word.rend()};
}

bool connectivity_matches(const Permutation& w, const Network& net, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n + 1; ++j)
      if (is_ij_connected(net, i, j) != (w[2 * i - 1] > w[2 * j - 2])) return false;
  return true;
}

Checks crit_efficient(const SuiteOptions&) {
  Checks out;
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132};
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t count = enumerate_efficient(n).size();
    out.push_back({"count=" + itos(count) + " expected=" + itos(catalan[n]),
                   count == catalan[n]});
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    std::size_t bad = 0, words = 0;
    for (const Permutation& w : enumerate_efficient(n)) {
      for (const auto& word : all_reduced_words(w)) {
        std::vector<Rat> params(word.size(), Rat(1));
        if (!connectivity_matches(w, network_of_word(reversed(word), params, n), n))
          ++bad;
        ++words;
      }
    }
    out.push_back({"connectivity criterion w(2i)>w(2j-1), all efficient w in S_" +
                       itos(2 * n + 1) + " (" + itos(words) + " reduced words)",
                   bad == 0});
  }
  {
    std::vector<Rat> ones5(5, Rat(1)), ones4(4, Rat(1));
    Network with = network_of_word({5, 3, 6, 4, 2}, ones5, 3);
    Network without = network_of_word({3, 6, 4, 2}, ones4, 3);
    out.push_back({"word (5,3,6,4,2): boundary pair (2,4) connected",
                   is_ij_connected(with, 2, 4)});
    out.push_back({"word (3,6,4,2): boundary pair (2,4) not connected",
                   !is_ij_connected(without, 2, 4)});
  }
  return out;
}

Checks crit_profiles(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed + 4);
  const std::size_t n = 2;
  std::set<std::vector<bool>> profiles;
  std::size_t bad = 0;
  std::vector<Permutation> ws = enumerate_efficient(n);
  for (const Permutation& w : ws) {
    std::vector<std::size_t> word = reduced_word(w);
    std::vector<Rat> params;
    for (std::size_t i = 0; i < word.size(); ++i) params.push_back(rng.positive());
    Network net = network_of_word(reversed(word), params, n);
    std::vector<bool> profile;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n + 1; ++j)
        profile.push_back(is_ij_connected(net, i, j));
    if (!connectivity_matches(w, net, n)) ++bad;
    profiles.insert(profile);
  }
  out.push_back({"connection profiles of the " + itos(ws.size()) +
                     " efficient classes in S_5 are pairwise distinct",
                 bad == 0 && profiles.size() == ws.size()});
  return out;
}

// ---- stabilizer -------------------------------------------------------

// [even field 2i, odd field 2i-1], written out entry by entry.
VectorField expected_even_odd_bracket(std::size_t i, std::size_t n) {
  VectorField f;
  auto x = [](std::size_t p, std::size_t q) { return Polynomial::variable(Var(p, q)); };
  f.add(Var(i, i), -x(i, i));
  f.add(Var(i + 1, i + 1), x(i, i + 1));
  for (std::size_t p = 1; p <= n + 1; ++p) {
    f.add(Var(i + 1, p), x(i, p));
    f.add(Var(i, p), -x(i, p));
  }
  return f;
}

Checks crit_stabilizer(const SuiteOptions& opt) {
  Checks out;
  const std::size_t nmax = std::max<std::size_t>(std::min<std::size_t>(opt.n, 3), 1);
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::vector<VectorField> fields;
    for (std::size_t i = 1; i <= 2 * n; ++i) fields.push_back(derivation_field(i, n));
    RelationReport r = check_electrical_serre_fields(fields, CartanSpec::path_a(2 * n));
    out.push_back({"derivation fields satisfy all el_" + itos(2 * n) + " relations",
                   r.all_pass()});

    std::size_t bad = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (!(vf_bracket(fields[2 * i - 1], fields[2 * i - 2]) ==
            expected_even_odd_bracket(i, n)))
        ++bad;
    out.push_back({"[even field, odd field] closed form, n=" + itos(n), bad == 0});
  }
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::size_t codim = stabilizer_codim(n);
    std::size_t expect = n * (n + 1) / 2;
    out.push_back({"stabilizer_codim(" + itos(n) + ")=" + itos(codim) +
                       " expected=" + itos(expect),
                   codim == expect});
  }
  return out;
}

// ---- b2 ---------------------------------------------------------------

Checks crit_b2(const SuiteOptions& opt) {
  Checks out;
  RatRng rng(opt.seed + 5);
  Mat upper{{1, 1}, {0, 1}};
  Mat e21(2, 2);
  e21.at(1, 0) = 1;
  auto u = [&](const Rat& t) { return scaled_exp(upper, t); };
  auto v = [&](const Rat& t) { return ScaledMat{0, exp_nilpotent(e21, t)}; };

  std::size_t bad_group = 0, bad_explicit = 0, bad_remark = 0;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    Rat t1 = rng.positive(), t2 = rng.positive(), t3 = rng.positive(), t4 = rng.positive();
    auto p = b2_braid(t1, t2, t3, t4, 1);
    ScaledMat lhs = u(t1) * v(t2) * u(t3) * v(t4);
    ScaledMat rhs = v(p[0]) * u(p[1]) * v(p[2]) * u(p[3]);
    if (!(lhs == rhs)) ++bad_group;
    ScaledMat shown{t1 + t3,
                    Mat{{1 + t3 * t4 + t1 * (t2 + t4 + t2 * t3 * t4),
                         t1 + t3 + t1 * t2 * t3},
                        {t2 + t4 + t2 * t3 * t4, 1 + t2 * t3}}};
    if (!(lhs == shown && rhs == shown)) ++bad_explicit;
    for (const Rat& tau : {Rat(0), Rat(1), Rat(2)}) {
      auto q = b2_braid(t1, t2, t3, t4, tau);
      if (!(q[1] + q[3] == t1 + t3)) ++bad_remark;
      for (const Rat& qi : q)
        if (!(qi > 0)) ++bad_remark;
    }
  }
  out.push_back({"u(t1)v(t2)u(t3)v(t4) = v(p1)u(p2)v(p3)u(p4) at tau=1, " +
                     itos(opt.trials) + " random positive quadruples",
                 bad_group == 0});
  out.push_back({"both sides equal the closed-form 2x2 matrix", bad_explicit == 0});
  out.push_back({"p2+p4 = t1+t3 and positivity of p_i for tau in {0,1,2}",
                 bad_remark == 0});
  return out;
}

}  // namespace

Checks criterion(std::size_t k, const SuiteOptions& opt) {
  switch (k) {
    case 1: return crit_serre(opt);
    case 2: return crit_dims(opt);
    case 3: return crit_braid(opt);
    case 4: return crit_action(opt);
    case 5: return crit_moves(opt);
    case 6: return crit_factorize(opt);
    case 7: return crit_worked_rows(opt);
    case 8: return crit_efficient(opt);
    case 9: return crit_stabilizer(opt);
    case 10: return crit_b2(opt);
    case 11: return crit_folding(opt);
    case 12: return crit_profiles(opt);
  }
  throw UnknownName("no criterion " + itos(k));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "braid", "dims", "stabilizer",
                                             "b2", "action", "cells", "efficient"};
  return names;
}

Checks run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, std::vector<std::size_t>> plan{
      {"relations", {1, 11}}, {"braid", {3}},      {"dims", {2}},
      {"stabilizer", {9}},    {"b2", {10}},        {"action", {4, 5}},
      {"cells", {6, 7}},      {"efficient", {8, 12}}};
  auto it = plan.find(name);
  if (it == plan.end()) throw UnknownName("unknown suite \"" + name + "\"");
  Checks out;
  for (std::size_t k : it->second) {
    Checks c = criterion(k, opt);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

bool print_checks(const Checks& checks, std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) {
    out << c.name << (c.pass ? " PASS" : " FAIL") << "\n";
    all = all && c.pass;
  }
  return all;
}

}  // namespace elnet
