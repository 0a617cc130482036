#include "elnet/perms.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace elnet {

Permutation perm_identity(std::size_t m) {
  Permutation w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = i + 1;
  return w;
}

bool perm_is_valid(const Permutation& w) {
  std::vector<bool> seen(w.size(), false);
  for (std::size_t v : w) {
    if (v < 1 || v > w.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::size_t perm_inversions(const Permutation& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

std::pair<Permutation, bool> perm_of_word(const std::vector<std::size_t>& word,
                                          std::size_t m) {
  Permutation w = perm_identity(m);
  for (std::size_t letter : word) {
    if (letter < 1 || letter + 1 > m)
      throw IndexOutOfRange("simple transposition index out of range");
    for (auto& v : w) {
      if (v == letter)
        v = letter + 1;
      else if (v == letter + 1)
        v = letter;
    }
  }
  return {w, perm_inversions(w) == word.size()};
}

bool has_trailing_letter(const Permutation& w, std::size_t i) {
  std::size_t pos_i = 0, pos_i1 = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i) pos_i = p;
    if (w[p] == i + 1) pos_i1 = p;
  }
  return pos_i1 < pos_i;
}

Permutation swap_values(const Permutation& w, std::size_t i) {
  Permutation out = w;
  for (auto& v : out) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return out;
}

std::vector<std::size_t> reduced_word(const Permutation& w) {
  Permutation cur = w;
  std::vector<std::size_t> rev;
  while (perm_inversions(cur) > 0) {
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (has_trailing_letter(cur, i)) {
        rev.push_back(i);
        cur = swap_values(cur, i);
        break;
      }
    }
  }
  return {rev.rbegin(), rev.rend()};
}

namespace {

void collect_reduced(const Permutation& w, std::vector<std::size_t>& suffix,
                     std::vector<std::vector<std::size_t>>& out) {
  if (perm_inversions(w) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (has_trailing_letter(w, i)) {
      suffix.push_back(i);
      Permutation next = swap_values(w, i);
      collect_reduced(next, suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> suffix;
  collect_reduced(w, suffix, out);
  return out;
}

bool is_efficient(const Permutation& w) {
  if (w.size() % 2 == 0) throw EvenSize("efficiency is defined for odd sizes");
  for (std::size_t p = 0; p + 2 < w.size(); p += 2)
    if (w[p] >= w[p + 2]) return false;
  for (std::size_t p = 1; p + 2 < w.size(); p += 2)
    if (w[p] >= w[p + 2]) return false;
  for (std::size_t p = 0; p + 1 < w.size(); p += 2)
    if (w[p] >= w[p + 1]) return false;
  return true;
}

std::vector<Permutation> enumerate_efficient(std::size_t n) {
  const std::size_t m = 2 * n + 1;
  // An efficient permutation is determined by the n values sitting at even
  // positions: both value groups must appear in increasing order.
  std::vector<Permutation> out;
  std::vector<std::size_t> choose(n);
  auto emit = [&]() {
    std::vector<bool> taken(m + 1, false);
    for (std::size_t v : choose) taken[v] = true;
    Permutation w(m);
    std::size_t next_odd = 1;
    for (std::size_t p = 0; p < m; ++p) {
      if (p % 2 == 1) {
        w[p] = choose[p / 2];
      } else {
        while (taken[next_odd]) ++next_odd;
        w[p] = next_odd++;
      }
    }
    if (is_efficient(w)) out.push_back(std::move(w));
  };
  // iterate over increasing n-subsets of 1..m
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
  if (n == 0) {
    emit();
    return out;
  }
  while (true) {
    choose = idx;
    emit();
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Permutation maximal_efficient(std::size_t n) {
  const std::size_t m = 2 * n + 1;
  Permutation w(m);
  for (std::size_t k = 1; k <= n + 1; ++k) w[2 * (k - 1)] = k;
  for (std::size_t k = 1; k <= n; ++k) w[2 * k - 1] = n + 1 + k;
  return w;
}

namespace {

// A reduced word of w can end with letter i iff i is a right descent.
bool right_descent(const Permutation& w, std::size_t i) {
  return w[i - 1] > w[i];
}

Permutation swap_positions(const Permutation& w, std::size_t i) {
  Permutation out = w;
  std::swap(out[i - 1], out[i]);
  return out;
}

}  // namespace

Permutation canonical_efficient(Permutation w) {
  if (w.size() % 2 == 0) throw EvenSize("efficiency is defined for odd sizes");
  while (!is_efficient(w)) {
    bool moved = false;
    // Rule 1: some reduced word ends with an odd letter; drop it.
    for (std::size_t i = 1; i < w.size() && !moved; i += 2) {
      if (right_descent(w, i)) {
        w = swap_positions(w, i);
        moved = true;
      }
    }
    if (moved) continue;
    // Rule 2: a trailing pair (i+-1, i) with i even contracts to (i).
    for (std::size_t i = 2; i < w.size() && !moved; i += 2) {
      if (!right_descent(w, i)) continue;
      Permutation wi = swap_positions(w, i);
      for (std::size_t j : {i - 1, i + 1}) {
        if (j < 1 || j + 1 > w.size()) continue;
        if (right_descent(wi, j)) {
          w = swap_positions(swap_positions(wi, j), i);
          moved = true;
          break;
        }
      }
    }
    if (!moved)
      throw Error("no reduction applies to a non-efficient permutation");
  }
  return w;
}

Network network_of_word(const std::vector<std::size_t>& word,
                        const std::vector<Rat>& params, std::size_t n) {
  if (word.size() != params.size())
    throw DimensionMismatch("word/parameter length mismatch");
  std::vector<GenLetter> letters;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] < 1 || word[p] > 2 * n)
      throw IndexOutOfRange("letter outside the group range 1..2n");
    letters.push_back({word[p], params[p]});
  }
  return act_word(Network::empty(n + 1), make_word(n, std::move(letters)));
}

namespace {

// Unit-capacity max-flow, BFS augmenting paths.
struct FlowGraph {
  struct Arc {
    std::size_t to;
    int cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> adj;

  explicit FlowGraph(std::size_t nodes) : adj(nodes) {}

  void add(std::size_t from, std::size_t to, int cap) {
    adj[from].push_back({to, cap, adj[to].size()});
    adj[to].push_back({from, 0, adj[from].size() - 1});
  }

  int max_flow(std::size_t s, std::size_t t, int limit) {
    int flow = 0;
    while (flow < limit) {
      std::vector<std::pair<std::size_t, std::size_t>> parent(adj.size(),
                                                              {SIZE_MAX, SIZE_MAX});
      std::queue<std::size_t> q;
      q.push(s);
      parent[s] = {s, 0};
      while (!q.empty() && parent[t].first == SIZE_MAX) {
        std::size_t u = q.front();
        q.pop();
        for (std::size_t a = 0; a < adj[u].size(); ++a) {
          const Arc& arc = adj[u][a];
          if (arc.cap > 0 && parent[arc.to].first == SIZE_MAX) {
            parent[arc.to] = {u, a};
            q.push(arc.to);
          }
        }
      }
      if (parent[t].first == SIZE_MAX) break;
      for (std::size_t v = t; v != s;) {
        auto [u, a] = parent[v];
        adj[u][a].cap -= 1;
        adj[v][adj[u][a].rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }
};

}  // namespace

bool is_ij_connected(const Network& net, std::size_t i, std::size_t j) {
  const std::size_t bc = net.boundary_count();
  if (i < 1 || j <= i || j > bc) throw IndexOutOfRange("bad boundary pair");
  const std::size_t k = (j - i + 1) / 2;
  if (k == 0) return true;

  const std::size_t nv = bc + net.interior().size();
  auto keep = [&](std::size_t idx) {
    if (idx >= bc) return true;                      // interior
    std::size_t label = idx + 1;
    return (label >= i && label <= i + k - 1) || (label >= j - k + 1 && label <= j);
  };
  // nodes: 2*v (in), 2*v+1 (out), then source, sink
  FlowGraph g(2 * nv + 2);
  const std::size_t source = 2 * nv, sink = 2 * nv + 1;
  for (std::size_t v = 0; v < nv; ++v)
    if (keep(v)) g.add(2 * v, 2 * v + 1, 1);
  for (const auto& e : net.edges()) {
    std::size_t u = net.vertex_index(e.u), v = net.vertex_index(e.v);
    if (u == v || !keep(u) || !keep(v)) continue;
    g.add(2 * u + 1, 2 * v, 1);
    g.add(2 * v + 1, 2 * u, 1);
  }
  for (std::size_t label = i; label <= i + k - 1; ++label)
    g.add(source, 2 * (label - 1), 1);
  for (std::size_t label = j - k + 1; label <= j; ++label)
    g.add(2 * (label - 1) + 1, sink, 1);
  return g.max_flow(source, sink, int(k)) == int(k);
}

}  // namespace elnet
