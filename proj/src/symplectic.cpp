#include "elnet/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace elnet {

ElGenerators el_generators(std::size_t n) {
  if (n < 1) throw IndexOutOfRange("el_generators needs n >= 1");
  ElGenerators g{n, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Rat> a(n), b(n);
    a[i - 1] = 1;
    if (i > 1) a[i - 2] = 1;  // a_i = eps_{i-1} + eps_i, a_1 = eps_1
    b[i - 1] = 1;
    Mat odd(2 * n, 2 * n), even(2 * n, 2 * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        odd.at(p, n + q) = a[p] * a[q];
        even.at(n + p, q) = b[p] * b[q];
      }
    g.mats.push_back(std::move(odd));   // e_{2i-1}
    g.mats.push_back(std::move(even));  // e_{2i}
  }
  return g;
}

bool is_symplectic(const SpElement& m) {
  const std::size_t n = m.n;
  Mat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j.at(i, n + i) = 1;
    j.at(n + i, i) = -1;
  }
  return m.mat.transpose() * j * m.mat == j;
}

SpElement sp_of_word(const GenWord& word) {
  const std::size_t n = word.n;
  ElGenerators g = el_generators(n);
  Mat m = Mat::identity(2 * n);
  for (const auto& l : word.letters) {
    if (l.index < 1 || l.index > 2 * n)
      throw IndexOutOfRange("sp_of_word letter outside 1..2n");
    m = m * (Mat::identity(2 * n) + l.param * g.mats[l.index - 1]);
  }
  return SpElement{n, std::move(m)};
}

std::tuple<Rat, Rat, Rat> braid_move(const BraidTriple& t) {
  Rat d = t.a + t.c + t.tau * t.a * t.b * t.c;
  if (d == 0) throw SingularDenominator("a + c + tau*abc vanished");
  return {t.b * t.c / d, d, t.a * t.b / d};
}

namespace {

struct Word {
  std::vector<std::size_t> idx;
  std::vector<Rat> par;
};

// Merge adjacent equal letters (relation u_i(a) u_i(b) = u_i(a+b)).
void merge_adjacent(Word& w) {
  for (std::size_t p = 0; p + 1 < w.idx.size();) {
    if (w.idx[p] == w.idx[p + 1]) {
      w.par[p] += w.par[p + 1];
      w.idx.erase(w.idx.begin() + p + 1);
      w.par.erase(w.par.begin() + p + 1);
      if (p > 0) --p;
    } else {
      ++p;
    }
  }
}

// BFS over commutation and braid moves until the word ends with `target`.
// The input must be reduced; Tits' theorem makes the search complete.
Word rewrite_to_end_with(const Word& start, std::size_t target) {
  std::set<std::vector<std::size_t>> seen{start.idx};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (!w.idx.empty() && w.idx.back() == target) return w;
    for (std::size_t q = 0; q + 1 < w.idx.size(); ++q) {
      std::size_t a = w.idx[q], b = w.idx[q + 1];
      if (a != b && (a > b ? a - b : b - a) > 1) {
        Word next = w;
        std::swap(next.idx[q], next.idx[q + 1]);
        std::swap(next.par[q], next.par[q + 1]);
        if (seen.insert(next.idx).second) queue.push_back(std::move(next));
      }
    }
    for (std::size_t q = 0; q + 2 < w.idx.size(); ++q) {
      std::size_t i = w.idx[q], j = w.idx[q + 1];
      std::size_t diff = i > j ? i - j : j - i;
      if (w.idx[q + 2] == i && diff == 1) {
        auto [b2, a2, c2] = braid_move({w.par[q], w.par[q + 1], w.par[q + 2], Rat(1)});
        Word next = w;
        next.idx[q] = j;
        next.idx[q + 1] = i;
        next.idx[q + 2] = j;
        next.par[q] = b2;
        next.par[q + 1] = a2;
        next.par[q + 2] = c2;
        if (seen.insert(next.idx).second) queue.push_back(std::move(next));
      }
    }
  }
  throw Error("no reduced word with the requested trailing letter");
}

}  // namespace

NormalWord normalize_word(const GenWord& word) {
  const std::size_t m = 2 * word.n + 1;
  Word w;
  for (const auto& l : word.letters) {
    if (l.index < 1 || l.index > 2 * word.n)
      throw IndexOutOfRange("normalize_word letter outside 1..2n");
    if (l.param <= 0)
      throw NonPositiveParameter("normalize_word needs strictly positive parameters");
    w.idx.push_back(l.index);
    w.par.push_back(l.param);
  }

  while (true) {
    merge_adjacent(w);
    if (perm_of_word(w.idx, m).second) break;
    // smallest prefix that just turned non-reduced
    std::size_t lp = 1;
    while (perm_of_word({w.idx.begin(), w.idx.begin() + lp + 1}, m).second) ++lp;
    Word prefix{{w.idx.begin(), w.idx.begin() + lp}, {w.par.begin(), w.par.begin() + lp}};
    prefix = rewrite_to_end_with(prefix, w.idx[lp]);
    prefix.par.back() += w.par[lp];
    prefix.idx.insert(prefix.idx.end(), w.idx.begin() + lp + 1, w.idx.end());
    prefix.par.insert(prefix.par.end(), w.par.begin() + lp + 1, w.par.end());
    w = std::move(prefix);
  }

  // lex-smallest within the commutation class
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t q = 0; q + 1 < w.idx.size(); ++q) {
      std::size_t a = w.idx[q], b = w.idx[q + 1];
      if (a > b && a - b > 1) {
        std::swap(w.idx[q], w.idx[q + 1]);
        std::swap(w.par[q], w.par[q + 1]);
        changed = true;
      }
    }
  }

  return NormalWord{w.idx, w.par, perm_of_word(w.idx, m).first};
}

std::vector<std::size_t> staircase_word(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= 2 * n; ++k)
    for (std::size_t i = k; i >= 1; --i) out.push_back(i);
  return out;
}

namespace {

// e_r^T times the first `steps` factors of the block product
// (I + c_1 phi(e_k)) (I + c_2 phi(e_{k-1})) ... , as a row vector.
std::vector<Rat> block_row(const ElGenerators& g, std::size_t r, std::size_t k,
                           const std::vector<Rat>& cs) {
  const std::size_t sz = 2 * g.n;
  std::vector<Rat> row(sz);
  row[r - 1] = 1;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    const Mat& gen = g.mats[k - 1 - j];  // phi(e_{k-j})
    std::vector<Rat> add(sz);
    for (std::size_t p = 0; p < sz; ++p) {
      if (row[p] == 0) continue;
      for (std::size_t q = 0; q < sz; ++q)
        if (gen.at(p, q) != 0) add[q] += row[p] * gen.at(p, q);
    }
    for (std::size_t q = 0; q < sz; ++q) row[q] += cs[j] * add[q];
  }
  return row;
}

std::vector<std::size_t> reading_columns(std::size_t n, std::size_t k) {
  std::vector<std::size_t> cols;
  if (k % 2 == 1) {
    cols.push_back(n + (k + 1) / 2);
    for (std::size_t m = (k - 1) / 2; m >= 1; --m) {
      cols.push_back(m);
      cols.push_back(n + m);
    }
  } else {
    for (std::size_t m = k / 2; m >= 1; --m) {
      cols.push_back(m);
      cols.push_back(n + m);
    }
  }
  return cols;
}

}  // namespace

std::vector<Rat> factorize_top_cell(const SpElement& m, std::size_t n) {
  if (m.n != n || m.mat.rows() != 2 * n || m.mat.cols() != 2 * n)
    throw DimensionMismatch("matrix size does not match n");
  ElGenerators g = el_generators(n);
  Mat cur = m.mat;
  std::vector<std::vector<Rat>> blocks(2 * n);

  for (std::size_t k = 2 * n; k >= 1; --k) {
    std::size_t r = (k % 2 == 1) ? (k + 1) / 2 : n + k / 2;
    std::vector<std::size_t> cols = reading_columns(n, k);
    std::vector<Rat> cs;
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Rat> with0 = cs, with1 = cs;
      with0.push_back(0);
      with1.push_back(1);
      Rat f0 = block_row(g, r, k, with0)[cols[s] - 1];
      Rat f1 = block_row(g, r, k, with1)[cols[s] - 1];
      Rat slope = f1 - f0;
      if (slope == 0)
        throw NotInTopCell("vanishing pivot while recovering block " + std::to_string(k));
      Rat c = (cur.at(r - 1, cols[s] - 1) - f0) / slope;
      if (c <= 0)
        throw NotInTopCell("recovered parameter is not positive in block " + std::to_string(k));
      cs.push_back(std::move(c));
    }
    // peel the block off: right-multiply by its inverse (reversed, negated)
    for (std::size_t j = k; j >= 1; --j)
      cur = cur * (Mat::identity(2 * n) + (-cs[j - 1]) * g.mats[k - j]);
    blocks[k - 1] = std::move(cs);
  }

  if (!cur.is_identity())
    throw ResidueNotIdentity("residue after peeling all blocks is not the identity");

  std::vector<Rat> params;
  for (std::size_t k = 1; k <= 2 * n; ++k)
    for (auto& c : blocks[k - 1]) params.push_back(std::move(c));
  return params;
}

}  // namespace elnet
