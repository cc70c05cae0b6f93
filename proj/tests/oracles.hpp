#pragma once

// Reference implementations used only by tests. They work on plain mpq_class
// grids and strings and share no code with the library.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "jordan/ncpoly.hpp"
#include "jordan/qmatrix.hpp"

namespace oracle {

using Grid = std::vector<std::vector<mpq_class>>;
using WordPoly = std::map<std::string, mpq_class>;

inline Grid to_grid(const jordan::QMatrix& m) {
  Grid g(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).raw();
  return g;
}

inline Grid identity(std::size_t n) {
  Grid g(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return g;
}

inline Grid mul(const Grid& a, const Grid& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Grid c(n, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// Rank by textbook Gaussian elimination on a copy.
inline std::size_t rank(Grid g) {
  std::size_t r = 0;
  const std::size_t cols = g.empty() ? 0 : g[0].size();
  for (std::size_t c = 0; c < cols && r < g.size(); ++c) {
    std::size_t p = r;
    while (p < g.size() && g[p][c] == 0) ++p;
    if (p == g.size()) continue;
    std::swap(g[p], g[r]);
    for (std::size_t i = r + 1; i < g.size(); ++i) {
      if (g[i][c] == 0) continue;
      const mpq_class f = g[i][c] / g[r][c];
      for (std::size_t j = c; j < cols; ++j) g[i][j] -= f * g[r][j];
    }
    ++r;
  }
  return r;
}

inline mpq_class det(Grid g) {
  const std::size_t n = g.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && g[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(g[p], g[c]);
      d = -d;
    }
    d *= g[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = g[i][c] / g[c][c];
      for (std::size_t j = c; j < n; ++j) g[i][j] -= f * g[c][j];
    }
  }
  return d;
}

// Normal form in the Jordan plane by repeatedly replacing the first "xy" of
// some word with "yx" + "yy" until no word contains "xy".
inline WordPoly jordan_reduce(WordPoly p) {
  for (;;) {
    auto it = p.begin();
    std::size_t pos = std::string::npos;
    for (; it != p.end(); ++it) {
      pos = it->first.find("xy");
      if (pos != std::string::npos) break;
    }
    if (it == p.end()) return p;
    const std::string w = it->first;
    const mpq_class c = it->second;
    p.erase(it);
    std::string a = w, b = w;
    a.replace(pos, 2, "yx");
    b.replace(pos, 2, "yy");
    for (const std::string* v : {&a, &b}) {
      p[*v] += c;
      if (p[*v] == 0) p.erase(*v);
    }
  }
}

inline WordPoly from_ncpoly(const jordan::NcPoly& f) {
  WordPoly p;
  for (const auto& [m, c] : f.terms()) p[m.word()] = c.raw();
  return p;
}

inline WordPoly from_normal(const jordan::NormalPoly& f) {
  WordPoly p;
  for (const auto& [key, c] : f.terms()) p[std::string(key.first, 'y') + std::string(key.second, 'x')] = c.raw();
  return p;
}

// f(X, Y) by multiplying out every word letter by letter.
inline Grid eval_words(const WordPoly& f, const Grid& x, const Grid& y) {
  const std::size_t n = x.size();
  Grid out(n, std::vector<mpq_class>(n));
  for (const auto& [w, c] : f) {
    Grid acc = identity(n);
    for (char ch : w) acc = mul(acc, ch == 'x' ? x : y);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += c * acc[i][j];
  }
  return out;
}

inline std::vector<std::string> words_up_to(std::size_t len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      next.push_back(w + "x");
      next.push_back(w + "y");
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<mpq_class> flatten(const Grid& g) {
  std::vector<mpq_class> v;
  for (const auto& row : g) v.insert(v.end(), row.begin(), row.end());
  return v;
}

// Words of length <= len whose values are independent of all shorter words.
// A word that depends on shorter words has only dependent extensions, so only
// independent words are extended.
inline std::vector<Grid> word_basis(const Grid& x, const Grid& y, std::size_t len) {
  std::vector<Grid> basis;
  Grid rows;
  std::vector<std::string> layer{""};
  for (std::size_t l = 0; l <= len && !layer.empty(); ++l) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      Grid m = eval_words({{w, 1}}, x, y);
      rows.push_back(flatten(m));
      if (rank(rows) == rows.size()) {
        basis.push_back(std::move(m));
        next.push_back(w + "x");
        next.push_back(w + "y");
      } else {
        rows.pop_back();
      }
    }
    layer = std::move(next);
  }
  return basis;
}

inline std::size_t word_span_dim(const Grid& x, const Grid& y, std::size_t len) {
  return word_basis(x, y, len).size();
}

// Dimension of span{ u g v } for u, v in a spanning set of the algebra.
inline std::size_t two_sided_ideal_dim(const std::vector<Grid>& algebra, const std::vector<Grid>& gens) {
  Grid rows;
  for (const auto& g : gens)
    for (const auto& u : algebra) {
      const Grid ug = mul(u, g);
      for (const auto& v : algebra) rows.push_back(flatten(mul(ug, v)));
    }
  return rank(rows);
}

}  // namespace oracle
