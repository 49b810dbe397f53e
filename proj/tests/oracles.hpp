#pragma once

// Brute-force oracles on plain ints mod a prime p. Nothing here calls the library; the forms are
// written out coordinate by coordinate so a shared bug cannot hide on both sides.
//
// The quadric is eta(x) = 2(x_0 x_n + ... + x_{n-1} x_{2n-1}) + x_{2n}^2, i.e. v^T M v for the
// library's standard Gram matrix.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

inline int md(long long a, int p) {
  a %= p;
  return static_cast<int>(a < 0 ? a + p : a);
}

inline int inv(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (md(static_cast<long long>(a) * x, p) == 1) return x;
  return 0;
}

inline std::uint64_t pw(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline int eta(const IVec& x, int n, int p) {
  long long s = static_cast<long long>(x[2 * n]) * x[2 * n];
  for (int i = 0; i < n; ++i) s += 2LL * x[i] * x[n + i];
  return md(s, p);
}

// Polar form of eta, halved: x^T M y.
inline int polar(const IVec& x, const IVec& y, int n, int p) {
  long long s = static_cast<long long>(x[2 * n]) * y[2 * n];
  for (int i = 0; i < n; ++i) s += static_cast<long long>(x[i]) * y[n + i] + static_cast<long long>(x[n + i]) * y[i];
  return md(s, p);
}

inline int form(const IMat& S, const IVec& x, const IVec& y, int p) {
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<long long>(x[i]) * S[i][j] * y[j];
  return md(s, p);
}

// First nonzero coordinate scaled to 1.
inline IVec normalize(IVec v, int p) {
  for (int x : v)
    if (x) {
      const int c = inv(x, p);
      for (int& y : v) y = md(static_cast<long long>(y) * c, p);
      break;
    }
  return v;
}

// All normalized nonzero vectors of F_p^len.
inline std::vector<IVec> projective_points(int p, int len) {
  std::vector<IVec> out;
  IVec v(len, 0);
  std::uint64_t total = pw(p, len);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < len; ++i, c /= p) v[i] = static_cast<int>(c % p);
    if (normalize(v, p) == v) out.push_back(v);
  }
  return out;
}

inline std::vector<IVec> quadric_points(int p, int n) {
  std::vector<IVec> out;
  for (const IVec& v : projective_points(p, 2 * n + 1))
    if (eta(v, n, p) == 0) out.push_back(v);
  return out;
}

struct Lines {
  std::vector<IVec> points;
  std::vector<std::vector<int>> members;  // sorted point indices of each line
};

// Totally singular lines as point sets, found from every orthogonal pair of singular points.
inline Lines singular_lines(int p, int n) {
  Lines L;
  L.points = quadric_points(p, n);
  std::map<IVec, int> idx;
  for (std::size_t i = 0; i < L.points.size(); ++i) idx[L.points[i]] = static_cast<int>(i);
  std::set<std::vector<int>> seen;
  const std::size_t N = L.points.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      if (polar(L.points[a], L.points[b], n, p)) continue;
      std::vector<int> pts{static_cast<int>(a)};
      for (int t = 0; t < p; ++t) {
        IVec w(L.points[b]);
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = md(w[k] + static_cast<long long>(t) * L.points[a][k], p);
        pts.push_back(idx.at(normalize(w, p)));
      }
      std::sort(pts.begin(), pts.end());
      seen.insert(pts);
    }
  L.members.assign(seen.begin(), seen.end());
  return L;
}

// Zeros of phi on the lines: the number of lines that are totally isotropic for S.
inline std::uint64_t isotropic_lines(const Lines& L, const IMat& S, int p) {
  std::uint64_t c = 0;
  for (const auto& m : L.members)
    if (form(S, L.points[m[0]], L.points[m[1]], p) == 0) ++c;
  return c;
}

inline std::uint64_t form_weight(const Lines& L, const IMat& S, int p) { return L.members.size() - isotropic_lines(L, S, p); }

// tau(x): lines through x on the quadric inside x^perp for S. Each such line has p other points.
inline std::uint64_t tau(const Lines& L, const IMat& S, const IVec& x, int n, int p) {
  std::uint64_t c = 0;
  for (const IVec& y : L.points)
    if (y != x && polar(x, y, n, p) == 0 && form(S, x, y, p) == 0) ++c;
  return c / p;
}

// Points off the quadric split by the shape of their polar section: singular points of x^perp
// number (p^n - 1)(p^{n-1} + 1)/(p-1) when the section is hyperbolic (external) and
// (p^n + 1)(p^{n-1} - 1)/(p-1) when elliptic (internal). For n = 1 this is the tangent count.
struct Orbits {
  std::uint64_t on = 0, internal = 0, external = 0, other = 0;
};

inline Orbits orbits(int p, int n) {
  const auto Q = quadric_points(p, n);
  const std::uint64_t hyp = (pw(p, n) - 1) * (pw(p, n - 1) + 1) / (p - 1);
  const std::uint64_t ell = (pw(p, n) + 1) * (pw(p, n - 1) - 1) / (p - 1);
  Orbits o;
  for (const IVec& x : projective_points(p, 2 * n + 1)) {
    if (eta(x, n, p) == 0) {
      ++o.on;
      continue;
    }
    std::uint64_t s = 0;
    for (const IVec& y : Q)
      if (polar(x, y, n, p) == 0) ++s;
    if (s == hyp)
      ++o.external;
    else if (s == ell)
      ++o.internal;
    else
      ++o.other;
  }
  return o;
}

// Pluecker vector u ^ v, pairs i<j in lexicographic order.
inline IVec plucker(const IVec& u, const IVec& v, int p) {
  IVec out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      out.push_back(md(static_cast<long long>(u[i]) * v[j] - static_cast<long long>(u[j]) * v[i], p));
  return out;
}

// Columns of the full Grassmann code of lines of PG(2n, p) whose line is totally singular. Lines
// come from every reduced echelon pair, so nothing depends on the quadric enumeration above.
inline std::vector<IVec> punctured_grassmann_columns(int p, int n) {
  const int len = 2 * n + 1;
  std::vector<IVec> cols;
  const auto pts = projective_points(p, len);
  for (const IVec& u : pts)
    for (const IVec& v : pts) {
      // Echelon pair: pivots i < j, u[j] = 0.
      int i = 0, j = 0;
      while (u[i] == 0) ++i;
      while (v[j] == 0) ++j;
      if (!(i < j) || u[j] != 0) continue;
      if (eta(u, n, p) || eta(v, n, p) || polar(u, v, n, p)) continue;
      cols.push_back(plucker(u, v, p));
    }
  return cols;
}

inline std::uint64_t message_weight(const std::vector<IVec>& cols, const IVec& m, int p) {
  std::uint64_t w = 0;
  for (const IVec& c : cols) {
    long long s = 0;
    for (std::size_t k = 0; k < c.size(); ++k) s += static_cast<long long>(c[k]) * m[k];
    if (md(s, p)) ++w;
  }
  return w;
}

// Minimum nonzero weight over all messages up to scalar.
inline std::uint64_t min_distance(const std::vector<IVec>& cols, int p) {
  const int K = static_cast<int>(cols.front().size());
  std::uint64_t best = UINT64_MAX;
  for (const IVec& m : projective_points(p, K)) best = std::min(best, message_weight(cols, m, p));
  return best;
}

// Leibniz expansion.
inline int determinant(const IMat& a, int p) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  long long total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    long long t = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) t = md(t * a[i][perm[i]], p);
    total = md(total + t, p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<int>(total);
}

// Rank by counting the vectors of the row space.
inline int rank_by_span(const IMat& a, int p) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::set<IVec> span{IVec(cols, 0)};
  for (const IVec& row : a) {
    std::set<IVec> next;
    for (const IVec& s : span)
      for (int t = 0; t < p; ++t) {
        IVec w(s);
        for (std::size_t k = 0; k < cols; ++k) w[k] = md(w[k] + static_cast<long long>(t) * row[k], p);
        next.insert(w);
      }
    span.swap(next);
  }
  int r = 0;
  for (std::size_t s = span.size(); s > 1; s /= p) ++r;
  return r;
}

// Residue constants straight from their definitions.
struct Constants {
  std::uint64_t A0, Bplus, B0, Bminus;
};
inline Constants constants(int n, int q) {
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  return {(pw(Q, 2 * n - 2) - 1) / (Q - 1), (pw(Q, n - 1) - 1) * (pw(Q, n - 2) + 1) / (Q - 1),
          (pw(Q, 2 * n - 3) - 1) / (Q - 1), (pw(Q, n - 1) + 1) * (pw(Q, n - 2) - 1) / (Q - 1)};
}

}  // namespace oracle
