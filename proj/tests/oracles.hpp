#pragma once

// Independent reference computations used to cross-check the library. They
// favour obviousness over speed and share no code with k3lat internals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "k3lat/int_matrix.hpp"

namespace oracle {

using k3lat::IntMatrix;
using k3lat::IntVector;
using k3lat::Integer;
using k3lat::Rational;

// Cofactor expansion along the first row.
inline Integer det_laplace(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const Integer term = m(0, j) * det_laplace(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

// Smith invariants d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
// Zeros fill the tail up to min(rows, cols).
inline IntVector smith_by_minors(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols(), n = std::min(r, c);
  IntVector out;
  Integer prev = 1;
  bool zero = false;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    if (!zero) {
      subsets(r, k, [&](const std::vector<std::size_t>& rows) {
        subsets(c, k, [&](const std::vector<std::size_t>& cols) {
          IntMatrix sub(k, k);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
          g = gcd(g, det_laplace(sub));
        });
      });
    }
    if (g == 0) {
      zero = true;
      out.push_back(0);
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Row Hermite form by pairwise extended-gcd row combinations, column by
// column. Pivots positive, entries above a pivot in [0, pivot).
inline IntMatrix hnf_xgcd(IntMatrix h) {
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    for (std::size_t i = pr + 1; i < rows; ++i) {
      if (h(i, c) == 0) continue;
      const Integer a = h(pr, c), b = h(i, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer u = a / g, v = b / g;
      // [[s, t], [-v, u]] has determinant 1.
      for (std::size_t k = 0; k < cols; ++k) {
        const Integer x = h(pr, k), y = h(i, k);
        h(pr, k) = s * x + t * y;
        h(i, k) = -v * x + u * y;
      }
    }
    if (h(pr, c) == 0) continue;
    if (h(pr, c) < 0)
      for (std::size_t k = 0; k < cols; ++k) h(pr, k) = -h(pr, k);
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pr, c).get_mpz_t());
      for (std::size_t k = 0; k < cols; ++k) h(i, k) -= q * h(pr, k);
    }
    ++pr;
  }
  return h;
}

// Gauss-Jordan inverse over Q.
inline std::vector<std::vector<Rational>> inverse_gj(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// For a definite Gram G and bound B, |x_i| <= floor(sqrt(B * |(G^-1)_ii|)) for
// every x with |x G x^T| <= B (Cauchy-Schwarz in the dual).
inline std::vector<long> box_radii(const IntMatrix& g, long bound) {
  const auto inv = inverse_gj(g);
  std::vector<long> r;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const Rational t = abs(inv[i][i]) * bound;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    r.push_back(static_cast<long>(Integer(sqrt(fl)).get_si()));
  }
  return r;
}

// Exhaustive scan of the box; visits each nonzero x with its norm. Keeps the
// vector x*G up to date incrementally so each step is O(n).
inline void box_scan(const IntMatrix& g, const std::vector<long>& radii,
                     const std::function<void(const std::vector<long>&, long)>& visit) {
  const std::size_t n = g.rows();
  std::vector<std::vector<long>> gl(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gl[i][j] = g(i, j).get_si();
  std::vector<long> x(n), xg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -radii[i];
    for (std::size_t j = 0; j < n; ++j) xg[j] += x[i] * gl[i][j];
  }
  while (true) {
    long norm = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      norm += x[i] * xg[i];
      nonzero = nonzero || x[i] != 0;
    }
    if (nonzero) visit(x, norm);
    std::size_t k = 0;
    while (k < n && x[k] == radii[k]) {
      for (std::size_t j = 0; j < n; ++j) xg[j] -= 2 * radii[k] * gl[k][j];
      x[k] = -radii[k];
      ++k;
    }
    if (k == n) return;
    ++x[k];
    for (std::size_t j = 0; j < n; ++j) xg[j] += gl[k][j];
  }
}

inline std::vector<bool> is_square_mod(long p) {
  std::vector<bool> sq(static_cast<std::size_t>(p), false);
  for (long x = 1; x < p; ++x) sq[static_cast<std::size_t>((x * x) % p)] = true;
  return sq;
}

inline int legendre_table(long a, long p) {
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  return is_square_mod(p)[static_cast<std::size_t>(r)] ? 1 : -1;
}

inline bool is_prime_trial(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Product of random elementary row operations: unimodular with small entries.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> k(-1, 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    IntMatrix trial = u;
    trial.add_row_multiple(a, b, Integer(k(rng)));
    bool small = true;
    for (const auto& x : trial.data()) small = small && abs(x) <= 3;
    if (small) u = trial;
  }
  return u;
}

// Random symmetric matrix with even diagonal and nonzero determinant.
inline IntMatrix random_even_gram(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> off(-range, range);
  while (true) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = 2 * off(rng);
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = off(rng);
    }
    if (det_laplace(g) != 0) return g;
  }
}

}  // namespace oracle
