#pragma once
// Dense linear algebra over an abstract field. A field adaptor F supplies
// add, sub, mul, inv on a value type whose 0 and 1 are the additive and
// multiplicative identities (true for FieldSpec encodings and for residues).

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace waring {

// Residues modulo a prime below 2^32.
struct ModPrime {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

namespace linalg {

template <class T>
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<T> a;
  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  bool operator==(const Matrix& o) const = default;
};

template <class F, class T>
Matrix<T> mul(const F& f, const Matrix<T>& x, const Matrix<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      T c = x(i, k);
      if (c == T(0)) continue;
      for (size_t j = 0; j < y.cols; ++j) r(i, j) = f.add(r(i, j), f.mul(c, y(k, j)));
    }
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& x) {
  Matrix<T> r(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
template <class F, class T>
std::vector<size_t> rref(const F& f, Matrix<T>& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t piv = r;
    while (piv < m.rows && m(piv, c) == T(0)) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    T s = f.inv(m(r, c));
    for (size_t j = 0; j < m.cols; ++j) m(r, j) = f.mul(m(r, j), s);
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == T(0)) continue;
      T t = m(i, c);
      for (size_t j = 0; j < m.cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F, class T>
size_t rank(const F& f, Matrix<T> m) {
  return rref(f, m).size();
}

// Basis of {x : m x = 0}, one column vector per entry.
template <class F, class T>
std::vector<std::vector<T>> nullspace(const F& f, Matrix<T> m) {
  auto piv = rref(f, m);
  std::vector<bool> is_piv(m.cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<T> v(m.cols, T(0));
    v[free] = T(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F, class T>
T det(const F& f, Matrix<T> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  T d = T(1);
  const size_t n = m.rows;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m(piv, c) == T(0)) ++piv;
    if (piv == n) return T(0);
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    T s = f.inv(m(c, c));
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == T(0)) continue;
      T t = f.mul(m(i, c), s);
      for (size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(t, m(c, j)));
    }
  }
  return d;
}

template <class F, class T>
Matrix<T> inverse(const F& f, const Matrix<T>& m) {
  const size_t n = m.rows;
  Matrix<T> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

// det(xI - m), coefficients low to high, via reduction to upper Hessenberg
// form by similarity transforms.
template <class F, class T>
std::vector<T> charpoly(const F& f, Matrix<T> h) {
  const size_t n = h.rows;
  for (size_t j = 0; j + 2 < n; ++j) {
    size_t piv = j + 1;
    while (piv < n && h(piv, j) == T(0)) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    T s = f.inv(h(j + 1, j));
    for (size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == T(0)) continue;
      T u = f.mul(h(k, j), s);
      for (size_t c = 0; c < n; ++c) h(k, c) = f.sub(h(k, c), f.mul(u, h(j + 1, c)));
      for (size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {T(1)};
  for (size_t m = 1; m <= n; ++m) {
    std::vector<T> cur(m + 1, T(0));
    const auto& prev = p[m - 1];
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], prev[i]);
      cur[i] = f.sub(cur[i], f.mul(h(m - 1, m - 1), prev[i]));
    }
    T t = T(1);
    for (size_t i = 1; i < m; ++i) {
      t = f.mul(t, h(m - i, m - i - 1));
      T c = f.mul(t, h(m - i - 1, m - 1));
      if (c == T(0)) continue;
      const auto& pp = p[m - i - 1];
      for (size_t k = 0; k < pp.size(); ++k) cur[k] = f.sub(cur[k], f.mul(c, pp[k]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace linalg
}  // namespace waring
