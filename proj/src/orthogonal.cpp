#include "waring/orthogonal.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace waring {

namespace {

using Vec = std::vector<Elem>;

BigInt ipow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

}  // namespace

OrthogonalSpace::OrthogonalSpace(unsigned n, uint64_t q) : n_(n), q_(q) {
  if (q < 2 || (q & (q - 1))) throw std::invalid_argument("OrthogonalSpace: q must be a power of 2");
  if (n < 2 || n > 8) throw std::invalid_argument("OrthogonalSpace: n must lie in 2..8");
  const unsigned f = static_cast<unsigned>(std::countr_zero(q));
  F_ = make_field(2, f);
  F2_ = make_field(2, 2 * f);
  emb_ = std::make_shared<FieldEmbedding>(F_, F2_);
}

Elem OrthogonalSpace::Q(const Vec& v) const {
  Elem s = 0;
  for (unsigned i = 0; i < n_; ++i) s = F_->add(s, F_->mul(v[2 * i], v[2 * i + 1]));
  return s;
}

Elem OrthogonalSpace::B(const Vec& u, const Vec& v) const {
  Elem s = 0;
  for (unsigned i = 0; i < n_; ++i) {
    s = F_->add(s, F_->mul(u[2 * i], v[2 * i + 1]));
    s = F_->add(s, F_->mul(u[2 * i + 1], v[2 * i]));
  }
  return s;
}

Vec OrthogonalSpace::apply(const FMatrix& g, const Vec& v) const {
  Vec r(dim(), 0);
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j) r[i] = F_->add(r[i], F_->mul(g(i, j), v[j]));
  return r;
}

FMatrix OrthogonalSpace::apply_basis(const std::vector<Vec>& images) const {
  if (images.size() != dim()) throw std::invalid_argument("apply_basis: wrong number of images");
  FMatrix g(dim(), dim());
  for (unsigned j = 0; j < dim(); ++j)
    for (unsigned i = 0; i < dim(); ++i) g(i, j) = images[j].at(i);
  return g;
}

bool OrthogonalSpace::preserves_form(const FMatrix& g) const {
  if (g.rows != dim() || g.cols != dim()) return false;
  std::vector<Vec> cols(dim(), Vec(dim()));
  for (unsigned j = 0; j < dim(); ++j)
    for (unsigned i = 0; i < dim(); ++i) cols[j][i] = g(i, j);
  for (unsigned j = 0; j < dim(); ++j) {
    if (Q(cols[j]) != 0) return false;
    for (unsigned k = j + 1; k < dim(); ++k) {
      const Elem want = (k == j + 1 && j % 2 == 0) ? 1 : 0;
      if (B(cols[j], cols[k]) != want) return false;
    }
  }
  return true;
}

bool OrthogonalSpace::in_omega(const FMatrix& g) const {
  if (!preserves_form(g)) return false;
  FMatrix d = g;
  for (unsigned i = 0; i < dim(); ++i) d(i, i) = F_->sub(d(i, i), 1);
  return linalg::rank(*F_, d) % 2 == 0;
}

FMatrix OrthogonalSpace::reflection(const Vec& v) const {
  const Elem qv = Q(v);
  if (qv == 0) throw std::invalid_argument("reflection: singular vector");
  const Elem s = F_->inv(qv);
  std::vector<Vec> cols;
  for (unsigned j = 0; j < dim(); ++j) {
    Vec e(dim(), 0);
    e[j] = 1;
    const Elem c = F_->mul(B(e, v), s);
    for (unsigned i = 0; i < dim(); ++i) e[i] = F_->add(e[i], F_->mul(c, v[i]));
    cols.push_back(std::move(e));
  }
  return apply_basis(cols);
}

FMatrix OrthogonalSpace::random_omega(std::mt19937_64& rng, unsigned reflections) const {
  if (reflections % 2) ++reflections;
  std::uniform_int_distribution<uint64_t> pick(0, q_ - 1);
  FMatrix g = FMatrix::identity(dim());
  for (unsigned r = 0; r < reflections; ++r) {
    Vec v(dim());
    do {
      for (auto& x : v) x = static_cast<Elem>(pick(rng));
    } while (Q(v) == 0);
    g = mul(g, reflection(v));
  }
  return g;
}

unsigned OrthogonalSpace::kernel_dim_ext(const FMatrix& g, Elem lambda) const {
  FMatrix h(dim(), dim());
  for (unsigned i = 0; i < dim(); ++i)
    for (unsigned j = 0; j < dim(); ++j) h(i, j) = (*emb_)(g(i, j));
  for (unsigned i = 0; i < dim(); ++i) h(i, i) = F2_->sub(h(i, i), lambda);
  return dim() - static_cast<unsigned>(linalg::rank(*F2_, h));
}

BigInt gamma_rank3(const OrthogonalSpace& V, const FMatrix& g) {
  if (!V.preserves_form(g)) throw std::invalid_argument("gamma_rank3: element does not preserve the form");
  const uint64_t q = V.q();
  const FieldSpec& L = *V.ext_field();
  FieldEmbedding emb(V.field(), V.ext_field());
  const Elem delta = V.field()->primitive_element();
  BigInt s1 = 0, s2 = 0;
  Elem lam = 1;
  for (uint64_t i = 0; i + 1 < q; ++i) {
    s1 += ipow(BigInt(q), V.kernel_dim_ext(g, emb(lam)));
    lam = V.field()->mul(lam, delta);
  }
  const Elem xi = L.pow(L.primitive_element(), q - 1);
  Elem mu = 1;
  for (uint64_t j = 0; j <= q; ++j) {
    s2 += ipow(-BigInt(q), V.kernel_dim_ext(g, mu));
    mu = L.mul(mu, xi);
  }
  // gamma = (s1/(q-1) - s2/(q+1))/2 - 1
  const BigInt num = s1 * (q + 1) - s2 * (q - 1);
  const BigInt den = BigInt(2) * (q * q - 1);
  if (num % den != 0) throw std::domain_error("gamma_rank3: non-integral value");
  return num / den - 1;
}

BigInt rho_singular_fixed(const OrthogonalSpace& V, const FMatrix& g) {
  if (!V.preserves_form(g)) throw std::invalid_argument("rho_singular_fixed: element does not preserve the form");
  const FieldSpec& F = *V.field();
  const unsigned d = V.dim();
  const uint64_t q = V.q();
  BigInt total = 0;
  for (Elem lam = 1; lam < q; ++lam) {
    FMatrix h = g;
    for (unsigned i = 0; i < d; ++i) h(i, i) = F.sub(h(i, i), lam);
    auto basis = linalg::nullspace(F, h);
    const unsigned k = static_cast<unsigned>(basis.size());
    if (k == 0) continue;
    if (double(k) * std::log2(double(q)) > 26) throw std::length_error("rho_singular_fixed: eigenspace too large");
    std::vector<Elem> digit(k, 0);
    Vec v(d, 0);
    uint64_t count = 0;
    // mixed-radix walk; addition in characteristic 2 is xor of encodings
    for (;;) {
      unsigned i = 0;
      while (i < k) {
        const Elem old = digit[i];
        const Elem nxt = static_cast<Elem>((old + 1) % q);
        const Elem step = old ^ nxt;
        for (unsigned t = 0; t < d; ++t) v[t] = F.add(v[t], F.mul(step, basis[i][t]));
        digit[i] = nxt;
        if (nxt != 0) break;
        ++i;
      }
      if (i == k) break;
      if (V.Q(v) == 0) ++count;
    }
    total += count;
  }
  if (total % (q - 1) != 0) throw std::logic_error("rho_singular_fixed: eigenvector count not divisible by q-1");
  return total / (q - 1);
}

std::string to_string(Bound2Case c) {
  switch (c) {
    case Bound2Case::A1: return "a1";
    case Bound2Case::A2: return "a2";
    case Bound2Case::B1: return "b1";
    case Bound2Case::B2: return "b2";
  }
  return "?";
}

namespace {

// Element acting on the last two hyperbolic pairs by T A T^-1 (T columns
// are a basis of that 4-space in local coordinates) and trivially elsewhere.
FMatrix embed_block(const OrthogonalSpace& V, const FMatrix& T, const FMatrix& A) {
  const FieldSpec& F = *V.field();
  FMatrix local = linalg::mul(F, linalg::mul(F, T, A), linalg::inverse(F, T));
  FMatrix g = FMatrix::identity(V.dim());
  const unsigned o = V.dim() - 4;
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j < 4; ++j) g(o + i, o + j) = local(i, j);
  return g;
}

FMatrix from_columns(const std::vector<Vec>& cols) {
  FMatrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

FMatrix anisotropic_rotation(const OrthogonalSpace& V) {
  const FieldSpec& F = *V.field();
  const uint64_t q = V.q();
  OrthogonalSpace W(2, q);
  auto vec = [&](uint64_t code) {
    Vec v(4);
    for (unsigned i = 0; i < 4; ++i, code /= q) v[i] = static_cast<Elem>(code % q);
    return v;
  };
  auto comb = [&](Elem x, const Vec& a, Elem y, const Vec& b) {
    Vec r(4);
    for (unsigned i = 0; i < 4; ++i) r[i] = F.add(F.mul(x, a[i]), F.mul(y, b[i]));
    return r;
  };
  const uint64_t N = q * q * q * q;
  for (uint64_t cu = 1; cu < N; ++cu) {
    Vec u = vec(cu);
    if (W.Q(u) == 0) continue;
    for (uint64_t cw = cu + 1; cw < N; ++cw) {
      Vec w = vec(cw);
      bool aniso = true;
      for (Elem x = 0; x < q && aniso; ++x)
        for (Elem y = 0; y < q && aniso; ++y)
          if ((x || y) && W.Q(comb(x, u, y, w)) == 0) aniso = false;
      if (!aniso) continue;
      FMatrix cond(2, 4);
      for (unsigned i = 0; i < 4; ++i) {
        Vec e(4, 0);
        e[i] = 1;
        cond(0, i) = W.B(e, u);
        cond(1, i) = W.B(e, w);
      }
      auto perp = linalg::nullspace(F, cond);
      FMatrix T = from_columns({u, w, perp.at(0), perp.at(1)});
      for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
          for (Elem c = 0; c < q; ++c)
            for (Elem d = 0; d < q; ++d) {
              Vec hu = comb(a, u, c, w), hw = comb(b, u, d, w);
              if (W.Q(hu) != W.Q(u) || W.Q(hw) != W.Q(w) || W.B(hu, hw) != W.B(u, w)) continue;
              FMatrix h2(2, 2);
              h2(0, 0) = F.sub(a, 1), h2(0, 1) = b, h2(1, 0) = c, h2(1, 1) = F.sub(d, 1);
              if (linalg::rank(F, h2) != 2) continue;
              FMatrix A = FMatrix::identity(4);
              A(0, 0) = a, A(0, 1) = b, A(1, 0) = c, A(1, 1) = d;
              return embed_block(V, T, A);
            }
    }
  }
  throw std::logic_error("no anisotropic plane found");
}

}  // namespace

FMatrix bound2_element(const OrthogonalSpace& V, Bound2Case c) {
  const FieldSpec& F = *V.field();
  const unsigned d = V.dim();
  FMatrix g;
  switch (c) {
    case Bound2Case::A1: {
      if (V.q() < 4) throw std::invalid_argument("case a1 needs q >= 4");
      g = FMatrix::identity(d);
      const Elem lam = F.primitive_element();
      g(d - 2, d - 2) = lam;
      g(d - 1, d - 1) = F.inv(lam);
      break;
    }
    case Bound2Case::A2:
      g = anisotropic_rotation(V);
      break;
    case Bound2Case::B1: {
      // local coordinates (a1, b1, a2, b2); e_i = a_i + b_i, f_i = a_i
      FMatrix T = from_columns({{1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 0}});
      FMatrix A = FMatrix::identity(4);  // basis order e1, f1, e2, f2
      A(0, 1) = 1;
      A(2, 3) = 1;
      g = embed_block(V, T, A);
      break;
    }
    case Bound2Case::B2: {
      FMatrix T = FMatrix::identity(4);
      FMatrix A = FMatrix::identity(4);  // e2 -> e1 + e2, f1 -> f1 + f2
      A(0, 2) = 1;
      A(3, 1) = 1;
      g = embed_block(V, T, A);
      break;
    }
  }
  if (!V.in_omega(g)) throw std::logic_error("constructed element is not in Omega");
  return g;
}

Bound2Expect bound2_expected(unsigned n, uint64_t qq, Bound2Case c) {
  const BigInt q = qq;
  auto P = [&](int e) { return ipow(q, static_cast<unsigned>(e)); };
  auto exact = [](const BigInt& a, const BigInt& b) {
    if (a % b != 0) throw std::domain_error("bound2_expected: non-integral closed form");
    return a / b;
  };
  const int N = static_cast<int>(n);
  Bound2Expect r;
  switch (c) {
    case Bound2Case::A1:
      r.rho = 2 + exact((P(N - 1) - 1) * (P(N - 2) + 1), q - 1);
      r.gamma = exact(P(2 * N - 2) - 1, q * q - 1);
      r.alpha = 1 + exact((P(N - 1) - 1) * (P(N - 2) + q), q * q - 1);
      break;
    case Bound2Case::A2:
      r.rho = exact((P(N - 1) + 1) * (P(N - 2) - 1), q - 1);
      r.gamma = exact(P(2 * N - 2) - 1, q * q - 1);
      r.alpha = -1 + exact((P(N - 1) + 1) * (P(N - 2) - q), q * q - 1);
      break;
    case Bound2Case::B1:
      r.rho = exact(P(2 * N - 3) - 1, q - 1);
      r.gamma = exact(P(2 * N - 2) - q * q, q * q - 1);
      r.alpha = r.rho - 1 - r.gamma;
      break;
    case Bound2Case::B2:
      r.rho = exact(P(2 * N - 3) + P(N) - P(N - 1) - 1, q - 1);
      r.gamma = exact(P(2 * N - 2) - q * q, q * q - 1);
      r.alpha = r.rho - 1 - r.gamma;
      break;
  }
  return r;
}

}  // namespace waring
