#pragma once
// The split quadratic form Q(x) = x1 x2 + x3 x4 + ... on GF(q)^(2n), q even,
// and the rank 3 action of its orthogonal group on singular points.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "waring/field.hpp"
#include "waring/linalg.hpp"
#include "waring/numth.hpp"

namespace waring {

using FMatrix = linalg::Matrix<Elem>;

class OrthogonalSpace {
 public:
  // Throws std::invalid_argument unless q is a power of 2 and 2 <= n <= 8.
  OrthogonalSpace(unsigned n, uint64_t q);

  unsigned n() const { return n_; }
  unsigned dim() const { return 2 * n_; }
  uint64_t q() const { return q_; }
  const FieldPtr& field() const { return F_; }

  Elem Q(const std::vector<Elem>& v) const;
  Elem B(const std::vector<Elem>& u, const std::vector<Elem>& v) const;
  bool preserves_form(const FMatrix& g) const;
  // Form preserved and rank(g - 1) even.
  bool in_omega(const FMatrix& g) const;

  FMatrix apply_basis(const std::vector<std::vector<Elem>>& images) const;  // columns
  std::vector<Elem> apply(const FMatrix& g, const std::vector<Elem>& v) const;
  FMatrix mul(const FMatrix& a, const FMatrix& b) const { return linalg::mul(*F_, a, b); }
  FMatrix inverse(const FMatrix& a) const { return linalg::inverse(*F_, a); }

  // Orthogonal transvection x -> x + B(x, v) Q(v)^-1 v; requires Q(v) != 0.
  FMatrix reflection(const std::vector<Elem>& v) const;
  // Product of an even number of random reflections (an element of Omega).
  FMatrix random_omega(std::mt19937_64& rng, unsigned reflections = 6) const;

  // dim Ker(g - lambda) over GF(q^2) for lambda in GF(q^2), lambda given
  // in the encoding of GF(q^2).
  unsigned kernel_dim_ext(const FMatrix& g, Elem lambda) const;
  const FieldPtr& ext_field() const { return F2_; }

 private:
  unsigned n_;
  uint64_t q_;
  FieldPtr F_, F2_;
  std::shared_ptr<FieldEmbedding> emb_;
};

// Eigenvalue-kernel formula for the degree (q^2n - q^2)/(q^2 - 1) constituent
// of the rank 3 character. Throws std::invalid_argument if g does not
// preserve the form and std::domain_error on a non-integral value.
BigInt gamma_rank3(const OrthogonalSpace& V, const FMatrix& g);
// Number of singular 1-spaces fixed by g, counted over the GF(q)
// eigenspaces. Throws std::length_error when an eigenspace has more than
// 2^26 vectors.
BigInt rho_singular_fixed(const OrthogonalSpace& V, const FMatrix& g);

enum class Bound2Case { A1, A2, B1, B2 };
std::string to_string(Bound2Case c);
// Explicit representatives; A1 requires q >= 4 and n >= 2, A2 and B n >= 2.
FMatrix bound2_element(const OrthogonalSpace& V, Bound2Case c);

struct Bound2Expect {
  BigInt rho, gamma, alpha;
};
Bound2Expect bound2_expected(unsigned n, uint64_t q, Bound2Case c);

}  // namespace waring
