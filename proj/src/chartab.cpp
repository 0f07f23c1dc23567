#include "waring/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "waring/linalg.hpp"

namespace waring {
namespace {

using linalg::Matrix;

uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

uint64_t primitive_root(uint64_t p) {
  auto fac = distinct_primes(p - 1);
  for (uint64_t g = 2;; ++g) {
    bool ok = true;
    for (uint64_t r : fac)
      if (powmod_u64(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

struct Space {
  Matrix<uint64_t> basis;  // reduced row echelon rows
  std::vector<size_t> pivots;
};

BigInt to_big(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

std::vector<Space> split(const ModPrime& F, const StructureConstants& A, uint32_t i, Space W) {
  const size_t d = W.basis.rows, k = W.basis.cols;
  Matrix<uint64_t> R(d, d);
  for (size_t s = 0; s < d; ++s)
    for (size_t t = 0; t < d; ++t) {
      uint64_t acc = 0;
      for (size_t c = 0; c < k; ++c) {
        uint64_t b = W.basis(s, c);
        if (!b) continue;
        acc = F.add(acc, F.mul(A.at(i, static_cast<uint32_t>(W.pivots[t]), static_cast<uint32_t>(c)) % F.p, b));
      }
      R(t, s) = acc;
    }
  std::vector<uint64_t> cp = linalg::charpoly(F, R);
  std::vector<uint64_t> roots;
  std::vector<uint64_t> rest = cp;
  for (uint64_t lam = 0; lam < F.p && rest.size() > 1; ++lam) {
    bool found = false;
    for (;;) {
      // synthetic division by (x - lam)
      const size_t n = rest.size() - 1;
      std::vector<uint64_t> q(n);
      uint64_t carry = rest[n];
      for (size_t t = n; t-- > 0;) {
        q[t] = carry;
        carry = F.add(rest[t], F.mul(carry, lam));
      }
      if (carry != 0) break;
      rest = std::move(q);
      found = true;
      if (rest.size() == 1) break;
    }
    if (found) roots.push_back(lam);
  }
  if (rest.size() > 1) throw std::runtime_error("class matrix does not split over GF(ell)");
  if (roots.size() == 1) return {std::move(W)};
  std::vector<Space> out;
  size_t total = 0;
  for (uint64_t lam : roots) {
    Matrix<uint64_t> S = R;
    for (size_t t = 0; t < d; ++t) S(t, t) = F.sub(S(t, t), lam);
    auto ns = linalg::nullspace(F, S);
    Space V;
    V.basis = Matrix<uint64_t>(ns.size(), k);
    for (size_t r = 0; r < ns.size(); ++r)
      for (size_t t = 0; t < d; ++t) {
        if (!ns[r][t]) continue;
        for (size_t c = 0; c < k; ++c) V.basis(r, c) = F.add(V.basis(r, c), F.mul(ns[r][t], W.basis(t, c)));
      }
    V.pivots = linalg::rref(F, V.basis);
    total += ns.size();
    out.push_back(std::move(V));
  }
  if (total != d) throw std::runtime_error("class matrix is not diagonalizable over GF(ell)");
  return out;
}

}  // namespace

void CharacterTable::index() {
  sparse.assign(values.size(), {});
  for (size_t x = 0; x < values.size(); ++x)
    for (const auto& v : values[x]) sparse[x].push_back(v.nonzeros());
  traces.resize(e);
  for (uint32_t t = 0; t < e; ++t) traces[t] = ramanujan_sum(e, t);
}

uint64_t dixon_prime(uint64_t e, uint64_t order) {
  for (uint64_t ell = e + 1;; ell += e) {
    if (ell >= (uint64_t(1) << 32)) throw std::overflow_error("dixon_prime: prime exceeds 32 bits");
    if (ell * ell > 4 * order && is_prime_u64(ell)) return ell;
  }
}

TablePtr dixon_table(const StructureConstants& A) {
  const ClassDecomposition& D = A.classes();
  const Group& G = D.group();
  const uint32_t k = D.count();
  if (k > 256) throw std::length_error("dixon_table: more than 256 classes");
  const uint64_t N = G.order();
  auto T = std::make_shared<CharacterTable>();
  T->classes = A.classes_ptr();
  T->e = static_cast<uint32_t>(G.exponent());
  T->ell = dixon_prime(T->e, N);
  const ModPrime F{T->ell};
  T->zeta = F.pow(primitive_root(T->ell), (T->ell - 1) / T->e);

  std::vector<Space> spaces(1);
  spaces[0].basis = Matrix<uint64_t>::identity(k);
  spaces[0].pivots.resize(k);
  std::iota(spaces[0].pivots.begin(), spaces[0].pivots.end(), size_t(0));
  for (uint32_t i = 1; i < k; ++i) {
    bool done = std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.rows == 1; });
    if (done) break;
    std::vector<Space> next;
    for (auto& W : spaces) {
      if (W.basis.rows == 1) {
        next.push_back(std::move(W));
        continue;
      }
      for (auto& V : split(F, A, i, std::move(W))) next.push_back(std::move(V));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw std::runtime_error("dixon_table: common eigenspaces did not split");

  std::vector<uint64_t> size_inv(k);
  for (uint32_t j = 0; j < k; ++j) size_inv[j] = F.inv(D.cls(j).size % T->ell);
  const uint64_t root_bound = isqrt(N);
  struct Row {
    uint64_t degree;
    std::vector<CyclotomicInt> values;
  };
  std::vector<Row> rows;
  for (const auto& W : spaces) {
    std::vector<uint64_t> w(W.basis.a.begin(), W.basis.a.end());
    if (w[0] == 0) throw std::runtime_error("dixon_table: eigenvector vanishes at the identity class");
    const uint64_t s = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, s);
    uint64_t S = 0;
    for (uint32_t j = 0; j < k; ++j) S = F.add(S, F.mul(F.mul(w[j], w[D.inverse_class(j)]), size_inv[j]));
    const uint64_t d2 = F.mul(N % T->ell, F.inv(S));
    uint64_t d = 0;
    for (uint64_t c = 1; c <= root_bound; ++c)
      if (c * c % T->ell == d2) {
        d = c;
        break;
      }
    if (d == 0) throw std::runtime_error("dixon_table: no admissible degree");
    std::vector<uint64_t> chi(k);
    for (uint32_t j = 0; j < k; ++j) chi[j] = F.mul(F.mul(w[j], d), size_inv[j]);
    Row row{d, {}};
    for (uint32_t j = 0; j < k; ++j) {
      const uint32_t n = D.cls(j).order;
      const uint64_t zn = F.pow(T->zeta, T->e / n);
      std::vector<uint64_t> zp(n);
      zp[0] = 1;
      for (uint32_t t = 1; t < n; ++t) zp[t] = F.mul(zp[t - 1], zn);
      const uint64_t ninv = F.inv(n % T->ell);
      CyclotomicInt v(T->e);
      for (uint32_t u = 0; u < n; ++u) {
        uint64_t acc = 0;
        for (uint32_t s2 = 0; s2 < n; ++s2) {
          uint64_t x = chi[D.power_class(j, s2)];
          uint32_t ex = static_cast<uint32_t>((n - (uint64_t(u) * s2) % n) % n);
          acc = F.add(acc, F.mul(x, zp[ex]));
        }
        uint64_t m = F.mul(acc, ninv);
        if (m > d) throw std::runtime_error("dixon_table: eigenvalue multiplicity out of range");
        v[u * (T->e / n)] = static_cast<int64_t>(m);
      }
      row.values.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t j = 0; j < a.values.size(); ++j) {
      const auto& x = a.values[j].coeffs();
      const auto& y = b.values[j].coeffs();
      if (x != y) return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
    }
    return false;
  });
  for (auto& r : rows) {
    T->degrees.push_back(r.degree);
    T->values.push_back(std::move(r.values));
  }
  T->index();
  auto check = verify_table(*T);
  if (!check.ok()) throw std::runtime_error("dixon_table: verification failed for " + G.name());
  T->verified = true;
  return T;
}

TableCheck verify_table(const CharacterTable& T) {
  TableCheck out;
  const ClassDecomposition& D = *T.classes;
  const uint32_t k = D.count();
  const uint64_t N = D.group().order();
  const uint32_t e = T.e;
  if (T.size() != k || T.sparse.size() != k) return out;
  BigInt sum = 0;
  out.degrees_divide = true;
  for (uint64_t d : T.degrees) {
    sum += BigInt(d) * d;
    if (d == 0 || N % d) out.degrees_divide = false;
  }
  out.degree_sum = sum == N;
  out.roots_of_unity = true;
  for (uint32_t x = 0; x < k; ++x)
    for (uint32_t j = 0; j < k; ++j) {
      const uint32_t step = e / D.cls(j).order;
      int64_t w = 0;
      for (auto [t, m] : T.sparse[x][j]) {
        if (m < 0 || t % step) out.roots_of_unity = false;
        w += m;
      }
      if (w != static_cast<int64_t>(T.degrees[x])) out.roots_of_unity = false;
      if (j == 0 && (T.sparse[x][0].size() != 1 || T.sparse[x][0][0].first != 0)) out.roots_of_unity = false;
    }
  out.rows = true;
  std::vector<int64_t> v(e);
  for (uint32_t a = 0; a < k && out.rows; ++a)
    for (uint32_t b = a; b < k; ++b) {
      std::fill(v.begin(), v.end(), 0);
      for (uint32_t j = 0; j < k; ++j) {
        const int64_t sz = static_cast<int64_t>(D.cls(j).size);
        for (auto [t, m] : T.sparse[a][j])
          for (auto [u, m2] : T.sparse[b][j]) v[(t + e - u) % e] += sz * m * m2;
      }
      if (a == b) v[0] -= static_cast<int64_t>(N);
      if (!is_zero_cyclotomic(e, v)) {
        out.rows = false;
        break;
      }
    }
  out.columns = true;
  for (uint32_t i = 0; i < k && out.columns; ++i)
    for (uint32_t j = i; j < k; ++j) {
      std::fill(v.begin(), v.end(), 0);
      for (uint32_t x = 0; x < k; ++x)
        for (auto [t, m] : T.sparse[x][i])
          for (auto [u, m2] : T.sparse[x][j]) v[(t + e - u) % e] += m * m2;
      if (i == j) v[0] -= static_cast<int64_t>(D.cls(i).centralizer_order);
      if (!is_zero_cyclotomic(e, v)) {
        out.columns = false;
        break;
      }
    }
  return out;
}

FrobeniusResult frobenius_sum(const CharacterTable& T, uint32_t i, uint32_t j, uint32_t k) {
  if (!T.verified) throw std::invalid_argument("frobenius_sum: table is not verified");
  const ClassDecomposition& D = *T.classes;
  if (i >= D.count() || j >= D.count() || k >= D.count()) throw std::out_of_range("class id out of range");
  const uint32_t e = T.e;
  uint64_t L = 1;
  for (uint64_t d : T.degrees) L = std::lcm(L, d);
  __int128 num = 0;
  for (uint32_t x = 0; x < T.size(); ++x) {
    const auto& a = T.sparse[x][i];
    const auto& b = T.sparse[x][j];
    const auto& c = T.sparse[x][k];
    __int128 acc = 0;
    for (auto [ta, ma] : a)
      for (auto [tb, mb] : b) {
        const int64_t mab = ma * mb;
        const uint32_t s = (ta + tb) % e;
        for (auto [tc, mc] : c) acc += static_cast<__int128>(mab * mc) * T.traces[(s + e - tc) % e];
      }
    num += acc * static_cast<__int128>(L / T.degrees[x]);
  }
  FrobeniusResult r;
  r.sum = Rational(to_big(num), BigInt(L) * euler_phi(e));
  Rational cnt = r.sum * BigInt(D.cls(i).size) * BigInt(D.cls(j).size) / BigInt(D.group().order());
  if (denominator(cnt) != 1) throw std::logic_error("frobenius_sum: non-integral pair count");
  r.count = numerator(cnt);
  return r;
}

nlohmann::json table_to_json(const CharacterTable& T) {
  const ClassDecomposition& D = *T.classes;
  const Group& G = D.group();
  nlohmann::json j;
  j["schema"] = kTableSchema;
  j["version"] = kCodeVersion;
  j["group"] = G.name();
  j["order"] = G.order();
  j["e"] = T.e;
  j["ell"] = T.ell;
  j["zeta"] = T.zeta;
  auto& cls = j["classes"] = nlohmann::json::array();
  for (const auto& c : D.classes()) {
    auto rep = G.element(c.rep);
    cls.push_back({{"rep", std::vector<uint32_t>(rep.begin(), rep.end())},
                   {"size", c.size},
                   {"order", c.order},
                   {"centralizer", c.centralizer_order}});
  }
  j["degrees"] = T.degrees;
  auto& vals = j["values"] = nlohmann::json::array();
  for (const auto& row : T.values) {
    auto r = nlohmann::json::array();
    for (const auto& v : row) {
      auto pairs = nlohmann::json::array();
      for (auto [t, m] : v.nonzeros()) pairs.push_back({t, m});
      r.push_back(pairs);
    }
    vals.push_back(r);
  }
  return j;
}

TablePtr table_from_json(const nlohmann::json& j, ClassesPtr D) {
  try {
    if (j.at("schema") != kTableSchema || j.at("version") != kCodeVersion) return nullptr;
    const Group& G = D->group();
    if (j.at("group") != G.name() || j.at("order").get<uint64_t>() != G.order()) return nullptr;
    if (j.at("e").get<uint64_t>() != G.exponent()) return nullptr;
    const auto& cls = j.at("classes");
    if (cls.size() != D->count()) return nullptr;
    for (uint32_t c = 0; c < D->count(); ++c) {
      auto rep = G.element(D->cls(c).rep);
      if (cls[c].at("rep").get<std::vector<uint32_t>>() != std::vector<uint32_t>(rep.begin(), rep.end()))
        return nullptr;
    }
    auto T = std::make_shared<CharacterTable>();
    T->classes = D;
    T->e = j.at("e").get<uint32_t>();
    T->ell = j.at("ell").get<uint64_t>();
    T->zeta = j.at("zeta").get<uint64_t>();
    T->degrees = j.at("degrees").get<std::vector<uint64_t>>();
    for (const auto& row : j.at("values")) {
      std::vector<CyclotomicInt> r;
      for (const auto& pairs : row) {
        CyclotomicInt v(T->e);
        for (const auto& p : pairs) {
          uint32_t t = p.at(0).get<uint32_t>();
          if (t >= T->e) return nullptr;
          v[t] = p.at(1).get<int64_t>();
        }
        r.push_back(std::move(v));
      }
      if (r.size() != D->count()) return nullptr;
      T->values.push_back(std::move(r));
    }
    if (T->values.size() != T->degrees.size()) return nullptr;
    T->index();
    if (!verify_table(*T).ok()) return nullptr;
    T->verified = true;
    return T;
  } catch (const nlohmann::json::exception&) {
    return nullptr;
  }
}

}  // namespace waring
