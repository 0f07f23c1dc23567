#include "waring/classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "waring/linalg.hpp"

namespace waring {

ClassesPtr ClassDecomposition::compute(GroupPtr G) {
  std::shared_ptr<ClassDecomposition> D(new ClassDecomposition());
  D->G_ = G;
  const uint32_t N = G->order();
  const auto& gens = G->generators();
  std::vector<bool> seen(N, false);
  std::vector<ConjClass> raw;
  for (uint32_t g = 0; g < N; ++g) {
    if (seen[g]) continue;
    ConjClass c;
    c.members.push_back(g);
    seen[g] = true;
    for (size_t i = 0; i < c.members.size(); ++i) {
      for (uint32_t s : gens) {
        uint32_t y = G->conj(c.members[i], s);
        if (!seen[y]) {
          seen[y] = true;
          c.members.push_back(y);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    auto enc_less = [&](uint32_t a, uint32_t b) {
      auto x = G->element(a), y = G->element(b);
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    c.rep = *std::min_element(c.members.begin(), c.members.end(), enc_less);
    c.order = G->element_order(c.rep);
    c.size = c.members.size();
    c.centralizer_order = N / c.size;
    raw.push_back(std::move(c));
  }
  std::sort(raw.begin(), raw.end(), [&](const ConjClass& a, const ConjClass& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    auto x = G->element(a.rep), y = G->element(b.rep);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  D->classes_ = std::move(raw);
  D->class_of_.assign(N, 0);
  for (uint32_t c = 0; c < D->classes_.size(); ++c)
    for (uint32_t g : D->classes_[c].members) D->class_of_[g] = c;
  const uint32_t k = D->count();
  D->inverse_.resize(k);
  D->power_map_.resize(k);
  for (uint32_t c = 0; c < k; ++c) {
    const auto& cc = D->classes_[c];
    D->inverse_[c] = D->class_of_[G->inv(cc.rep)];
    auto& row = D->power_map_[c];
    row.resize(cc.order);
    uint32_t x = G->identity();
    for (uint32_t r = 0; r < cc.order; ++r) {
      row[r] = D->class_of_[x];
      x = G->mul(x, cc.rep);
    }
  }
  return D;
}

uint32_t class_of(const ClassDecomposition& D, std::span<const uint32_t> element) {
  auto idx = D.group().index_of(element);
  if (!idx) throw std::invalid_argument("class_of: element is not in the group");
  return D.class_of(*idx);
}

std::vector<uint32_t> centralizer(const Group& G, uint32_t g) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < G.order(); ++x)
    if (G.mul(x, g) == G.mul(g, x)) out.push_back(x);
  return out;
}

bool is_abelian_subgroup(const Group& G, const std::vector<uint32_t>& elements) {
  std::vector<uint32_t> gens;
  std::vector<bool> in_sub(G.order(), false);
  in_sub[G.identity()] = true;
  std::vector<uint32_t> sub{G.identity()};
  for (uint32_t x : elements) {
    if (in_sub[x]) continue;
    for (uint32_t s : gens)
      if (G.mul(s, x) != G.mul(x, s)) return false;
    gens.push_back(x);
    for (size_t i = 0; i < sub.size(); ++i) {
      for (uint32_t s : gens) {
        uint32_t y = G.mul(sub[i], s);
        if (!in_sub[y]) {
          in_sub[y] = true;
          sub.push_back(y);
        }
      }
    }
  }
  return true;
}

RegularSemisimpleReport is_regular_semisimple(const Group& G, uint32_t g) {
  const Realization& R = G.realization();
  if (!R.is_matrix()) throw std::invalid_argument("is_regular_semisimple: not a matrix group");
  const FieldSpec& F = *R.field();
  RegularSemisimpleReport rep;
  rep.p_prime_order = G.element_order(g) % F.characteristic() != 0;
  auto C = centralizer(G, g);
  rep.centralizer_order = C.size();
  rep.abelian_centralizer = is_abelian_subgroup(G, C);
  rep.regular_semisimple = rep.p_prime_order && rep.abelian_centralizer;
  const unsigned n = R.dim();
  linalg::Matrix<Elem> m(n, n);
  auto data = G.element(g);
  std::copy(data.begin(), data.end(), m.a.begin());
  poly::Poly cp = linalg::charpoly(F, m);
  poly::trim(cp);
  rep.squarefree_charpoly = poly::is_squarefree(F, cp);
  return rep;
}

}  // namespace waring
