#include "waring/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace waring {

ClassSet power_image_classes(const ClassDecomposition& D, uint64_t m) {
  if (m == 0) throw std::invalid_argument("power_image_classes: m must be positive");
  ClassSet s(&D);
  for (uint32_t c = 0; c < D.count(); ++c) s.insert(D.power_class(c, m));
  return s;
}

WidthReport set_width(const StructureConstants& A, const ClassSet& X, CoverTarget target) {
  const auto& D = A.classes();
  const ClassSet want = target_set(D, target);
  WidthReport r;
  if (X.empty()) return r;
  std::set<std::vector<uint64_t>> seen;
  ClassSet cur = X;
  for (uint32_t t = 1;; ++t) {
    auto miss = cur.missing_from(want);
    r.sizes.push_back(cur.size());
    r.stabilized_size = cur.size();
    const bool done = miss.empty();
    r.missing.push_back(std::move(miss));
    if (done) {
      r.width = t;
      return r;
    }
    if (!seen.insert(cur.words()).second) return r;
    cur = product_support(A, cur, X);
  }
}

WidthReport power_word_width(const StructureConstants& A, uint64_t m, CoverTarget target) {
  return set_width(A, power_image_classes(A.classes(), m), target);
}

WaringPairReport waring_pair_check(const StructureConstants& A, uint64_t k, uint64_t l) {
  if (k == 0 || l == 0) throw std::invalid_argument("waring_pair_check: exponents must be positive");
  const auto& D = A.classes();
  ClassSet s = product_support(A, power_image_classes(D, k), power_image_classes(D, l));
  WaringPairReport r;
  r.missing = s.missing_from(ClassSet::all(D));
  r.covers = r.missing.empty();
  return r;
}

ClassSet p_element_classes(const ClassDecomposition& D, uint64_t p) {
  ClassSet s(&D);
  for (uint32_t c = 0; c < D.count(); ++c) {
    uint64_t o = D.cls(c).order;
    while (o % p == 0) o /= p;
    if (o == 1) s.insert(c);
  }
  return s;
}

WidthReport p_element_width(const StructureConstants& A, uint64_t p, CoverTarget target) {
  const auto& D = A.classes();
  if (!is_prime_u64(p) || D.group().order() % p != 0)
    throw std::invalid_argument("p_element_width: p must be a prime dividing |G|");
  return set_width(A, p_element_classes(D, p), target);
}

std::optional<uint32_t> power_word_width_elements(const Group& G, uint64_t m) {
  if (m == 0) throw std::invalid_argument("power_word_width_elements: m must be positive");
  const uint32_t n = G.order();
  std::vector<char> in_w(n, 0);
  for (uint32_t g = 0; g < n; ++g) in_w[G.pow(g, m)] = 1;
  std::vector<uint32_t> W;
  for (uint32_t g = 0; g < n; ++g)
    if (in_w[g]) W.push_back(g);
  std::set<std::vector<char>> seen;
  std::vector<char> cur = in_w;
  for (uint32_t t = 1;; ++t) {
    if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) return t;
    if (!seen.insert(cur).second) return std::nullopt;
    std::vector<char> next(n, 0);
    for (uint32_t a = 0; a < n; ++a)
      if (cur[a])
        for (uint32_t w : W) next[G.mul(a, w)] = 1;
    cur = std::move(next);
  }
}

std::vector<uint32_t> cycle_type(std::span<const uint32_t> perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<uint32_t> out;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    for (size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void altinv_validate(unsigned n, unsigned ell) {
  if (n < 5 || n > 12) throw std::invalid_argument("altinv: n must lie in 5..12");
  if (!(ell == 2 || (ell % 2 == 1 && ell >= 3 && ell <= n)))
    throw std::invalid_argument("altinv: ell must be 2 or odd with ell <= n");
}

AltinvReport altinv_check(const StructureConstants& A, unsigned ell) {
  const auto& D = A.classes();
  const Group& G = D.group();
  if (G.spec().kind != GroupKind::Alt) throw std::invalid_argument("altinv: group must be alternating");
  const unsigned n = G.spec().n;
  altinv_validate(n, ell);
  AltinvReport r;
  r.n = n;
  r.ell = ell;
  r.power = ell == 2 ? 3 : 4;
  ClassSet with(&D), without(&D);
  with.insert(0);
  for (uint32_t c = 1; c < D.count(); ++c) {
    auto ct = cycle_type(G.element(D.cls(c).rep));
    if (std::all_of(ct.begin(), ct.end(), [&](uint32_t len) { return len == ell; })) {
      r.x_classes.push_back(c);
      with.insert(c);
      without.insert(c);
    }
  }
  const ClassSet all = ClassSet::all(D);
  auto power_of = [&](const ClassSet& X) {
    ClassSet s = X;
    for (uint32_t t = 1; t < r.power; ++t) s = product_support(A, s, X);
    return s;
  };
  r.holds_with_identity = power_of(with) == all;
  r.holds_without_identity = !without.empty() && power_of(without) == all;
  r.width_with_identity = set_width(A, with).width;
  if (!without.empty()) r.width_without_identity = set_width(A, without).width;
  if (ell != 2) {
    const uint32_t want = n % 2 ? n : n - 1;
    ClassSet sq = product_support(A, without, without);
    for (uint32_t c : sq.members()) {
      auto ct = cycle_type(G.element(D.cls(c).rep));
      if (ct.size() == 1 && ct[0] == want) r.long_cycle_in_square = true;
    }
  }
  return r;
}

PowerScanReport power_width_scan(const StructureConstants& A, unsigned threads) {
  const auto& D = A.classes();
  const uint64_t e = D.group().exponent();
  std::map<std::vector<uint64_t>, size_t> slot;
  PowerScanReport rep;
  for (uint64_t k = 1; k < e; ++k) {
    ClassSet img = power_image_classes(D, k);
    auto [it, fresh] = slot.emplace(img.words(), rep.entries.size());
    if (fresh) {
      PowerScanEntry en;
      en.image = img.members();
      rep.entries.push_back(std::move(en));
    }
    rep.entries[it->second].exponents.push_back(k);
  }
  parallel_for(rep.entries.size(), threads, [&](size_t t) {
    auto& en = rep.entries[t];
    ClassSet X(&D);
    for (uint32_t c : en.image) X.insert(c);
    en.width = set_width(A, X);
  });
  for (const auto& en : rep.entries) {
    if (en.width.infinite()) rep.any_infinite = true;
    else rep.max_width = std::max(rep.max_width, *en.width.width);
  }
  return rep;
}

std::vector<ClassIdentityReport> class_identities(const StructureConstants& A, uint32_t order) {
  const auto& D = A.classes();
  std::vector<ClassIdentityReport> out;
  for (uint32_t c = 0; c < D.count(); ++c) {
    if (D.cls(c).order != order) continue;
    ClassIdentityReport r;
    r.cls = c;
    const uint32_t ci = D.inverse_class(c);
    r.product_with_inverse_full = A.support(c, ci) == ClassSet::all(D);
    r.inverse_in_square = A.support(c, c).contains(ci);
    out.push_back(r);
  }
  return out;
}

}  // namespace waring
