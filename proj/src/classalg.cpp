#include "waring/classalg.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "waring/kernels.hpp"

namespace waring {

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& body) {
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < std::min<size_t>(threads, n); ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

ClassSet ClassSet::all(const ClassDecomposition& D) {
  ClassSet s(&D);
  for (uint32_t c = 0; c < D.count(); ++c) s.insert(c);
  return s;
}

ClassSet ClassSet::single(const ClassDecomposition& D, uint32_t c) {
  if (c >= D.count()) throw std::out_of_range("class id out of range");
  ClassSet s(&D);
  s.insert(c);
  return s;
}

ClassSet ClassSet::noncentral(const ClassDecomposition& D) {
  ClassSet s(&D);
  for (uint32_t c = 0; c < D.count(); ++c)
    if (!D.is_central(c)) s.insert(c);
  return s;
}

ClassSet ClassSet::nonidentity(const ClassDecomposition& D) {
  ClassSet s = all(D);
  s.erase(0);
  return s;
}

void ClassSet::check(const ClassSet& o) const {
  if (D_ != o.D_) throw std::invalid_argument("class sets over different decompositions");
}

uint32_t ClassSet::size() const {
  uint32_t n = 0;
  for (uint64_t w : bits_) n += std::popcount(w);
  return n;
}

bool ClassSet::unite(const ClassSet& o) {
  check(o);
  return kernels::or_into(bits_.data(), o.bits_.data(), bits_.size());
}

bool ClassSet::intersects(const ClassSet& o) const {
  check(o);
  return kernels::intersects(bits_.data(), o.bits_.data(), bits_.size());
}

bool ClassSet::includes(const ClassSet& o) const {
  check(o);
  for (size_t i = 0; i < bits_.size(); ++i)
    if (o.bits_[i] & ~bits_[i]) return false;
  return true;
}

std::vector<uint32_t> ClassSet::members() const {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < universe(); ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

std::vector<uint32_t> ClassSet::missing_from(const ClassSet& target) const {
  check(target);
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < universe(); ++c)
    if (target.contains(c) && !contains(c)) out.push_back(c);
  return out;
}

uint64_t ClassSet::element_count() const {
  uint64_t n = 0;
  for (uint32_t c : members()) n += D_->cls(c).size;
  return n;
}

AlgebraPtr StructureConstants::compute(ClassesPtr D, unsigned threads) {
  std::shared_ptr<StructureConstants> A(new StructureConstants());
  A->D_ = D;
  const uint32_t k = A->k_ = D->count();
  const Group& G = D->group();
  const auto& cls = D->class_of_table();
  A->a_.assign(size_t(k) * k * k, 0);
  parallel_for(k, threads, [&](size_t kk) {
    uint64_t* slab = A->a_.data() + kk * k * k;
    const uint32_t g = D->cls(static_cast<uint32_t>(kk)).rep;
    for (uint32_t x = 0; x < G.order(); ++x) {
      uint32_t y = G.mul(G.inv(x), g);
      ++slab[size_t(cls[x]) * k + cls[y]];
    }
  });
  A->supp_.assign(size_t(k) * k, ClassSet(D.get()));
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j)
      for (uint32_t c = 0; c < k; ++c)
        if (A->at(i, j, c)) A->supp_[size_t(i) * k + j].insert(c);
  return A;
}

std::vector<uint64_t> StructureConstants::row(uint32_t i, uint32_t j) const {
  if (i >= k_ || j >= k_) throw std::out_of_range("class id out of range");
  std::vector<uint64_t> r(k_);
  for (uint32_t c = 0; c < k_; ++c) r[c] = at(i, j, c);
  return r;
}

std::vector<uint64_t> structure_constants(const StructureConstants& A, uint32_t i, uint32_t j) {
  return A.row(i, j);
}

uint64_t structure_constant_direct(const ClassDecomposition& D, uint32_t i, uint32_t j, uint32_t k) {
  if (i >= D.count() || j >= D.count() || k >= D.count()) throw std::out_of_range("class id out of range");
  const Group& G = D.group();
  const uint32_t g = D.cls(k).rep;
  uint64_t n = 0;
  for (uint32_t x : D.cls(i).members)
    if (D.class_of(G.mul(G.inv(x), g)) == j) ++n;
  return n;
}

bool in_class_product(const ClassDecomposition& D, uint32_t i, uint32_t j, uint32_t k) {
  const Group& G = D.group();
  const uint32_t g = D.cls(k).rep;
  for (uint32_t x : D.cls(i).members)
    if (D.class_of(G.mul(G.inv(x), g)) == j) return true;
  return false;
}

ClassSet product_support(const StructureConstants& A, const ClassSet& a, const ClassSet& b) {
  if (a.decomposition() != &A.classes() || b.decomposition() != &A.classes())
    throw std::invalid_argument("class sets do not belong to this algebra");
  ClassSet out(&A.classes());
  auto bm = b.members();
  for (uint32_t i : a.members())
    for (uint32_t j : bm) out.unite(A.support(i, j));
  return out;
}

ClassSet product_support_direct(const ClassDecomposition& D, const ClassSet& a, const ClassSet& b) {
  if (a.decomposition() != &D || b.decomposition() != &D)
    throw std::invalid_argument("class sets do not belong to this decomposition");
  ClassSet out(&D);
  auto am = a.members(), bm = b.members();
  for (uint32_t k = 0; k < D.count(); ++k) {
    bool hit = false;
    for (uint32_t i : am) {
      for (uint32_t j : bm)
        if (in_class_product(D, i, j, k)) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    if (hit) out.insert(k);
  }
  return out;
}

bool covers_noncentral(const StructureConstants& A, uint32_t i, uint32_t j) {
  return A.support(i, j).includes(ClassSet::noncentral(A.classes()));
}

bool triple_product_full(const StructureConstants& A, uint32_t i, uint32_t j, uint32_t k) {
  const auto& D = A.classes();
  ClassSet s = product_support(A, A.support(i, j), ClassSet::single(D, k));
  return s == ClassSet::all(D);
}

std::string to_string(CoverTarget t) {
  switch (t) {
    case CoverTarget::All: return "all";
    case CoverTarget::NonCentral: return "noncentral";
    case CoverTarget::NonIdentity: return "nonidentity";
  }
  return "?";
}

ClassSet target_set(const ClassDecomposition& D, CoverTarget t) {
  switch (t) {
    case CoverTarget::All: return ClassSet::all(D);
    case CoverTarget::NonCentral: return ClassSet::noncentral(D);
    case CoverTarget::NonIdentity: return ClassSet::nonidentity(D);
  }
  return ClassSet::all(D);
}

ClassConstraint ClassConstraint::parse(const std::string& text) {
  ClassConstraint c;
  if (text == "any") c.kind = Kind::Any;
  else if (text == "prime") c.kind = Kind::PrimeOrder;
  else if (text == "squarefree") c.kind = Kind::SquarefreeOrder;
  else if (text == "rss" || text == "regular-semisimple") c.kind = Kind::RegularSemisimple;
  else if (text == "two-primes") c.kind = Kind::AtMostTwoPrimes;
  else if (text == "noncentral") c.kind = Kind::NonCentral;
  else if (text.rfind("order=", 0) == 0) {
    c.kind = Kind::OrderEquals;
    c.m = std::stoull(text.substr(6));
  } else {
    throw std::invalid_argument("unknown class constraint: " + text);
  }
  return c;
}

std::string ClassConstraint::str() const {
  switch (kind) {
    case Kind::Any: return "any";
    case Kind::PrimeOrder: return "prime";
    case Kind::SquarefreeOrder: return "squarefree";
    case Kind::OrderEquals: return "order=" + std::to_string(m);
    case Kind::RegularSemisimple: return "rss";
    case Kind::AtMostTwoPrimes: return "two-primes";
    case Kind::NonCentral: return "noncentral";
  }
  return "?";
}

bool class_satisfies(const ClassDecomposition& D, uint32_t c, const ClassConstraint& k) {
  const uint64_t o = D.cls(c).order;
  switch (k.kind) {
    case ClassConstraint::Kind::Any: return true;
    case ClassConstraint::Kind::PrimeOrder: return is_prime_u64(o);
    case ClassConstraint::Kind::SquarefreeOrder: return is_squarefree_u64(o);
    case ClassConstraint::Kind::OrderEquals: return o == k.m;
    case ClassConstraint::Kind::AtMostTwoPrimes: return o == 1 || distinct_primes(o).size() <= 2;
    case ClassConstraint::Kind::NonCentral: return !D.is_central(c);
    case ClassConstraint::Kind::RegularSemisimple:
      return is_regular_semisimple(D.group(), D.cls(c).rep).regular_semisimple;
  }
  return false;
}

PairReport search_covering_pair(const StructureConstants& A, const PairSearch& s, unsigned threads) {
  const auto& D = A.classes();
  const uint32_t k = D.count();
  auto eligible = [&](const std::vector<ClassConstraint>& cs) {
    std::vector<char> ok(k, 0);
    parallel_for(k, threads, [&](size_t c) {
      bool good = true;
      for (const auto& con : cs)
        if (!class_satisfies(D, static_cast<uint32_t>(c), con)) {
          good = false;
          break;
        }
      ok[c] = good;
    });
    return ok;
  };
  auto okx = eligible(s.x);
  auto oky = eligible(s.y);
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = i; j < k; ++j) {
      if (s.same_class && i != j) continue;
      if (s.inverse_pair && D.inverse_class(i) != j) continue;
      if ((okx[i] && oky[j]) || (okx[j] && oky[i])) pairs.emplace_back(i, j);
    }
  const ClassSet target = target_set(D, s.target);
  PairReport rep;
  rep.target = s.target;
  rep.scanned.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](size_t t) {
    auto [i, j] = pairs[t];
    PairRecord r;
    r.i = i;
    r.j = j;
    r.order_i = D.cls(i).order;
    r.order_j = D.cls(j).order;
    const ClassSet& sup = A.support(i, j);
    r.missing = sup.missing_from(target);
    r.covers = r.missing.empty();
    r.exact = sup == target;
    rep.scanned[t] = std::move(r);
  });
  for (const auto& r : rep.scanned)
    if (r.covers) rep.covering.push_back(r);
  return rep;
}

}  // namespace waring
