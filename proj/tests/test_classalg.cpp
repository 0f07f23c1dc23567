#include <doctest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "waring/classalg.hpp"

using namespace waring;
using testing::classes_of_order;
using testing::ws;

TEST_CASE("tensor equals the element-level pair count") {
  for (const auto& s : testing::small_groups()) {
    CAPTURE(s);
    auto A = ws().algebra(s);
    const auto& D = A->classes();
    const uint32_t K = D.count();
    const auto ref = oracle::triple_counts(D);
    for (uint32_t k = 0; k < K; ++k)
      for (uint32_t i = 0; i < K; ++i)
        for (uint32_t j = 0; j < K; ++j) REQUIRE(A->at(i, j, k) == ref[(size_t(k) * K + i) * K + j]);
  }
}

TEST_CASE("direct counts and representative independence") {
  auto A = ws().algebra("SL(2,7)");
  const auto& D = A->classes();
  const auto& G = D.group();
  for (uint32_t i = 0; i < D.count(); ++i)
    for (uint32_t j = 0; j < D.count(); ++j) {
      const auto row = structure_constants(*A, i, j);
      for (uint32_t k = 0; k < D.count(); ++k) {
        REQUIRE(row[k] == A->at(i, j, k));
        REQUIRE(structure_constant_direct(D, i, j, k) == A->at(i, j, k));
        REQUIRE(in_class_product(D, i, j, k) == (A->at(i, j, k) > 0));
        // another member of C_k gives the same count
        const auto& mem = D.cls(k).members;
        const uint32_t g = mem[mem.size() / 2];
        uint64_t n = 0;
        for (uint32_t x : D.cls(i).members) n += D.class_of(G.mul(G.inv(x), g)) == j;
        REQUIRE(n == A->at(i, j, k));
      }
    }
}

TEST_CASE("counting identities over the verification matrix") {
  std::vector<std::string> gs = testing::small_groups();
  for (const char* g : {"A8", "SU(4,2)", "PSp(4,3)"}) gs.push_back(g);
  for (const auto& s : gs) {
    CAPTURE(s);
    auto A = ws().algebra(s);
    const auto& D = A->classes();
    const uint32_t K = D.count();
    for (uint32_t i = 0; i < K; ++i)
      for (uint32_t j = 0; j < K; ++j) {
        BigInt lhs = 0;
        for (uint32_t k = 0; k < K; ++k) {
          lhs += BigInt(A->at(i, j, k)) * D.cls(k).size;
          REQUIRE(A->at(i, j, k) == A->at(j, i, k));
          REQUIRE((A->at(i, j, k) > 0) == A->support(i, j).contains(k));
        }
        REQUIRE(lhs == BigInt(D.cls(i).size) * D.cls(j).size);
        REQUIRE(A->at(0, j, i) == (i == j ? 1u : 0u));
      }
    for (uint32_t i = 0; i < K; ++i) CHECK(A->at(i, D.inverse_class(i), 0) == D.cls(i).size);
  }
}

TEST_CASE("class set algebra") {
  auto A = ws().algebra("A6");
  const auto& D = A->classes();
  const ClassSet all = ClassSet::all(D);
  CHECK(all.size() == D.count());
  CHECK(all.element_count() == 360);
  CHECK(ClassSet::nonidentity(D).size() == D.count() - 1);
  CHECK(ClassSet::noncentral(D) == ClassSet::nonidentity(D));
  ClassSet a(&D);
  CHECK(a.empty());
  CHECK(a.unite(ClassSet::single(D, 2)));
  CHECK_FALSE(a.unite(ClassSet::single(D, 2)));
  CHECK(all.includes(a));
  CHECK(a.missing_from(all).size() == D.count() - 1);
  auto B = ws().algebra("A5");
  CHECK_THROWS_AS(a.unite(ClassSet::all(B->classes())), std::invalid_argument);
}

TEST_CASE("product support examples and monotonicity") {
  auto A = ws().algebra("A5");
  const auto& D = A->classes();
  auto c3 = classes_of_order(D, 3);
  REQUIRE(c3.size() == 1);
  const ClassSet x = ClassSet::single(D, c3[0]);
  for (uint32_t k = 0; k < D.count(); ++k) CHECK(A->at(c3[0], c3[0], k) > 0);
  CHECK(product_support(*A, x, x) == ClassSet::all(D));
  CHECK(product_support(*A, ClassSet::single(D, 0), x) == x);
  CHECK(triple_product_full(*A, c3[0], c3[0], c3[0]));
  CHECK_FALSE(triple_product_full(*A, 0, 0, 0));
  CHECK_FALSE(covers_noncentral(*A, 0, 0));

  auto P = ws().algebra("PSL(3,2)");
  auto inv = classes_of_order(P->classes(), 2);
  REQUIRE(inv.size() == 1);
  const ClassSet t = ClassSet::single(P->classes(), inv[0]);
  const ClassSet sq = product_support(*P, t, t);
  CHECK_FALSE(sq == ClassSet::all(P->classes()));
  CHECK(sq.missing_from(ClassSet::all(P->classes())).size() >= 1);

  for (const char* s : {"A6", "SL(2,9)", "SU(3,3)"}) {
    auto B = ws().algebra(s);
    const auto& E = B->classes();
    const uint32_t K = E.count();
    for (uint32_t mask = 1; mask < 64; mask += 7) {
      ClassSet u(&E), v(&E), w(&E);
      for (uint32_t c = 0; c < K; ++c) {
        if ((mask >> (c % 6)) & 1) u.insert(c);
        if ((c * 7 + mask) % 3 == 0) v.insert(c);
        if ((c + mask) % 4 == 1) w.insert(c);
      }
      ClassSet uv = u;
      uv.unite(v);
      ClassSet lhs = product_support(*B, uv, w);
      ClassSet rhs = product_support(*B, u, w);
      rhs.unite(product_support(*B, v, w));
      CHECK(lhs == rhs);
      CHECK(product_support_direct(E, u, w) == product_support(*B, u, w));
      // element-level oracle
      const auto cs = oracle::classes_met(E, oracle::product(E.group(), oracle::union_of_classes(E, u.members()),
                                                              oracle::union_of_classes(E, w.members())));
      CHECK(product_support(*B, u, w).members() == cs);
    }
  }
}

TEST_CASE("covering examples") {
  {
    auto A = ws().algebra("SL(2,5)");
    const auto& D = A->classes();
    bool found = false;
    for (uint32_t x : classes_of_order(D, 3))
      for (uint32_t y : classes_of_order(D, 4)) found = found || covers_noncentral(*A, x, y);
    CHECK(found);
    PairSearch s;
    s.x = {ClassConstraint::parse("squarefree")};
    s.y = {ClassConstraint::parse("squarefree")};
    CHECK(search_covering_pair(*A, s).covering.empty());
  }
  {
    auto A = ws().algebra("Sp(4,3)");
    const auto& D = A->classes();
    bool found = false;
    for (uint32_t x : classes_of_order(D, 5))
      for (uint32_t y : classes_of_order(D, 8))
        found = found || (covers_noncentral(*A, x, y) && A->support(y, y) == ClassSet::all(D));
    CHECK(found);
  }
  {
    auto A = ws().algebra("SU(4,2)");
    PairSearch s;
    s.x = {ClassConstraint::parse("prime")};
    s.y = s.x;
    s.same_class = true;
    s.target = CoverTarget::NonIdentity;
    auto r = search_covering_pair(*A, s);
    bool five = false;
    for (const auto& p : r.covering) five = five || p.order_i == 5;
    CHECK(five);
    for (const auto& p : r.scanned) CHECK(p.i == p.j);
  }
  {
    auto A = ws().algebra("SL(2,7)");
    PairSearch s;
    s.x = {ClassConstraint::parse("order=3")};
    s.y = s.x;
    s.same_class = true;
    auto r = search_covering_pair(*A, s);
    CHECK(!r.covering.empty());
  }
  {
    auto A = ws().algebra("SL(2,17)");
    auto c3 = classes_of_order(A->classes(), 3);
    REQUIRE(!c3.empty());
    CHECK(triple_product_full(*A, c3[0], c3[0], c3[0]));
  }
}

TEST_CASE("pair search options") {
  auto A = ws().algebra("A7");
  const auto& D = A->classes();
  PairSearch s;
  s.inverse_pair = true;
  s.target = CoverTarget::All;
  auto r = search_covering_pair(*A, s, 4);
  for (const auto& p : r.scanned) CHECK(p.j == D.inverse_class(p.i));
  PairSearch t;
  t.x = {ClassConstraint::parse("order=7")};
  t.y = {ClassConstraint::parse("two-primes")};
  auto u = search_covering_pair(*A, t, 3);
  for (const auto& p : u.scanned) {
    CHECK((p.order_i == 7 || p.order_j == 7));
    CHECK(p.i <= p.j);
    CHECK(p.covers == A->support(p.i, p.j).includes(target_set(D, t.target)));
  }
  CHECK(ClassConstraint::parse("order=12").m == 12);
  CHECK_THROWS_AS(ClassConstraint::parse("bogus"), std::invalid_argument);
}

TEST_CASE("Gow property on matrix groups") {
  for (const char* s : {"SL(2,4)", "SL(2,5)", "SL(2,7)", "SL(2,8)", "SL(2,9)", "SL(2,11)", "SL(3,2)", "SL(3,3)", "SU(3,3)"}) {
    CAPTURE(s);
    auto A = ws().algebra(s);
    const auto& D = A->classes();
    const auto& G = D.group();
    const uint64_t p = G.characteristic();
    std::vector<uint32_t> rss;
    for (uint32_t c = 0; c < D.count(); ++c)
      if (is_regular_semisimple(G, D.cls(c).rep).regular_semisimple) rss.push_back(c);
    REQUIRE(!rss.empty());
    for (uint32_t a : rss)
      for (uint32_t b : rss)
        for (uint32_t c = 0; c < D.count(); ++c)
          if (!D.is_central(c) && D.cls(c).order % p != 0) CHECK(A->support(a, b).contains(c));
  }
}
