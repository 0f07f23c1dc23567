#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "common.hpp"
#include "oracles.hpp"
#include "waring/classes.hpp"
#include "waring/group.hpp"

using namespace waring;
using testing::ws;

namespace {

std::multiset<uint64_t> class_sizes(const ClassDecomposition& D) {
  std::multiset<uint64_t> s;
  for (const auto& c : D.classes()) s.insert(c.size);
  return s;
}

BigInt ipow(uint64_t b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("group spec parsing") {
  CHECK(GroupSpec::parse("Alt(5)") == GroupSpec::parse("A5"));
  CHECK(GroupSpec::parse("SU3(3)") == GroupSpec::parse("SU(3,3)"));
  CHECK(GroupSpec::parse("Sp4(3)") == GroupSpec::parse("Sp(4,3)"));
  CHECK(GroupSpec::parse("PSp4(3)").is_projective());
  CHECK(GroupSpec::parse("SL(2,5)").is_matrix());
  CHECK_FALSE(GroupSpec::parse("S6").is_matrix());
  CHECK_THROWS_AS(GroupSpec::parse("Q8"), std::invalid_argument);
}

TEST_CASE("group examples") {
  auto A5 = ws().group("Alt(5)");
  CHECK(A5->order() == 60);
  CHECK(A5->center().size() == 1);
  CHECK(A5->exponent() == 30);
  auto S = ws().group("SL(2,5)");
  CHECK(S->order() == 120);
  CHECK(S->center().size() == 2);
  CHECK(S->exponent() == 60);
  CHECK(ws().group("PSL(3,2)")->exponent() == 84);
  auto Sp = ws().group("Sp(4,3)");
  CHECK(Sp->order() == 51840);
  CHECK(Sp->center().size() == 2);
  CHECK(ws().group("PSp(4,3)")->order() == 25920);
  CHECK(ws().group("A5")->central_quotient()->order() == 60);
}

TEST_CASE("closed form orders") {
  CHECK(closed_form_order(GroupSpec::parse("SL(2,5)")).order == 120);
  CHECK(closed_form_order(GroupSpec::parse("SU(3,3)")).order == 6048);
  const auto d4 = dn_order(4, 2);
  CHECK(d4.order == ipow(2, 12) * 15 * 3 * 15 * 63);
  CHECK(d4.q_part == ipow(2, 12));
  CHECK(d4.q_part * d4.q_prime_part == d4.order);
}

TEST_CASE("enumerated orders equal closed forms over the verification matrix") {
  std::vector<std::string> specs = {"C1", "C7", "A4", "A5", "A6", "A7", "A8", "S5", "S6", "S7",
                                    "SL(3,2)", "SL(3,3)", "SU(3,3)", "SU(4,2)", "Sp(4,3)", "PSp(4,3)"};
  for (uint64_t q : testing::sl2_fields()) {
    specs.push_back("SL(2," + std::to_string(q) + ")");
    specs.push_back("PSL(2," + std::to_string(q) + ")");
  }
  for (const auto& s : specs) {
    CAPTURE(s);
    auto G = ws().group(s);
    CHECK(BigInt(G->order()) == closed_form_order(G->spec()).order);
  }
}

TEST_CASE("central quotient order times center order is the group order") {
  for (const char* s : {"SL(2,5)", "SL(2,7)", "SL(2,9)", "SL(2,8)", "SU(3,3)", "Sp(4,3)", "SL(3,2)"}) {
    auto G = ws().group(s);
    auto Q = G->central_quotient();
    CHECK(uint64_t(Q->order()) * G->center().size() == G->order());
    auto qm = G->quotient_map(*Q);
    for (uint32_t x = 0; x < G->order(); x += 1 + G->order() / 500)
      for (uint32_t y = 0; y < G->order(); y += 1 + G->order() / 50) CHECK(qm[G->mul(x, y)] == Q->mul(qm[x], qm[y]));
  }
  auto D = ws().classes("PSL(2,5)");
  CHECK(class_sizes(*D) == std::multiset<uint64_t>{1, 15, 20, 12, 12});
  CHECK(class_sizes(*D) == class_sizes(*ws().classes("A5")));
}

TEST_CASE("group axioms and index bijection") {
  for (const auto& s : testing::small_groups()) {
    CAPTURE(s);
    auto G = ws().group(s);
    std::set<uint64_t> keys;
    for (uint32_t g = 0; g < G->order(); ++g) {
      keys.insert(G->key(g));
      REQUIRE(G->index_of(G->element(g)) == g);
      REQUIRE(G->mul(g, G->inv(g)) == Group::identity());
      REQUIRE(G->pow(g, G->element_order(g)) == Group::identity());
      REQUIRE(G->exponent() % G->element_order(g) == 0);
    }
    CHECK(keys.size() == G->order());
    auto& r = testing::rng();
    std::uniform_int_distribution<uint32_t> d(0, G->order() - 1);
    for (int t = 0; t < 300; ++t) {
      const uint32_t a = d(r), b = d(r), c = d(r);
      REQUIRE(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
    }
    for (uint32_t z : G->center())
      for (uint32_t t = 0; t < 50; ++t) {
        const uint32_t g = d(r);
        REQUIRE(G->mul(z, g) == G->mul(g, z));
      }
  }
}

TEST_CASE("matrix elements satisfy their defining relations") {
  for (const char* s : {"SL(2,4)", "SL(2,9)", "SL(3,2)", "SL(3,3)", "SU(3,3)", "SU(4,2)", "Sp(4,3)"}) {
    CAPTURE(s);
    auto G = ws().group(s);
    const uint32_t step = G->order() > 10000 ? 7 : 1;
    for (uint32_t g = 0; g < G->order(); g += step) REQUIRE(satisfies_relations(G->spec(), G->realization(), G->element(g)));
  }
}

TEST_CASE("cap and parameter errors") {
  CHECK_THROWS_AS(Group::build(GroupSpec::parse("A10")), std::length_error);
  CHECK_THROWS_AS(Group::build(GroupSpec::parse("A6"), 100), std::length_error);
  CHECK_THROWS_AS(Group::build(GroupSpec::parse("SL(2,6)")), std::invalid_argument);
}

TEST_CASE("conjugacy class examples") {
  auto A4 = ws().classes("Alt(4)");
  CHECK(A4->count() == 4);
  CHECK(class_sizes(*A4) == std::multiset<uint64_t>{1, 3, 4, 4});
  CHECK(ws().classes("SL(2,5)")->count() == 9);
  CHECK(ws().classes("C1")->count() == 1);
  auto D = ws().classes("SL(2,5)");
  const auto& G = D->group();
  uint32_t minus = 0;
  for (uint32_t z : G.center())
    if (z != Group::identity()) minus = z;
  size_t central_nonidentity = 0;
  for (uint32_t c = 1; c < D->count(); ++c) central_nonidentity += D->is_central(c);
  CHECK(central_nonidentity == 1);
  CHECK(D->is_central(D->class_of(minus)));
  CHECK(D->class_of(Group::identity()) == 0);
  CHECK(class_of(*D, G.element(minus)) == D->class_of(minus));
}

TEST_CASE("class invariants by orbit enumeration") {
  for (const auto& s : testing::small_groups()) {
    CAPTURE(s);
    auto D = ws().classes(s);
    const auto& G = D->group();
    uint64_t total = 0;
    for (uint32_t c = 0; c < D->count(); ++c) {
      const auto& k = D->cls(c);
      total += k.size;
      CHECK(k.size * k.centralizer_order == G.order());
      CHECK(k.members.size() == k.size);
      CHECK(D->inverse_class(D->inverse_class(c)) == c);
      CHECK(G.element_order(k.rep) == k.order);
      const auto rep = G.element(k.rep);
      for (uint32_t m : k.members) {
        const auto e = G.element(m);
        CHECK_FALSE(std::lexicographical_compare(e.begin(), e.end(), rep.begin(), rep.end()));
      }
      if (c > 0) {
        const auto& prev = D->cls(c - 1);
        CHECK((prev.order < k.order || (prev.order == k.order && prev.size <= k.size)));
      }
      CHECK(centralizer(G, k.rep).size() == k.centralizer_order);
    }
    CHECK(total == G.order());
    if (G.order() > 10000) continue;
    // class_of is constant on conjugation orbits; real classes by brute force
    for (uint32_t g = 0; g < G.order(); ++g) {
      for (uint32_t h : G.generators()) REQUIRE(D->class_of(G.conj(g, h)) == D->class_of(g));
      if (g >= 400 && g % 97 != 0) continue;
      bool real = false;
      for (uint32_t h = 0; h < G.order() && !real; ++h) real = G.conj(g, h) == G.inv(g);
      REQUIRE(D->is_real(D->class_of(g)) == real);
    }
  }
}

TEST_CASE("regular semisimple examples") {
  auto D = ws().classes("SL(2,5)");
  const auto& G = D->group();
  auto c3 = testing::classes_of_order(*D, 3);
  REQUIRE(!c3.empty());
  auto r3 = is_regular_semisimple(G, D->cls(c3[0]).rep);
  CHECK(r3.regular_semisimple);
  auto cen = centralizer(G, D->cls(c3[0]).rep);
  CHECK(r3.centralizer_order == cen.size());
  CHECK_FALSE(is_regular_semisimple(G, Group::identity()).regular_semisimple);
  for (uint32_t c : testing::classes_of_order(*D, 5)) CHECK_FALSE(is_regular_semisimple(G, D->cls(c).rep).regular_semisimple);
  CHECK_THROWS_AS(is_regular_semisimple(*ws().group("A5"), 1), std::invalid_argument);
}

TEST_CASE("squarefree characteristic polynomial implies abelian centralizer") {
  for (const char* s : {"SL(2,5)", "SL(2,8)", "SL(2,9)", "SL(2,13)", "SL(3,2)", "SL(3,3)", "SU(3,3)", "SU(4,2)"}) {
    CAPTURE(s);
    auto D = ws().classes(s);
    const auto& G = D->group();
    for (uint32_t c = 0; c < D->count(); ++c) {
      auto r = is_regular_semisimple(G, D->cls(c).rep);
      auto cen = centralizer(G, D->cls(c).rep);
      bool abelian = true;
      for (size_t a = 0; a < cen.size() && abelian; a += 1 + cen.size() / 40)
        for (size_t b = 0; b < cen.size() && abelian; ++b) abelian = G.mul(cen[a], cen[b]) == G.mul(cen[b], cen[a]);
      CHECK(r.abelian_centralizer == is_abelian_subgroup(G, cen));
      if (r.abelian_centralizer) CHECK(abelian);
      if (r.squarefree_charpoly) CHECK(r.abelian_centralizer);
    }
  }
}
