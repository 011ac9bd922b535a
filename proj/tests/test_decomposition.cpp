#include <doctest.h>

#include "ordalg/assignment.hpp"
#include "ordalg/axioms.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/decomposition.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"
#include "ordalg/pc_structures.hpp"

using namespace ordalg;

namespace {

const Document& doc() {
  static const Document d = fixtures();
  return d;
}

Algebra meet_chain() { return Algebra({"0", "1"}, {Operation(std::string(sym::meet), 2, 2, {0, 0, 0, 1})}); }

Algebra lattice_chain() {
  return Algebra({"0", "1"}, {Operation(std::string(sym::meet), 2, 2, {0, 0, 0, 1}),
                              Operation(std::string(sym::join), 2, 2, {0, 1, 1, 1})});
}

Congruence kernel(const Algebra& product, std::size_t n2, bool first) {
  std::vector<Element> cls(product.size());
  for (Element i = 0; i < product.size(); ++i) cls[i] = first ? i / n2 : i % n2;
  return Congruence::from_classes(cls);
}

}  // namespace

TEST_CASE("direct products") {
  Algebra g = direct_product(meet_chain(), meet_chain());
  CHECK(g.size() == 4);
  Poset order = induced_order(g, OrderKind::meet);
  Poset grid = build_poset({"0.0", "0.1", "1.0", "1.1"}, {{"0.0", "0.1"}, {"0.0", "1.0"}, {"0.1", "1.1"}, {"1.0", "1.1"}});
  CHECK(order == grid);

  Algebra a = materialize(doc(), "fig1_pc");
  Algebra as = direct_product(a, Algebra({"s"}, {Operation(std::string(sym::meet), 2, 1, {0}),
                                                 Operation(std::string(sym::star), 1, 1, {0}),
                                                 Operation::constant(std::string(sym::zero), 1, 0)}));
  CHECK(find_isomorphism(as, a));
  CHECK_THROWS_AS(direct_product(a, meet_chain()), Error);

  // 2-chain RPC algebra squared: * agrees with the grid's own relative pseudocomplement.
  Poset c2 = build_poset({"0", "1"}, {{"0", "1"}});
  Algebra r = assign_algebra(c2, Profile::rpc, canonical_choices(c2, Profile::rpc));
  Algebra r2 = direct_product(r, r);
  Poset g2 = induced_order(r2, OrderKind::meet);
  CHECK(r2.op(sym::star).table() == classify(g2, PcKind::relatively_pc).table->table());
}

TEST_CASE("quotients") {
  Algebra a = materialize(doc(), "fig1_pc");
  CHECK(find_isomorphism(quotient(a, Congruence::identity(a.size())), a));
  CHECK(quotient(a, Congruence::total(a.size())).size() == 1);
  CHECK_THROWS_AS(quotient(a, Congruence::from_blocks(6, {{0, 1}, {2}, {3}, {4}, {5}})), Error);

  Algebra x = lattice_chain();
  Algebra y(std::vector<std::string>{"p", "q", "r"},
            {Operation(std::string(sym::meet), 2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2}),
             Operation(std::string(sym::join), 2, 3, {0, 1, 2, 1, 1, 2, 2, 2, 2})});
  Algebra p = direct_product(x, y);
  CHECK(find_isomorphism(quotient(p, kernel(p, 3, true)), x));
  CHECK(find_isomorphism(quotient(p, kernel(p, 3, false)), y));
}

TEST_CASE("factor pairs") {
  CHECK_THROWS_AS(FactorPair(Congruence::identity(2), Congruence::identity(2)), Error);
  auto simple = factor_pairs(lattice_chain());
  REQUIRE(simple.size() == 1);
  CHECK(simple[0].trivial());

  Algebra p = direct_product(lattice_chain(), lattice_chain());
  auto pairs = factor_pairs(p);
  const Congruence k1 = kernel(p, 2, true), k2 = kernel(p, 2, false);
  bool found = false;
  for (const auto& fp : pairs) {
    CHECK(FactorPair::valid(fp.theta(), fp.phi()));
    found = found || (fp.theta() == k1 && fp.phi() == k2) || (fp.theta() == k2 && fp.phi() == k1);
  }
  CHECK(found);

  Algebra f1 = materialize(doc(), "fig1_pc");
  for (const auto& fp : factor_pairs(f1)) {
    CHECK(join(fp.theta(), fp.phi()).is_total());
    CHECK(meet(fp.theta(), fp.phi()).is_identity());
    CHECK(compose(fp.theta(), fp.phi()) == compose(fp.phi(), fp.theta()));
  }
}

TEST_CASE("decompose") {
  auto f = decompose(direct_product(lattice_chain(), lattice_chain()));
  REQUIRE(f.decomposable);
  CHECK(f.first->size() == 2);
  CHECK(f.second->size() == 2);

  Algebra three(std::vector<std::string>{"p", "q", "r"},
                {Operation(std::string(sym::meet), 2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2})});
  CHECK_FALSE(decompose(three).decomposable);

  Algebra f4 = materialize(doc(), "fig4_spc");
  auto d4 = decompose(f4);
  REQUIRE(d4.decomposable);
  CHECK(find_isomorphism(direct_product(*d4.first, *d4.second), f4));
  for (Element i = 0; i < f4.size(); ++i) {
    auto [a, b] = d4.map[i];
    CHECK(a < d4.first->size());
    CHECK(b < d4.second->size());
  }
}

TEST_CASE("isomorphisms") {
  Algebra a = materialize(doc(), "fig5_sspc");
  auto id = find_isomorphism(a, a);
  REQUIRE(id);
  for (Element i = 0; i < a.size(); ++i) CHECK((*id)[i] == i);
  CHECK_FALSE(find_isomorphism(lattice_chain(), direct_product(lattice_chain(), lattice_chain())));
  CHECK_THROWS_AS(find_isomorphism(a, lattice_chain()), Error);

  // The 2×2 grid as a lattice against the product of 2-chains, with labels shuffled.
  Poset grid = build_poset({"w", "x", "y", "z"}, {{"w", "x"}, {"w", "y"}, {"x", "z"}, {"y", "z"}});
  ChoiceSpace space(grid, ChoiceFamily::lambda);
  CHECK(space.count() == 1);
  ChoicePair c = space.decode(0);
  Algebra g(grid.labels(), {directoid_table(grid, *c.meet), directoid_table(grid, *c.join)});
  auto iso = find_isomorphism(g, direct_product(lattice_chain(), lattice_chain()));
  REQUIRE(iso);
  CHECK(is_isomorphism(g, direct_product(lattice_chain(), lattice_chain()), *iso));

  Algebra rel = a.relabeled({"A", "B", "C", "D", "E", "F", "G"});
  CHECK(find_isomorphism(a, rel));
}

TEST_CASE("directly decomposable congruences") {
  Algebra x = lattice_chain();
  Algebra p = direct_product(x, x);
  CHECK(product_congruence(Congruence::identity(2), Congruence::identity(2)).is_identity());
  CHECK(product_congruence(Congruence::total(2), Congruence::total(2)).is_total());
  auto lat = congruence_lattice(p);
  CHECK(lat.size() == 4);
  for (const auto& theta : lat.elements) CHECK(is_directly_decomposable_congruence(x, x, theta));
}
