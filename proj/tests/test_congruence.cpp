#include <doctest.h>

#include "ordalg/assignment.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"

using namespace ordalg;

namespace {

const Document& doc() {
  static const Document d = fixtures();
  return d;
}

// 2-chain with ⊓ and * (0*=1, 1*=0).
Algebra two_chain() {
  return Algebra({"0", "1"}, {Operation(std::string(sym::meet), 2, 2, {0, 0, 0, 1}),
                              Operation(std::string(sym::star), 1, 2, {1, 0})});
}

Algebra chain_lattice() {
  return Algebra({"0", "1"}, {Operation(std::string(sym::meet), 2, 2, {0, 0, 0, 1}),
                              Operation(std::string(sym::join), 2, 2, {0, 1, 1, 1})});
}

// Every partition of 0..n-1 as a class map in restricted-growth form.
std::vector<std::vector<Element>> partitions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> rg(n, 0);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element max) {
    if (i == n) {
      out.push_back(rg);
      return;
    }
    for (Element v = 0; v <= max + 1 && (i > 0 || v == 0); ++v) {
      rg[i] = v;
      rec(i + 1, std::max(max, v));
    }
  };
  if (n == 0) return {{}};
  rg[0] = 0;
  rec(1, 0);
  return out;
}

}  // namespace

TEST_CASE("congruence basics") {
  auto t = Congruence::from_blocks(4, {{0, 2}, {1}, {3}});
  CHECK(t.related(0, 2));
  CHECK_FALSE(t.related(0, 1));
  CHECK(t.block_count() == 3);
  CHECK(t.block_of(2) == std::vector<Element>{0, 2});
  CHECK(Congruence::identity(4).refines(t));
  CHECK(t.refines(Congruence::total(4)));
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}}), Error);
  CHECK(Congruence::from_classes({5, 7, 5, 9}) == t);
  auto u = Congruence::from_blocks(4, {{0, 1}, {2}, {3}});
  CHECK(join(t, u) == Congruence::from_blocks(4, {{0, 1, 2}, {3}}));
  CHECK(meet(t, u) == Congruence::identity(4));
}

TEST_CASE("compatibility") {
  Algebra a = two_chain();
  CHECK(is_congruence(a, Congruence::identity(2)).holds);
  CHECK(is_congruence(a, Congruence::total(2)).holds);
  Algebra f1 = materialize(doc(), "fig1_pc");
  CHECK(is_congruence(f1, Congruence::identity(6)).holds);
  CHECK(is_congruence(f1, Congruence::total(6)).holds);
  auto r = is_congruence(f1, std::vector<std::vector<Element>>{{0, 1}, {2}, {3}, {4}, {5}});
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.symbol.empty());
}

TEST_CASE("principal congruences") {
  Algebra a = two_chain();
  CHECK(principal_congruence(a, 0, 0).is_identity());
  CHECK(principal_congruence(a, 0, 1).is_total());

  Algebra f1 = materialize(doc(), "fig1_rpc");
  const Element c = f1.index_of("c"), one = f1.index_of("1");
  Congruence cg = principal_congruence(f1, c, one);
  CHECK(cg.related(c, one));
  CHECK(is_congruence(f1, cg).holds);
  // Minimal among all congruences relating c and 1.
  for (const auto& classes : partitions(f1.size())) {
    auto theta = Congruence::from_classes(classes);
    if (theta.related(c, one) && is_congruence(f1, theta).holds) CHECK(cg.refines(theta));
  }
}

TEST_CASE("congruence lattices") {
  auto two = congruence_lattice(chain_lattice());
  CHECK(two.size() == 2);
  CHECK(two.elements.front().is_identity());
  CHECK(two.elements.back().is_total());

  Algebra f1 = materialize(doc(), "fig1_pc");
  auto lat = congruence_lattice(f1);
  CHECK(lat.validated);
  std::size_t scanned = 0;
  for (const auto& classes : partitions(6)) scanned += is_congruence(f1, Congruence::from_classes(classes)).holds;
  CHECK(partitions(6).size() == 203);
  CHECK(lat.size() == scanned);
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = 0; j < lat.size(); ++j) {
      CHECK(lat.elements[lat.join(i, j)] == join(lat.elements[i], lat.elements[j]));
      CHECK(lat.elements[lat.meet(i, j)] == meet(lat.elements[i], lat.elements[j]));
    }

  CongruenceOptions o;
  o.guard = 3;
  auto unchecked = congruence_lattice(f1, o);
  CHECK(unchecked.guard_exceeded);
  CHECK_FALSE(unchecked.validated);
  CHECK(unchecked.elements == lat.elements);
}

TEST_CASE("congruence properties") {
  auto p2 = congruence_properties(chain_lattice(), Element{1});
  CHECK(p2.permutable);
  CHECK(p2.distributive);
  CHECK(p2.arithmetical);
  CHECK(p2.weakly_regular == true);

  Algebra rpc = materialize(doc(), "fig1_rpc");
  auto pr = congruence_properties(rpc, designated_unit(rpc, Profile::rpc));
  CHECK(pr.permutable);
  CHECK(pr.weakly_regular == true);

  Algebra stone = materialize(doc(), "fig2_stone");
  CHECK(congruence_properties(stone, designated_unit(stone, Profile::stone)).distributive);

  // A bare 3-element chain directoid has many congruences; not weakly regular.
  Algebra chain({"0", "1", "2"}, {Operation(std::string(sym::meet), 2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2})});
  auto pc = congruence_properties(chain, Element{2});
  CHECK(pc.weakly_regular == false);
  CHECK_FALSE(pc.weakly_regular_witness.empty());
}

TEST_CASE("term schemes") {
  Algebra stone = materialize(doc(), "fig2_stone");
  auto ts = verify_term_conditions(stone, Profile::stone);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].scheme == TermScheme::majority);
  CHECK(ts[0].holds());
  for (const auto& r : ts[0].identities.items) CHECK(r.checked_count == 64);

  Algebra rpc = materialize(doc(), "fig1_rpc");
  auto tr = verify_term_conditions(rpc, Profile::rpc);
  REQUIRE(tr.size() == 2);
  for (const auto& t : tr) CHECK(t.holds());
  CHECK(tr[1].identities.items.size() == 5);

  Algebra sspc = materialize(doc(), "fig5_sspc");
  for (const auto& t : verify_term_conditions(sspc, Profile::sspc)) CHECK(t.holds());

  CHECK_THROWS_AS(verify_term_conditions(two_chain(), Profile::stone), Error);
}
