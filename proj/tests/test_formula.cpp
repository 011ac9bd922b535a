#include <doctest.h>

#include "ordalg/assignment.hpp"
#include "ordalg/axioms.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"
#include "ordalg/formula.hpp"

using namespace ordalg;
using namespace ordalg::terms;

namespace {

const Document& doc() {
  static const Document d = fixtures();
  return d;
}

Algebra table_algebra(std::vector<std::string> labels, std::string symbol, std::vector<Element> t) {
  const auto n = labels.size();
  return Algebra(std::move(labels), {Operation(std::move(symbol), 2, n, std::move(t))});
}

}  // namespace

TEST_CASE("term evaluation") {
  Algebra a = materialize(doc(), "fig1_pc");
  const Environment env{{"x", a.index_of("a")}, {"y", a.index_of("c")}};
  CHECK(a.label(eval_term(a, meet(star(var("x")), var("y")), env)) == "b");
  CHECK(eval_term(a, var("x"), {{"x", 4}}) == 4);

  Algebra f5 = materialize(doc(), "fig5_sspc");
  const Environment e5{{"x", f5.index_of("b")}, {"y", f5.index_of("a")}};
  CHECK(f5.label(eval_term(f5, circ(circ(var("x"), var("y")), var("y")), e5)) == "1");

  CHECK_THROWS_AS(eval_term(a, var("q"), env), Error);
  CHECK_THROWS_AS(eval_term(a, circ(var("x"), var("y")), env), Error);
}

TEST_CASE("check_formula on the fig1 pc algebra") {
  Algebra a = materialize(doc(), "fig1_pc");
  auto x = var("x"), y = var("y");
  Formula f = Formula::identity("pc", meet(meet(x, y), meet(star(x), y)), zero());
  auto r = check_formula(a, f);
  CHECK(r.holds);
  CHECK(r.checked_count == 36);
  CHECK_FALSE(r.witness);

  // a* := d
  auto t = a.op(sym::star).table();
  t[a.index_of("a")] = a.index_of("d");
  Algebra b = a.with(Operation(std::string(sym::star), 1, a.size(), t));
  auto bad = check_formula(b, f);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness);
  CHECK(format_assignment(*bad.witness, b.labels()) == "{x=a, y=a}");
  CHECK(witness_consistent(b, bad));
  CHECK_FALSE(holds_at(b, f, {{"x", b.index_of("a")}, {"y", b.index_of("d")}}));

  CHECK(check_formula(a, Formula::identity("refl", x, x)).holds);
}

TEST_CASE("formula construction") {
  CHECK_THROWS_AS(Formula("bad", {"x"}, Prop::eq(var("x"), var("y"))), Error);
  Formula f = Formula::identity("c", meet(var("y"), var("x")), meet(var("x"), var("y")));
  CHECK(f.outer() == std::vector<std::string>{"y", "x"});
}

TEST_CASE("induced order") {
  Algebra chain = table_algebra({"0", "1", "2"}, std::string(sym::meet), {0, 0, 0, 0, 1, 1, 0, 1, 2});
  Poset p = induced_order(chain, OrderKind::meet);
  CHECK(p.leq(0, 1));
  CHECK(p.leq(1, 2));
  CHECK_FALSE(p.leq(2, 1));

  Algebra proj = table_algebra({"0", "1"}, std::string(sym::meet), {0, 0, 1, 1});
  CHECK_THROWS_AS(induced_order(proj, OrderKind::meet), Error);

  const Poset& f1 = doc().find_poset("fig1")->poset;
  ChoiceSpace(f1, ChoiceFamily::meet).for_each([&](std::uint64_t, const ChoicePair& c) {
    Algebra a(f1.labels(), {directoid_table(f1, *c.meet)});
    CHECK(induced_order(a, OrderKind::meet) == f1);
    return true;
  });
}

TEST_CASE("axioms") {
  Algebra lattice(std::vector<std::string>{"0", "1", "2"},
                  {Operation(std::string(sym::meet), 2, 3, {0, 0, 0, 0, 1, 1, 0, 1, 2}),
                   Operation(std::string(sym::join), 2, 3, {0, 1, 2, 1, 1, 2, 2, 2, 2})});
  CHECK(verify_axioms(lattice, AxiomClass::lambda_lattice).holds());

  const Poset& f1 = doc().find_poset("fig1")->poset;
  ConeChoice c(OrderKind::meet);
  c.set(f1.index_of("a"), f1.index_of("b"), f1.index_of("0"));
  c.set(f1.index_of("c"), f1.index_of("d"), f1.index_of("a"));
  Algebra d(f1.labels(), {directoid_table(f1, c)});
  auto rs = verify_axioms(d, AxiomClass::meet_directoid);
  CHECK(rs.holds());
  for (const auto& r : rs.items)
    if (r.formula && r.formula->outer().size() == 3) CHECK(r.checked_count == 216);

  Algebra broken = table_algebra({"0", "1"}, std::string(sym::meet), {1, 0, 0, 1});
  auto br = verify_axioms(broken, AxiomClass::meet_directoid);
  CHECK_FALSE(br.holds());
  const Report* f = br.first_failure();
  REQUIRE(f);
  CHECK(f->name == "⊓ idempotent");
  CHECK(format_assignment(*f->witness, broken.labels()) == "{x=0}");
}
