#include <doctest.h>

#include "ordalg/dsl.hpp"
#include "ordalg/enumerate.hpp"
#include "ordalg/error.hpp"
#include "ordalg/fixtures.hpp"
#include "ordalg/json_io.hpp"

using namespace ordalg;

namespace {

struct Failure {
  ErrorCode code;
  std::string message;
};

Failure parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  FAIL("parsed without error");
  return {};
}

}  // namespace

TEST_CASE("fixtures") {
  Document d = fixture("fig1");
  REQUIRE(d.posets.size() == 1);
  CHECK(d.posets[0].poset.size() == 6);
  CHECK(d.find_algebra("fig1_pc")->table("*"));

  Document all = fixtures();
  const Poset& f3 = all.find_poset("fig3")->poset;
  CHECK(f3.size() == 12);
  const Operation& dd = *all.find_algebra("fig3_dstar")->table("**");
  for (Element x = 0; x < 12; ++x) CHECK(dd(x) == x);

  Algebra f5 = materialize(all, "fig5_sspc");
  const Operation& circ = f5.op(sym::circ);
  const Element one = f5.index_of("1");
  for (Element x = 0; x < f5.size(); ++x) CHECK(circ(one, x) == x);

  const Poset& f4 = all.find_poset("fig4")->poset;
  CHECK(f4.size() == 4);
  CHECK_FALSE(extremes(f4).bottom);
  CHECK_FALSE(extremes(f4).top);
  CHECK_THROWS_AS(fixture("fig9"), Error);
}

TEST_CASE("parsing") {
  Document s = parse("poset one\nelements: x\n");
  CHECK(s.posets[0].poset.size() == 1);

  Document aliases = parse(
      "# comment\n"
      "poset c\nelements: 0 1\norder: 0<1\n\n"
      "algebra c_alg on c\n"
      "binary meet : (0,0)->0 (0,1)->0 (1,0)->0 (1,1)->1\n"
      "unary * : 0->1 1->0\n"
      "constant 0: 0\n");
  const AlgebraDef& a = aliases.algebras[0];
  CHECK(a.table(sym::meet));
  CHECK(a.table(sym::star));
  CHECK(a.table(sym::zero));

  Document chosen = parse(
      "poset fig1\nelements: 0 a b c d 1\norder: 0<a<c<1 0<b<d<1 a<d b<c\n"
      "algebra x on fig1\nprofile pc\nchoice meet {c,d}=a\n");
  Algebra m = materialize(chosen, "x");
  CHECK(m.op(sym::meet)(m.index_of("c"), m.index_of("d")) == m.index_of("a"));
  CHECK(chosen.posets[0].poset == fixtures().find_poset("fig1")->poset);
}

TEST_CASE("parse errors") {
  auto short_row = parse_error("poset p\nelements: 0 1\norder: 0<1\nalgebra a on p\nbinary * :\nrow 0: 0 1\nrow 1: 1\n");
  CHECK(short_row.code == ErrorCode::non_total_table);
  CHECK(short_row.message.find("line 7") != std::string::npos);

  CHECK(parse_error("poset p\nelements: 0 1\norder: 0<2\n").code == ErrorCode::unknown_label);
  CHECK(parse_error("poset p\nelements: 0 1\norder: 0<1 1<0\n").code == ErrorCode::cycle_detected);
  CHECK(parse_error("poset p\nelements: 0 0\n").code == ErrorCode::duplicate_label);
  CHECK(parse_error("frobnicate\n").code == ErrorCode::syntax_error);
  CHECK(parse_error("poset p\nelements: 0\nposet p\nelements: 1\n").code == ErrorCode::semantic_error);
  CHECK(parse_error("poset p\nelements: 0\nalgebra a on q\n").code == ErrorCode::semantic_error);
  auto bad_choice = parse_error(
      "poset fig1\nelements: 0 a b c d 1\norder: 0<a<c<1 0<b<d<1 a<d b<c\n"
      "algebra x on fig1\nchoice meet {c,d}=1\n");
  CHECK(bad_choice.code == ErrorCode::bad_choice);
}

TEST_CASE("serialize is canonical") {
  std::string all;
  for (const auto& f : fixture_texts()) {
    CHECK(serialize(parse(f.text)) == f.text);
    if (!all.empty()) all += "\n";
    all += f.text;
  }
  CHECK(serialize(fixtures()) == all);
}

TEST_CASE("parse and serialize round trip on small posets") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const Poset& p : posets_of_size(n)) {
      Document d{{{"p", p}}, {}};
      const std::string text = serialize(d);
      REQUIRE(parse(text) == d);
      REQUIRE(serialize(parse(text)) == text);
    }
}

TEST_CASE("document_of round trip") {
  Document all = fixtures();
  for (const auto& def : all.algebras) {
    Algebra a = materialize(all, def);
    if (!a.has(sym::meet) && !a.has(sym::join)) continue;
    Document d = document_of(a, "x");
    Algebra back = materialize(d, d.algebras[0]);
    for (const auto& op : a.operations()) CHECK(back.op(op.symbol()) == op);
  }
}

TEST_CASE("json round trip") {
  Document all = fixtures();
  for (const auto& def : all.algebras) {
    Algebra a = materialize(all, def);
    Json j = to_json(a);
    CHECK(algebra_from_json(Json::parse(j.dump())) == a);
    const Poset& p = all.find_poset(def.poset)->poset;
    CHECK(poset_from_json(to_json(p)) == p);
  }
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"labels":["a"]})")), Error);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"labels":["a","b"],"leq":[[true,true],[true,true]]})")), Error);
}
