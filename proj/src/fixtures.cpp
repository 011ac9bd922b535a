#include "ordalg/fixtures.hpp"

#include <string>

#include "ordalg/error.hpp"

namespace ordalg {

namespace {

constexpr std::string_view fig1 = R"(poset fig1
elements: 0 a b c d 1
order: 0<a 0<b a<c a<d b<c b<d c<1 d<1

algebra fig1_pc on fig1
profile pc
unary * : 0->1 a->b b->a c->0 d->0 1->0

algebra fig1_rpc on fig1
profile rpc
binary * :
row 0: 1 1 1 1 1 1
row a: b 1 b 1 1 1
row b: a a 1 1 1 1
row c: 0 a b 1 d 1
row d: 0 a b c 1 1
row 1: 0 a b c d 1
)";

constexpr std::string_view fig2 = R"(poset fig2
elements: 0 a b c d e f 1
order: 0<a 0<b a<c a<d a<e b<d b<e b<f c<1 d<1 e<1 f<1

algebra fig2_stone on fig2
profile stone
unary * : 0->1 a->f b->c c->f d->0 e->0 f->c 1->0

algebra fig2_dstar on fig2
unary ** : 0->0 a->c b->f c->c d->1 e->1 f->f 1->1
)";

constexpr std::string_view fig3 = R"(poset fig3
elements: 0 a b c d e f g h i j 1
order: 0<a 0<b 0<c 0<d a<e a<i b<e b<j c<f c<g d<f d<h e<g e<h f<i f<j g<1 h<1 i<1 j<1

algebra fig3_stone on fig3
profile stone
unary * : 0->1 a->j b->i c->h d->g e->f f->e g->d h->c i->b j->a 1->0

algebra fig3_dstar on fig3
unary ** : 0->0 a->a b->b c->c d->d e->e f->f g->g h->h i->i j->j 1->1
)";

constexpr std::string_view fig4 = R"(poset fig4
elements: a b c d
order: a<c a<d b<c b<d

algebra fig4_spc on fig4
binary ∘ :
row a: a b c d
row b: a b c d
row c: a b c d
row d: a b c d
)";

constexpr std::string_view fig5 = R"(poset fig5
elements: 0 a b c d e 1
order: 0<a 0<c a<b b<d b<e c<d c<e d<1 e<1

algebra fig5_sspc on fig5
profile sspc
binary ∘ :
row 0: 1 1 1 1 1 1 1
row a: c 1 1 c 1 1 1
row b: c a 1 c 1 1 1
row c: b a b 1 1 1 1
row d: 0 a b c 1 e 1
row e: 0 a b c d 1 1
row 1: 0 a b c d e 1
)";

}  // namespace

const std::vector<FixtureText>& fixture_texts() {
  static const std::vector<FixtureText> all{
      {"fig1", fig1}, {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4}, {"fig5", fig5}};
  return all;
}

Document fixtures() {
  std::string text;
  for (const auto& f : fixture_texts()) {
    if (!text.empty()) text += "\n";
    text += f.text;
  }
  return parse(text);
}

Document fixture(std::string_view name) {
  for (const auto& f : fixture_texts())
    if (f.name == name) return parse(f.text);
  throw Error(ErrorCode::invalid_argument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace ordalg
