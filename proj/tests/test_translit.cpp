#include "edst/errors.hpp"
#include "edst/translit.hpp"

#include <doctest.h>

using namespace edst;

namespace {

const MetrologicalContext& ctx(ContextId id) { return context_lookup(id); }

Rational value_of(std::string_view text, ContextId id, ParseMode mode = ParseMode::strict) {
  return evaluate(parse_measure(text, ctx(id), mode).value, ctx(id)).magnitude;
}

}  // namespace

TEST_CASE("ASCII folding") {
  CHECK(fold_ascii("kuš₃") == "kusz3");
  CHECK(fold_ascii("eše₃") == "esze3");
  CHECK(fold_ascii("aš") == "asz");
  CHECK(to_unicode("gin2-ba-gin2") == "gin₂-ba-gin₂");
  CHECK(to_unicode("1(as) sa10-ma-na") == "1(aš) sa₁₀-ma-na");
}

TEST_CASE("simple and compound values") {
  CHECK(value_of("3(u) 5(asz) ninda-DU", ContextId::ed3a) == 35);
  CHECK(value_of("1(gesz'u)", ContextId::ed3a) == 600);
  CHECK(value_of("1(u) la2 1(asz) kusz3", ContextId::adab) == ratio(3, 4));
  CHECK(value_of("3(asz) gi", ContextId::adab) == ratio(3, 2));
  CHECK(value_of("1(asz) ur2-hal-la", ContextId::ed3a) == ratio(1, 4));
  CHECK(value_of("1(asz) ur2 hal-la", ContextId::ed3a) == ratio(1, 4));
  CHECK(value_of("2(esze3) 3(iku) GAN2", ContextId::g) == 1500);
  CHECK(value_of("1/4(iku)", ContextId::g) == 25);
  CHECK(value_of("1/2 sar la2 3(disz) gin2 1(asz) sa10-ma-na", ContextId::sar_adab) == ratio(4, 9));
  CHECK(value_of("4(disz) gin2 la2 igi-4 gin2", ContextId::sar_adab) == ratio(15, 4) / 60);
  CHECK(value_of("3(asz) 2/3 gin2 5(asz) gin2-bi", ContextId::sar_zab) == ratio(1, 16));
}

TEST_CASE("la2 and + segments") {
  auto e = parse_measure("1(asz) sar la2 1(u) gin2 + 1(asz) sa10-ma-na 1(u) 5(disz) sze", ctx(ContextId::sar_adab));
  REQUIRE(e.value.segments.size() == 3);
  CHECK(e.value.segments[1].sign == SegmentSign::minus);
  CHECK(e.value.segments[2].sign == SegmentSign::plus);
  CHECK(evaluate(e.value, ctx(ContextId::sar_adab)).magnitude == ratio(121, 144));
  CHECK(value_of("1 sar la2 10 gin2 + (1 sa10-ma-na 15 sze)", ContextId::sar_adab) == ratio(121, 144));
}

TEST_CASE("qualifiers are kept in place") {
  auto e = parse_measure("sag 5(asz) ninda-DU", ctx(ContextId::ed3a));
  REQUIRE(e.qualifiers.size() == 1);
  CHECK(e.qualifiers[0] == QualifierMark{Qualifier::sag, Placement::before});
  CHECK(render_measure(e) == "sag 5(as) ninda-DU");
  auto s = parse_measure("1(u) sa2", ctx(ContextId::ed3a));
  CHECK(s.qualifiers.at(0) == QualifierMark{Qualifier::sa2, Placement::after});
  CHECK(render_measure(s) == "1(u) sa2");
}

TEST_CASE("editorial marks") {
  auto r = parse_measure("[1(asz)] kusz3# sa2", ctx(ContextId::adab));
  CHECK(r.has_mark(mark_restored));
  CHECK(r.has_mark(mark_damaged));
  CHECK(normalize("[1(asz)] kusz3# sa2", ctx(ContextId::adab)) == "1(as) kusz3 sa2");

  auto emended = parse_measure("7(disz)!(6(disz)) gin2", ctx(ContextId::sar_adab));
  CHECK(emended.has_mark(mark_emended));
  CHECK(evaluate(emended.value, ctx(ContextId::sar_adab)).magnitude == ratio(6, 60));

  auto inserted = parse_measure("1(u) gin2 <1(asz) sa10-ma-na>", ctx(ContextId::sar_adab));
  CHECK(inserted.has_mark(mark_inserted));
  CHECK(value_of("{sar} 15 gin2", ContextId::sar_zab, ParseMode::lenient) == ratio(15, 60));
}

TEST_CASE("glossed numerals stand for fractions") {
  CHECK(value_of("2(disz) (=2/3) sar 2(disz) gin2 la2 1(asz) sa10-ma-na", ContextId::sar_adab, ParseMode::lenient) ==
        ratio(2, 3) + ratio(2, 60) - ratio(1, 180));
}

TEST_CASE("lenient mode supplies units from the context") {
  CHECK_THROWS_AS(parse_measure("3(asz) 2/3 5 gin2", ctx(ContextId::sar_zab)), ParseError);
  auto e = parse_measure("3(asz) 2/3 5 gin2", ctx(ContextId::sar_zab), ParseMode::lenient);
  CHECK(e.units_inferred);
  CHECK(evaluate(e.value, ctx(ContextId::sar_zab)).magnitude == ratio(1, 16));
}

TEST_CASE("rendering") {
  const auto& adab = ctx(ContextId::sar_adab);
  auto v = decompose_canonical(surface(ratio(4, 9)), adab);
  RenderConventions arabic;
  arabic.notation = Notation::arabic;
  CHECK(render_value(v, adab) == "1/3 sar 6(disz) gin2 2(as) sa10-ma-na");
  CHECK(render_value(v, adab, arabic) == "1/3 sar 6 gin2 2 samana");
  RenderConventions uni;
  uni.script = Script::unicode;
  CHECK(render_value(decompose_canonical(surface(1500), ctx(ContextId::g)), ctx(ContextId::g), uni) == "2(eše₃) 3(iku)");
  RenderConventions forced;
  forced.force_units = true;
  CHECK(render_value(decompose_canonical(surface(400), ctx(ContextId::g)), ctx(ContextId::g), forced) == "4(iku) GAN2");
}

TEST_CASE("normalize is idempotent") {
  for (const char* t : {"[4(disz) gin2] la2 igi-4(disz) <gin2>", "1(u) gin2# [1(asz) sa10-ma-na 1(u) 5(disz) sze]",
                        "1(asz) sar la2 1(u) gin2 <+> 1(asz) sa10-<ma-na> 1(u) 5(disz) <sze>"}) {
    std::string once = normalize(t, ctx(ContextId::sar_adab));
    CHECK(normalize(once, ctx(ContextId::sar_adab)) == once);
  }
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    parse_measure("1(u) gin2 xyz", ctx(ContextId::sar_adab));
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 10);
  }
  CHECK_THROWS_AS(parse_measure("", ctx(ContextId::sar_adab)), ParseError);
  CHECK_THROWS_AS(parse_measure("1(u) ninda-DU", ctx(ContextId::adab)), ContextError);
  CHECK_THROWS_AS(parse_measure("1/2 gin2", ctx(ContextId::sar_adab)), ParseError);
}
