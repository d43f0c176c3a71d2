#include "oracles.hpp"

#include "edst/errors.hpp"
#include "edst/procedures.hpp"
#include "edst/translit.hpp"

#include <doctest.h>

using namespace edst;

namespace {

const MetrologicalContext& adab() { return context_lookup(ContextId::sar_adab); }
const MetrologicalContext& zab() { return context_lookup(ContextId::sar_zab); }

std::string arabic(const CompoundValue& v, const MetrologicalContext& ctx) {
  RenderConventions c;
  c.notation = Notation::arabic;
  return render_value(v, ctx, c);
}

}  // namespace

TEST_CASE("squares and rectangles") {
  CHECK(square_area(length(20)) == surface(400));
  CHECK(square_area(length(ratio(7, 12))).magnitude * 10800 == oracle::kusz3_square_sze(7));
  CHECK(rect_area(length(50), length(3000)) == surface(150000));
  CHECK(rect_area(length(ratio(1, 6)), length(600)) == surface(100));
  CHECK_THROWS_AS(rect_area(surface(1), length(1)), DimensionError);
}

TEST_CASE("bordering grows the square band by band") {
  auto steps = bordering_derivation(length(180));
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].pieces.size() == 1);
  CHECK(steps[0].pieces[0].kind == "seed");
  CHECK(steps[0].pieces[0].description == "2(bur3)");
  CHECK(steps[2].pieces.size() == 3);
  CHECK(steps[2].pieces[0].description == "4(bur3)");
  CHECK(steps[2].total == square_area(length(180)));

  auto ten = bordering_derivation(length(30));
  CHECK(ten.size() == 3);
  CHECK(ten[0].pieces[0].description == "1(iku)");

  auto five = bordering_derivation(length(5));
  REQUIRE(five.size() == 1);
  CHECK(five[0].pieces[0].description == "1/4(iku)");

  CHECK_THROWS_AS(bordering_derivation(length(7)), SchemeError);
  CHECK_THROWS_AS(bordering_derivation(length(660)), SchemeError);
  std::vector<Quantity> bad{length(10), length(30)};
  CHECK_THROWS_AS(bordering_sequence(bad, length(10)), SchemeError);
}

TEST_CASE("cut-and-paste schemes") {
  CutPasteScheme s = parse_scheme("+12x6 -4x2");
  REQUIRE(s.pieces.size() == 2);
  CHECK(s.pieces[1].sign == SegmentSign::minus);
  CHECK(render_scheme(s) == "+12x6 -4x2");
  CHECK(s.total() == square_area(length(ratio(8, 12))));
  CHECK(arabic(cutpaste_derive(length(ratio(8, 12)), s), adab()) == "1/2 sar la2 3 gin2 1 samana");

  CutPasteScheme eleven = parse_scheme("+12x12 -12x1 -12x1 +1x1");
  CompoundValue v = cutpaste_derive(length(ratio(11, 12)), eleven);
  CHECK(v.segments.size() == 3);
  CHECK(render_value(v, adab()) == "1(as) sar la2 1(u) gin2 + 1(as) sa10-ma-na 1(u) 5(disz) sze");

  CHECK(parse_scheme("+2x12/5 -2x2/5").pieces[0].height == ratio(12, 5));
  CHECK_THROWS_AS(cutpaste_derive(length(ratio(7, 12)), parse_scheme("+7x6")), SchemeError);
  CHECK_THROWS_AS(parse_scheme("12x6"), ParseError);
  CHECK_THROWS_AS(parse_scheme("+12by6"), ParseError);
  CHECK_THROWS_AS(parse_scheme(""), ParseError);
}

TEST_CASE("fractions of a sar") {
  CHECK(arabic(fraction_of_sar(1, 9), zab()) == "6 2/3 gin2");
  CHECK(arabic(fraction_of_sar(1, 16), zab()) == "3 2/3 gin2 5 gin2-bi");
  CHECK(evaluate(fraction_of_sar(1, 576), zab()).magnitude * 216000 == oracle::szu_bad_square_gbg(1));
  CHECK_THROWS_AS(fraction_of_sar(0, 3), ArithmeticError);
  CHECK_THROWS_AS(fraction_of_sar(1, 7), RepresentationError);
}

TEST_CASE("seeds and their scaling") {
  SexagesimalSeed nikkas = seed_square(units::nig2_kas7);
  CHECK(nikkas.surface == surface(ratio(1, 16)));
  CHECK(arabic(scale_seed(nikkas, 3), zab()) == "1/2 sar 3 2/3 gin2 5 gin2-bi");
  SexagesimalSeed szu = seed_square(units::szu_bad);
  CHECK(arabic(szu.notation, zab()) == "6 gin2-bi 15 gin2-ba-gin2");
  CHECK(arabic(scale_seed(szu, 4), zab()) == "1 2/3 gin2");
  CHECK(scale_seed(szu, 1).segments.front().pieces.size() == szu.notation.segments.front().pieces.size());
  CHECK(scale_seed_value(szu, 7) == scale_seed_value(szu, 7, ScaleMethod::multiplication));
  CHECK_THROWS_AS(scale_seed_value(szu, 0), ArithmeticError);
  CHECK_THROWS_AS(seed_square(units::gi), SchemeError);
}

TEST_CASE("subtractive spelling") {
  auto f = subtractive_form(square_area(length(ratio(8, 12))), adab());
  REQUIRE(f.has_value());
  CHECK(evaluate(*f, adab()) == square_area(length(ratio(8, 12))));
  CHECK(f->segments.size() == 2);
  CHECK_FALSE(subtractive_form(surface(100), context_lookup(ContextId::g)).has_value());
}

TEST_CASE("the redundancy classes are equal lengths") {
  CHECK(redundancy_classes().size() == 12);
  for (const auto& cls : redundancy_classes()) {
    CHECK(cls.size() >= 2);
    auto szu = [](const LengthTerm& t) { return static_cast<oracle::i64>(t.count) * oracle::in_szu_bad(std::string(t.unit->name)); };
    for (const auto& t : cls) CHECK(szu(t) == szu(cls.front()));
  }
}
