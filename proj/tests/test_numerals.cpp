#include "oracles.hpp"

#include "edst/errors.hpp"
#include "edst/numerals.hpp"

#include <doctest.h>

using namespace edst;

TEST_CASE("System S decodes additively") {
  CHECK(decode_numeral(parse_numeral("3(u) 5(asz)", NumeralSystem::S)) == 35);
  CHECK(decode_numeral(parse_numeral("1(gesz'u)", NumeralSystem::S)) == 600);
  CHECK(decode_numeral(parse_numeral("9(gesz2)", NumeralSystem::S)) == 540);
  CHECK(decode_numeral(parse_numeral("1(szar'u)", NumeralSystem::S)) == 36000);
  CHECK(decode_numeral(parse_numeral("5(disz)", NumeralSystem::S)) == 5);
}

TEST_CASE("as and asz are the same sign") {
  CHECK(parse_numeral("4(asz)", NumeralSystem::S) == parse_numeral("4(as)", NumeralSystem::S));
  CHECK(decode_numeral(parse_numeral("4(aš)", NumeralSystem::S)) == 4);
}

TEST_CASE("subtractive numerals") {
  NumeralExpr nine = parse_numeral("1(u) la2 1(asz)", NumeralSystem::S);
  CHECK(decode_numeral(nine) == 9);
  CHECK(nine.subtrahend.size() == 1);
  CHECK(decode_numeral(parse_numeral("5(u) la2 1(asz)", NumeralSystem::S)) == 49);
  CHECK(render_numeral(encode_canonical(9, NumeralSystem::S, {true, OneSign::as})) == "1(u) la2 1(as)");
  CHECK(render_numeral(encode_canonical(9, NumeralSystem::S)) == "9(as)");
  CHECK(render_numeral(encode_canonical(39, NumeralSystem::S, {true, OneSign::as})) == "4(u) la2 1(as)");
}

TEST_CASE("System G with fractions and tiers") {
  CHECK(decode_numeral(parse_numeral("1/4(iku)", NumeralSystem::G)) == ratio(1, 4));
  CHECK(decode_numeral(parse_numeral("4(iku) 1/2(iku)", NumeralSystem::G)) == ratio(9, 2));
  CHECK(decode_numeral(parse_numeral("3(szar2) 2(bur'u)", NumeralSystem::G)) == 3600);
  CHECK(decode_numeral(parse_numeral("1(szar2) 2(bur'u) 3(bur3) 1(esze3)", NumeralSystem::G)) == 1500);
  CHECK(decode_numeral(parse_numeral("3(szar2) KID 2(szar'u) gal", NumeralSystem::G)) == 12960000);
  CHECK(render_numeral(encode_canonical(12960000, NumeralSystem::G)) == "3(szar2) KID 2(szar'u) gal");
  CHECK(render_numeral(encode_canonical(ratio(1, 4), NumeralSystem::G)) == "1/4(iku)");
}

TEST_CASE("lenient tiers reach back over a decreasing run only") {
  // The 3000-ninda square, gal written after 2(szar'u) for the 1(szar2) before it.
  NumeralExpr e = parse_numeral("1(szar2) 2(szar'u) gal 3(szar2) 2(bur'u)", NumeralSystem::G, ParseMode::lenient);
  CHECK(decode_numeral(e) == 3000 * 3000 / 100);
  CHECK_THROWS_AS(parse_numeral("1(szar2) 2(szar'u) gal", NumeralSystem::G), ParseError);
}

TEST_CASE("canonical encoding agrees with the integer greedy oracle") {
  for (std::int64_t n : {1, 9, 10, 59, 60, 61, 599, 600, 3599, 3600, 35999, 36000, 99999}) {
    NumeralExpr e = encode_canonical(n, NumeralSystem::S);
    auto terms = oracle::greedy(n, oracle::s_ladder());
    REQUIRE(e.positive.size() == terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) CHECK(e.positive[i].value() == terms[i].first * terms[i].second);
  }
}

TEST_CASE("malformed numerals report an offset") {
  try {
    parse_numeral("3(u) 5(xyz)", NumeralSystem::S);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(parse_numeral("", NumeralSystem::S), ParseError);
  CHECK_THROWS_AS(parse_numeral("5(asz) 3(u)", NumeralSystem::S), ParseError);
  CHECK_THROWS_AS(parse_numeral("1(iku)", NumeralSystem::S), ParseError);
}

TEST_CASE("lenient mode reorders signs") {
  NumeralExpr e = parse_numeral("5(asz) 3(u)", NumeralSystem::S, ParseMode::lenient);
  CHECK(decode_numeral(e) == 35);
  CHECK(render_numeral(e) == "3(u) 5(as)");
}

TEST_CASE("encoding rejects what the systems cannot write") {
  CHECK_THROWS_AS(encode_canonical(0, NumeralSystem::S), NumeralError);
  CHECK_THROWS_AS(encode_canonical(ratio(1, 2), NumeralSystem::S), NumeralError);
  CHECK_THROWS_AS(encode_canonical(ratio(1, 3), NumeralSystem::G), NumeralError);
  CHECK_THROWS_AS(encode_canonical(-4, NumeralSystem::G), NumeralError);
}

TEST_CASE("fraction signs") {
  CHECK(fraction_value(FractionSign::two_thirds) == ratio(2, 3));
  CHECK(fraction_label(FractionSign::quarter) == "igi-4");
  CHECK(parse_fraction_sign("1/3") == FractionSign::third);
  CHECK(parse_fraction_sign("igi-4") == FractionSign::quarter);
  CHECK_FALSE(parse_fraction_sign("1/5").has_value());
}

TEST_CASE("sign tables") {
  CHECK(signs_of(NumeralSystem::S).size() == 7);
  CHECK(signs_of(NumeralSystem::G).size() == 8);
  CHECK(sign_value(SignId::g_szaru, Tier::kid) == 10800 * 3600);
  CHECK(find_sign("bur'u", NumeralSystem::G) == SignId::g_buru);
  CHECK_FALSE(find_sign("bur'u", NumeralSystem::S).has_value());
}
