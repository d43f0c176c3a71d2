#include "edst/errors.hpp"
#include "edst/metrology.hpp"

#include <doctest.h>

using namespace edst;

TEST_CASE("unit ratios") {
  CHECK(units::kusz3.ratio() == ratio(1, 12));
  CHECK(units::gi.ratio() == ratio(1, 2));
  CHECK(units::nig2_kas7.ratio() == ratio(1, 4));
  CHECK(units::szu_bad.ratio() == ratio(1, 24));
  CHECK(units::gan2.ratio() == 100);
  CHECK(units::sze.ratio() == ratio(1, 10800));
  CHECK(units::gin2_ba_gin2.ratio() == ratio(1, 216000));
  CHECK(unit_ratio(units::ninda, units::kusz3) == 12);
  CHECK(unit_ratio(units::sar, units::gin2) == 60);
  CHECK(unit_ratio(units::gin2, units::sa10_ma_na) == 3);
}

TEST_CASE("unit spellings") {
  CHECK(find_unit("ninda-DU") == &units::ninda);
  CHECK(find_unit("samana") == &units::sa10_ma_na);
  CHECK(find_unit("kuš₃") == &units::kusz3);
  CHECK(find_unit("gin2-TA-bi") == &units::gin2_bi);
  CHECK(find_unit("furlong") == nullptr);
}

TEST_CASE("contexts") {
  CHECK(all_contexts().size() == 6);
  const auto& adab = context_lookup("CTX-SAR-ADAB");
  CHECK(adab.id == ContextId::sar_adab);
  CHECK(adab.dimension == Dimension::surface);
  CHECK(adab.smallest_unit().name == "sze");
  CHECK(adab.accepts(units::sar, FractionSign::half));
  CHECK(adab.accepts(units::gin2, FractionSign::quarter));
  CHECK_FALSE(adab.accepts(units::gin2, FractionSign::half));
  CHECK(context_lookup(ContextId::sar_zab).accepts(units::gin2, FractionSign::two_thirds));
  CHECK(context_lookup(ContextId::g).numeral_system == NumeralSystem::G);
  CHECK(context_lookup(ContextId::adab).contains(units::gi));
  CHECK_FALSE(context_lookup(ContextId::adab).contains(units::ninda));
  CHECK_THROWS_AS(context_lookup("CTX-NOPE"), ContextError);
  for (ContextId id : all_contexts()) CHECK(parse_context_id(to_string(id)) == id);
}

TEST_CASE("units in a context are strictly decreasing") {
  for (ContextId id : all_contexts()) {
    const auto& ctx = context_lookup(id);
    for (std::size_t i = 1; i < ctx.units.size(); ++i) CHECK(ctx.units[i - 1].unit->ratio() > ctx.units[i].unit->ratio());
  }
}

TEST_CASE("length to surface bridges") {
  CHECK(bridge_surface(length(10)) == surface(100));
  CHECK(bridge_surface(length(1)) == surface(1));
  CHECK(bridge_surface(length(ratio(1, 4))) == surface(ratio(1, 16)));
  CHECK_THROWS_AS(bridge_surface(surface(1)), DimensionError);
  for (const auto& b : attested_bridges()) CHECK(b.seed == bridge_surface(length(b.length_unit->ratio())));
}
