#include "edst/metrology.hpp"

#include "edst/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace edst {

namespace units {
const Unit ninda{"ninda-DU", Dimension::length, 1, 1, "ninda"};
const Unit gi{"gi", Dimension::length, 1, 2, "gi"};
const Unit kusz3{"kusz3", Dimension::length, 1, 12, "kusz3"};
const Unit ur2_hal_la{"ur2-hal-la", Dimension::length, 1, 4, "ur2-hal-la"};
const Unit kusz3_numun{"kusz3-numun", Dimension::length, 1, 6, "kusz3-numun"};
const Unit nig2_kas7{"nig2-kas7", Dimension::length, 1, 4, "nig2-kas7"};
const Unit gisz_bad{"gisz-bad", Dimension::length, 1, 12, "gisz-bad"};
const Unit szu_bad{"szu-bad", Dimension::length, 1, 24, "szu-bad"};

const Unit gan2{"GAN2", Dimension::surface, 100, 1, "iku"};
const Unit sar{"sar", Dimension::surface, 1, 1, "sar"};
const Unit gin2{"gin2", Dimension::surface, 1, 60, "gin2"};
const Unit sa10_ma_na{"sa10-ma-na", Dimension::surface, 1, 180, "samana"};
const Unit sze{"sze", Dimension::surface, 1, 10800, "sze"};
const Unit gin2_bi{"gin2-bi", Dimension::surface, 1, 3600, "gin2-bi"};
const Unit gin2_ba_gin2{"gin2-ba-gin2", Dimension::surface, 1, 216000, "gin2-ba-gin2"};
}  // namespace units

namespace {

const std::array<const Unit*, 15> unit_list{
    &units::ninda,  &units::gi,   &units::kusz3, &units::ur2_hal_la, &units::kusz3_numun,
    &units::nig2_kas7, &units::gisz_bad, &units::szu_bad, &units::gan2, &units::sar,
    &units::gin2,   &units::sa10_ma_na, &units::sze, &units::gin2_bi, &units::gin2_ba_gin2,
};

struct UnitAlias {
  std::string_view spelling;
  const Unit* unit;
};

const std::array unit_aliases{
    UnitAlias{"ninda", &units::ninda},
    UnitAlias{"ninda-du", &units::ninda},
    UnitAlias{"ninda2", &units::ninda},
    UnitAlias{"gi", &units::gi},
    UnitAlias{"kusz3", &units::kusz3},
    UnitAlias{"kusz", &units::kusz3},
    UnitAlias{"ur2-hal-la", &units::ur2_hal_la},
    UnitAlias{"kusz3-numun", &units::kusz3_numun},
    UnitAlias{"nig2-kas7", &units::nig2_kas7},
    UnitAlias{"nikkas", &units::nig2_kas7},
    UnitAlias{"gisz-bad", &units::gisz_bad},
    UnitAlias{"szu-bad", &units::szu_bad},
    UnitAlias{"gan2", &units::gan2},
    UnitAlias{"iku", &units::gan2},
    UnitAlias{"sar", &units::sar},
    UnitAlias{"gin2", &units::gin2},
    UnitAlias{"gin", &units::gin2},
    UnitAlias{"sa10-ma-na", &units::sa10_ma_na},
    UnitAlias{"samana", &units::sa10_ma_na},
    UnitAlias{"sa10", &units::sa10_ma_na},
    UnitAlias{"sze", &units::sze},
    UnitAlias{"gin2-bi", &units::gin2_bi},
    UnitAlias{"gin2-ta-bi", &units::gin2_bi},
    UnitAlias{"gin2-bi-ta", &units::gin2_bi},
    UnitAlias{"gin-bi", &units::gin2_bi},
    UnitAlias{"gin2-ba-gin2", &units::gin2_ba_gin2},
    UnitAlias{"ba-gin2-gin2", &units::gin2_ba_gin2},
    UnitAlias{"gin2-ba-gin2-ta", &units::gin2_ba_gin2},
    UnitAlias{"gba", &units::gin2_ba_gin2},
};

using F = FractionSign;

std::vector<MetrologicalContext> build_contexts() {
  const std::vector<F> thirds{F::two_thirds, F::half, F::third};
  std::vector<MetrologicalContext> c;
  c.push_back({ContextId::ed3a,
               Dimension::length,
               NumeralSystem::S,
               {{&units::ninda}, {&units::ur2_hal_la}, {&units::kusz3_numun}},
               &units::ninda,
               true,
               false,
               ContextId::g});
  c.push_back({ContextId::adab,
               Dimension::length,
               NumeralSystem::S,
               {{&units::gi}, {&units::kusz3}},
               nullptr,
               false,
               true,
               ContextId::sar_adab});
  c.push_back({ContextId::zab,
               Dimension::length,
               NumeralSystem::S,
               {{&units::ninda}, {&units::nig2_kas7}, {&units::kusz3_numun}, {&units::gisz_bad}, {&units::szu_bad}},
               &units::ninda,
               true,
               false,
               ContextId::sar_zab});
  c.push_back({ContextId::g, Dimension::surface, NumeralSystem::G, {{&units::gan2}}, &units::gan2, true, false,
               ContextId::ed3a});
  c.push_back({ContextId::sar_adab,
               Dimension::surface,
               NumeralSystem::S,
               {{&units::sar, thirds, {}, false, OneSign::as},
                {&units::gin2, {}, {F::quarter}, true, OneSign::disz},
                {&units::sa10_ma_na, {}, {}, false, OneSign::as},
                {&units::sze, {}, {}, false, OneSign::disz}},
               nullptr,
               false,
               true,
               ContextId::adab});
  c.push_back({ContextId::sar_zab,
               Dimension::surface,
               NumeralSystem::S,
               {{&units::sar, thirds, {}, false, OneSign::as},
                {&units::gin2, thirds, {}, false, OneSign::as},
                {&units::gin2_bi},
                {&units::gin2_ba_gin2}},
               nullptr,
               false,
               true,
               ContextId::zab});
  return c;
}

const std::vector<MetrologicalContext>& contexts() {
  static const std::vector<MetrologicalContext> all = build_contexts();
  return all;
}

constexpr std::array<ContextId, 6> context_ids{ContextId::ed3a, ContextId::adab,     ContextId::zab,
                                               ContextId::g,    ContextId::sar_adab, ContextId::sar_zab};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

std::span<const Unit* const> all_units() { return unit_list; }

const Unit* find_unit(std::string_view name) {
  std::string n = lower(detail::fold_with_offsets(name).text);
  for (const UnitAlias& a : unit_aliases)
    if (a.spelling == n) return a.unit;
  return nullptr;
}

Rational unit_ratio(const Unit& a, const Unit& b) {
  if (a.dimension != b.dimension)
    throw DimensionError(std::string(a.name) + " and " + std::string(b.name) + " measure different things");
  return a.ratio() / b.ratio();
}

std::string_view to_string(ContextId id) {
  switch (id) {
    case ContextId::ed3a: return "CTX-ED3A";
    case ContextId::adab: return "CTX-ADAB";
    case ContextId::zab: return "CTX-ZAB";
    case ContextId::g: return "CTX-G";
    case ContextId::sar_adab: return "CTX-SAR-ADAB";
    case ContextId::sar_zab: return "CTX-SAR-ZAB";
  }
  return "";
}

std::optional<ContextId> parse_context_id(std::string_view text) {
  for (ContextId id : context_ids)
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::span<const ContextId> all_contexts() { return context_ids; }

const UnitStyle* MetrologicalContext::style_for(const Unit& u) const {
  for (const UnitStyle& s : units)
    if (s.unit == &u) return &s;
  return nullptr;
}

NumeralStyle MetrologicalContext::numeral_style(const Unit& u) const {
  const UnitStyle* s = style_for(u);
  return {subtractive_nine, s ? s->one_sign : OneSign::as};
}

bool MetrologicalContext::accepts(const Unit& u, FractionSign f) const {
  const UnitStyle* s = style_for(u);
  if (!s) return false;
  return std::find(s->fractions.begin(), s->fractions.end(), f) != s->fractions.end() ||
         std::find(s->accepted.begin(), s->accepted.end(), f) != s->accepted.end();
}

const MetrologicalContext& context_lookup(ContextId id) { return contexts()[static_cast<std::size_t>(id)]; }

const MetrologicalContext& context_lookup(std::string_view id) {
  auto parsed = parse_context_id(id);
  if (!parsed) throw ContextError("unknown context '" + std::string(id) + "'");
  return context_lookup(*parsed);
}

Quantity bridge_surface(const Quantity& side) {
  if (side.dimension != Dimension::length) throw DimensionError("the side of a square must be a length");
  return surface(side.magnitude * side.magnitude);
}

std::span<const BridgeRelation> attested_bridges() {
  static const std::vector<BridgeRelation> relations = [] {
    std::vector<BridgeRelation> r;
    for (const Unit* u : {&units::ninda, &units::gi, &units::kusz3, &units::ur2_hal_la, &units::kusz3_numun,
                          &units::nig2_kas7, &units::gisz_bad, &units::szu_bad})
      r.push_back({u, surface(u->ratio() * u->ratio())});
    return r;
  }();
  return relations;
}

}  // namespace edst
