#pragma once

#include "edst/numerals.hpp"
#include "edst/quantity.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace edst {

struct Unit {
  std::string_view name;
  Dimension dimension;
  std::int64_t num;  // size in the base unit, as num/den
  std::int64_t den;
  std::string_view gloss;  // name used in arabic renderings

  Rational ratio() const { return Rational(num, den); }
};

namespace units {
extern const Unit ninda, gi, kusz3, ur2_hal_la, kusz3_numun, nig2_kas7, gisz_bad, szu_bad;
extern const Unit gan2, sar, gin2, sa10_ma_na, sze, gin2_bi, gin2_ba_gin2;
}  // namespace units

std::span<const Unit* const> all_units();

// Resolves spellings and scribal variants ("samana", "gin2-TA-bi", ...).
const Unit* find_unit(std::string_view name);

// How many b make one a.
Rational unit_ratio(const Unit& a, const Unit& b);

enum class ContextId { ed3a, adab, zab, g, sar_adab, sar_zab };

std::string_view to_string(ContextId id);
std::optional<ContextId> parse_context_id(std::string_view text);

struct UnitStyle {
  const Unit* unit;
  std::vector<FractionSign> fractions;  // emitted additively, largest first
  std::vector<FractionSign> accepted;   // also accepted on parse
  bool closing_quarter = false;         // igi-4 only where it closes the value
  OneSign one_sign = OneSign::as;
};

struct MetrologicalContext {
  ContextId id;
  Dimension dimension;
  NumeralSystem numeral_system;
  std::vector<UnitStyle> units;  // strictly decreasing size
  const Unit* heading_unit;      // unit of bare numerals, or null
  bool unit_in_heading;          // a lone heading-unit value is written without its name
  bool subtractive_nine;
  ContextId partner;

  const UnitStyle* style_for(const Unit& u) const;
  bool contains(const Unit& u) const { return style_for(u) != nullptr; }
  const Unit& smallest_unit() const { return *units.back().unit; }
  NumeralStyle numeral_style(const Unit& u) const;
  bool accepts(const Unit& u, FractionSign f) const;
};

const MetrologicalContext& context_lookup(ContextId id);
// Throws ContextError for unknown ids.
const MetrologicalContext& context_lookup(std::string_view id);
std::span<const ContextId> all_contexts();

// Area of the square on a side. Throws DimensionError unless side is a length.
Quantity bridge_surface(const Quantity& side);

struct BridgeRelation {
  const Unit* length_unit;
  Quantity seed;  // surface of the square on one length_unit
};

// The relations the tables use: 1 ninda squared is 1 sar, and so on down.
std::span<const BridgeRelation> attested_bridges();

}  // namespace edst
