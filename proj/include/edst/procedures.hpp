#pragma once

#include "edst/compound.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edst {

Quantity square_area(const Quantity& side);
Quantity rect_area(const Quantity& front, const Quantity& ground);

struct BorderPiece {
  std::string kind;  // "seed", "strip" or "corner"
  Quantity length;
  Quantity width;
  Quantity area;
  std::string description;  // System G notation of the area, e.g. "2(bur3)"
};

struct BorderStep {
  Quantity from_side;
  Quantity to_side;
  std::vector<BorderPiece> pieces;
  Quantity total;  // square on to_side
};

// Grows a square band by band. sides must be band, 2*band, ...; the first
// step lays the band-sized seed square.
std::vector<BorderStep> bordering_sequence(std::span<const Quantity> sides, const Quantity& band);

// Steps deriving one tabulated side: 10-ninda bands below one gesz2, 60-ninda
// bands from one gesz2 to one gesz'u, and the 5-ninda quarter-iku seed.
std::vector<BorderStep> bordering_derivation(const Quantity& side);

struct SchemePiece {
  SegmentSign sign = SegmentSign::plus;
  Rational width;   // in the scheme unit
  Rational height;
};

// A side's square written as signed rectangles, as the scribe of the
// kusz3 table must have laid them out to reach its notation.
struct CutPasteScheme {
  const Unit* unit = &units::kusz3;
  std::vector<SchemePiece> pieces;

  Quantity total() const;
};

// "+12x6 -4x2", dimensions exact rationals in the scheme unit.
CutPasteScheme parse_scheme(std::string_view text, const Unit& unit = units::kusz3);
std::string render_scheme(const CutPasteScheme& scheme);

// Consecutive pieces of equal sign form one segment; each segment is written
// canonically. Throws SchemeError unless the pieces sum to side squared.
CompoundValue cutpaste_derive(const Quantity& side, const CutPasteScheme& scheme,
                              const MetrologicalContext& ctx = context_lookup(ContextId::sar_adab));

// p/q sar written in gin2 and its sexagesimal sub-units.
CompoundValue fraction_of_sar(std::uint64_t p, std::uint64_t q);

struct SexagesimalSeed {
  const Unit* subunit;
  Quantity surface;
  CompoundValue notation;
};

// Square on one subunit, reached through the fraction table (nig2-kas7,
// kusz3-numun) and by quartering (gisz-bad, szu-bad).
SexagesimalSeed seed_square(const Unit& subunit);

enum class ScaleMethod { repeated_addition, multiplication };

// Square on k subunits as k*k copies of the seed.
Quantity scale_seed_value(const SexagesimalSeed& seed, std::uint64_t k,
                          ScaleMethod method = ScaleMethod::repeated_addition);
CompoundValue scale_seed(const SexagesimalSeed& seed, std::uint64_t k,
                         const MetrologicalContext& ctx = context_lookup(ContextId::sar_zab));

// Optional "round value la2 deficit" spelling, when it needs no more pieces
// than the additive form. Not used to reproduce the tablets.
std::optional<CompoundValue> subtractive_form(const Quantity& q, const MetrologicalContext& ctx);

struct LengthTerm {
  std::uint64_t count;
  const Unit* unit;
};

// Lengths written in several sub-tables under different units.
using RedundancyClass = std::vector<LengthTerm>;
std::span<const RedundancyClass> redundancy_classes();

}  // namespace edst
