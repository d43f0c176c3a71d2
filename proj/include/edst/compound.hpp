#pragma once

#include "edst/metrology.hpp"

#include <optional>
#include <vector>

namespace edst {

struct Piece {
  Rational count;                      // integer, except iku counts in System G
  std::optional<NumeralExpr> numeral;  // as written, when it was written
  std::optional<FractionSign> fraction;
  const Unit* unit = nullptr;
  bool unit_explicit = true;
  bool restored = false;

  Rational units() const;  // count plus fraction
  Rational value() const;  // in the base unit
};

enum class SegmentSign { plus, minus };

struct Segment {
  SegmentSign sign = SegmentSign::plus;
  std::vector<Piece> pieces;
};

// seg1 la2 seg2 + seg3 ... The first segment is always positive.
struct CompoundValue {
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  std::size_t piece_count() const;
};

// Throws ContextError if a piece uses a unit outside ctx and ArithmeticError
// if the signed total is negative.
Quantity evaluate(const CompoundValue& value, const MetrologicalContext& ctx);

struct DecomposeOptions {
  const Unit* start_unit = nullptr;  // skip units larger than this one
};

// Additive greedy decomposition. Throws RepresentationError when the value is
// zero or leaves a residue below the smallest unit.
CompoundValue decompose_canonical(const Quantity& q, const MetrologicalContext& ctx,
                                  const DecomposeOptions& options = {});

// Decomposition of a single segment total, shared by the subtractive forms.
std::vector<Piece> decompose_pieces(const Rational& magnitude, const MetrologicalContext& ctx,
                                    const DecomposeOptions& options = {});

}  // namespace edst
