#include "edst/compound.hpp"
#include "edst/errors.hpp"
#include "edst/quantity.hpp"

namespace edst {

std::string_view to_string(Dimension d) { return d == Dimension::length ? "length" : "surface"; }

std::string_view base_unit_name(Dimension d) { return d == Dimension::length ? "ninda" : "sar"; }

namespace {

void same_dimension(const Quantity& a, const Quantity& b) {
  if (a.dimension != b.dimension)
    throw DimensionError("cannot combine a " + std::string(to_string(a.dimension)) + " with a " +
                         std::string(to_string(b.dimension)));
}

}  // namespace

Quantity add(const Quantity& a, const Quantity& b) {
  same_dimension(a, b);
  return {a.dimension, a.magnitude + b.magnitude};
}

Quantity subtract(const Quantity& a, const Quantity& b) {
  same_dimension(a, b);
  if (b.magnitude > a.magnitude) throw ArithmeticError("subtraction leaves a negative " + std::string(to_string(a.dimension)));
  return {a.dimension, a.magnitude - b.magnitude};
}

Quantity scale(const Quantity& q, const Rational& k) {
  if (k < 0) throw ArithmeticError("negative scale factor");
  return {q.dimension, q.magnitude * k};
}

bool less(const Quantity& a, const Quantity& b) {
  same_dimension(a, b);
  return a.magnitude < b.magnitude;
}

std::string to_string(const Quantity& q) { return to_string(q.magnitude) + " " + std::string(base_unit_name(q.dimension)); }

Rational Piece::units() const {
  Rational u = count;
  if (fraction) u += fraction_value(*fraction);
  return u;
}

Rational Piece::value() const { return units() * unit->ratio(); }

std::size_t CompoundValue::piece_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.pieces.size();
  return n;
}

Quantity evaluate(const CompoundValue& value, const MetrologicalContext& ctx) {
  Rational total = 0;
  for (const Segment& seg : value.segments) {
    Rational sum = 0;
    for (const Piece& p : seg.pieces) {
      if (!p.unit) throw ContextError("piece without a unit");
      if (!ctx.contains(*p.unit))
        throw ContextError(std::string(p.unit->name) + " is not a unit of " + std::string(to_string(ctx.id)));
      sum += p.value();
    }
    total += seg.sign == SegmentSign::plus ? sum : Rational(-sum);
  }
  if (total < 0) throw ArithmeticError("value is negative");
  return {ctx.dimension, total};
}

namespace {

// Greedy, backing off a few counts of a unit when the units below cannot
// absorb the rest (a quarter and a sixth of a ninda do not nest).
Rational gcd_of(const Rational& a, const Rational& b) {
  if (a == 0) return b;
  Integer n = gcd(numerator(a) * denominator(b), numerator(b) * denominator(a));
  return Rational(n, denominator(a) * denominator(b));
}

// Finest step the units from i down can still make.
Rational grain(const MetrologicalContext& ctx, std::size_t i) {
  Rational g = 0;
  for (; i < ctx.units.size(); ++i) {
    const UnitStyle& s = ctx.units[i];
    g = gcd_of(g, s.unit->ratio());
    for (FractionSign f : s.fractions) g = gcd_of(g, s.unit->ratio() * fraction_value(f));
    if (s.closing_quarter) g = gcd_of(g, s.unit->ratio() / 4);
  }
  return g;
}

bool fill(const MetrologicalContext& ctx, std::size_t i, const Rational& rest, std::vector<Piece>& pieces) {
  if (rest == 0) return true;
  if (i == ctx.units.size() || !is_integer(rest / grain(ctx, i))) return false;
  const UnitStyle& style = ctx.units[i];
  const Rational size = style.unit->ratio();
  const Integer most = floor_of(rest / size);
  for (Integer n = most; n >= 0 && most - n <= 12; --n) {
    Rational left = rest - Rational(n) * size;
    std::vector<std::optional<FractionSign>> options;
    for (FractionSign f : style.fractions)
      if (fraction_value(f) * size <= left) options.push_back(f);
    if (style.closing_quarter && left == size / 4) options.push_back(FractionSign::quarter);
    options.push_back(std::nullopt);
    for (const auto& f : options) {
      Piece p;
      p.unit = style.unit;
      p.count = Rational(n);
      p.fraction = f;
      Rational after = f ? Rational(left - fraction_value(*f) * size) : left;
      bool used = n > 0 || f;
      if (used) pieces.push_back(p);
      if (fill(ctx, i + 1, after, pieces)) return true;
      if (used) pieces.pop_back();
    }
  }
  return false;
}

}  // namespace

std::vector<Piece> decompose_pieces(const Rational& magnitude, const MetrologicalContext& ctx,
                                    const DecomposeOptions& options) {
  if (magnitude <= 0) throw RepresentationError("zero and negative values have no notation");
  std::size_t first = 0;
  if (options.start_unit) {
    while (first < ctx.units.size() && ctx.units[first].unit != options.start_unit) ++first;
    if (first == ctx.units.size())
      throw ContextError(std::string(options.start_unit->name) + " is not a unit of " + std::string(to_string(ctx.id)));
  }
  std::vector<Piece> pieces;
  if (ctx.numeral_system == NumeralSystem::G) {
    Piece p;
    p.unit = ctx.units[first].unit;
    p.count = magnitude / p.unit->ratio();
    if (!is_integer(p.count * 4))
      throw RepresentationError(to_string(magnitude) + " sar is not a whole number of quarter iku");
    pieces.push_back(p);
    return pieces;
  }
  if (!fill(ctx, first, magnitude, pieces))
    throw RepresentationError(to_string(magnitude) + " " + std::string(base_unit_name(ctx.dimension)) +
                              " leaves a residue below " + std::string(ctx.smallest_unit().name));
  return pieces;
}

CompoundValue decompose_canonical(const Quantity& q, const MetrologicalContext& ctx, const DecomposeOptions& options) {
  if (q.dimension != ctx.dimension)
    throw DimensionError(std::string(to_string(ctx.id)) + " measures " + std::string(to_string(ctx.dimension)));
  CompoundValue v;
  v.segments.push_back({SegmentSign::plus, decompose_pieces(q.magnitude, ctx, options)});
  auto& pieces = v.segments.front().pieces;
  if (ctx.unit_in_heading && pieces.size() == 1 && pieces.front().unit == ctx.heading_unit)
    pieces.front().unit_explicit = false;
  return v;
}

}  // namespace edst
