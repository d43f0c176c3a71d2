#include "edst/procedures.hpp"

#include "edst/errors.hpp"
#include "text.hpp"

namespace edst {

Quantity square_area(const Quantity& side) { return bridge_surface(side); }

Quantity rect_area(const Quantity& front, const Quantity& ground) {
  if (front.dimension != Dimension::length || ground.dimension != Dimension::length)
    throw DimensionError("a rectangle needs two lengths");
  return surface(front.magnitude * ground.magnitude);
}

namespace {

std::string iku_notation(const Quantity& area) {
  Rational iku = area.magnitude / 100;
  if (iku > 0 && is_integer(iku * 4)) return render_numeral(encode_canonical(iku, NumeralSystem::G));
  return to_string(area);
}

BorderPiece border_piece(std::string kind, const Rational& l, const Rational& w) {
  BorderPiece p{std::move(kind), length(l), length(w), surface(l * w), {}};
  p.description = iku_notation(p.area);
  return p;
}

}  // namespace

std::vector<BorderStep> bordering_sequence(std::span<const Quantity> sides, const Quantity& band) {
  if (band.dimension != Dimension::length || band.magnitude <= 0) throw DimensionError("band must be a positive length");
  std::vector<BorderStep> steps;
  Rational previous = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (sides[i].dimension != Dimension::length) throw DimensionError("sides must be lengths");
    if (sides[i].magnitude != band.magnitude * (i + 1))
      throw SchemeError("side " + to_string(sides[i]) + " is not " + std::to_string(i + 1) + " bands");
    BorderStep step{length(previous), sides[i], {}, square_area(sides[i])};
    if (previous == 0) {
      step.pieces.push_back(border_piece("seed", band.magnitude, band.magnitude));
    } else {
      step.pieces.push_back(border_piece("strip", previous, band.magnitude));
      step.pieces.push_back(border_piece("strip", previous, band.magnitude));
      step.pieces.push_back(border_piece("corner", band.magnitude, band.magnitude));
    }
    steps.push_back(std::move(step));
    previous = sides[i].magnitude;
  }
  return steps;
}

std::vector<BorderStep> bordering_derivation(const Quantity& side) {
  if (side.dimension != Dimension::length) throw DimensionError("side must be a length");
  const Rational& s = side.magnitude;
  if (s == 5) {
    // A quarter of the ten-ninda square.
    BorderStep step{length(0), side, {border_piece("seed", 5, 5)}, square_area(side)};
    return {step};
  }
  Rational band;
  if (s >= 10 && s <= 50 && is_integer(s / 10))
    band = 10;
  else if (s >= 60 && s <= 600 && is_integer(s / 60))
    band = 60;
  else
    throw SchemeError("no bordering ladder reaches " + to_string(side));
  std::vector<Quantity> sides;
  for (Rational x = band; x <= s; x += band) sides.push_back(length(x));
  return bordering_sequence(sides, length(band));
}

Quantity CutPasteScheme::total() const {
  Rational sum = 0;
  const Rational r = unit->ratio();
  for (const SchemePiece& p : pieces) {
    Rational a = p.width * p.height * r * r;
    sum += p.sign == SegmentSign::plus ? a : Rational(-a);
  }
  return surface(sum);
}

CutPasteScheme parse_scheme(std::string_view text, const Unit& unit) {
  if (unit.dimension != Dimension::length) throw DimensionError("scheme dimensions must be lengths");
  CutPasteScheme scheme;
  scheme.unit = &unit;
  for (const auto& w : detail::split_words(text)) {
    std::string_view t = w.text;
    SchemePiece p;
    if (t.front() == '+' || t.front() == '-') {
      p.sign = t.front() == '+' ? SegmentSign::plus : SegmentSign::minus;
      t.remove_prefix(1);
    } else {
      throw ParseError(w.begin, "scheme piece must start with + or -");
    }
    auto x = t.find('x');
    if (x == std::string_view::npos) throw ParseError(w.begin, "scheme piece must be WxH");
    try {
      p.width = parse_rational(t.substr(0, x));
      p.height = parse_rational(t.substr(x + 1));
    } catch (const ParseError& e) {
      throw ParseError(w.begin, e.message());
    }
    if (p.width <= 0 || p.height <= 0) throw ParseError(w.begin, "scheme dimensions must be positive");
    scheme.pieces.push_back(p);
  }
  if (scheme.pieces.empty()) throw ParseError(0, "empty scheme");
  return scheme;
}

std::string render_scheme(const CutPasteScheme& scheme) {
  std::string out;
  for (const SchemePiece& p : scheme.pieces) {
    if (!out.empty()) out += ' ';
    out += p.sign == SegmentSign::plus ? '+' : '-';
    out += to_string(p.width) + "x" + to_string(p.height);
  }
  return out;
}

CompoundValue cutpaste_derive(const Quantity& side, const CutPasteScheme& scheme, const MetrologicalContext& ctx) {
  const Quantity target = square_area(side);
  if (scheme.total() != target)
    throw SchemeError("scheme covers " + to_string(scheme.total()) + ", the square is " + to_string(target));
  if (scheme.pieces.empty() || scheme.pieces.front().sign != SegmentSign::plus)
    throw SchemeError("scheme must start with a positive piece");
  const Rational r = scheme.unit->ratio();
  CompoundValue v;
  std::vector<Rational> sums;
  for (const SchemePiece& p : scheme.pieces) {
    if (v.segments.empty() || v.segments.back().sign != p.sign) {
      v.segments.push_back({p.sign, {}});
      sums.push_back(0);
    }
    sums.back() += p.width * p.height * r * r;
  }
  for (std::size_t i = 0; i < sums.size(); ++i) v.segments[i].pieces = decompose_pieces(sums[i], ctx);
  return v;
}

CompoundValue fraction_of_sar(std::uint64_t p, std::uint64_t q) {
  if (p == 0 || q == 0) throw ArithmeticError("fraction of a sar needs positive p and q");
  return decompose_canonical(surface(Rational(p, q)), context_lookup(ContextId::sar_zab), {&units::gin2});
}

SexagesimalSeed seed_square(const Unit& subunit) {
  const auto& zab = context_lookup(ContextId::sar_zab);
  auto seed_of = [&](const Unit& u, const Quantity& s) {
    return SexagesimalSeed{&u, s, decompose_canonical(s, zab, {&units::gin2})};
  };
  if (&subunit == &units::ninda) return {&units::ninda, surface(1), decompose_canonical(surface(1), zab)};
  if (&subunit == &units::nig2_kas7) return {&subunit, surface(Rational(1, 16)), fraction_of_sar(1, 16)};
  if (&subunit == &units::kusz3_numun) return {&subunit, surface(Rational(1, 36)), fraction_of_sar(1, 36)};
  // Half the side, a quarter of the square.
  if (&subunit == &units::gisz_bad) return seed_of(subunit, seed_square(units::kusz3_numun).surface * Rational(1, 4));
  if (&subunit == &units::szu_bad) return seed_of(subunit, seed_square(units::gisz_bad).surface * Rational(1, 4));
  throw SchemeError("no seed square for " + std::string(subunit.name));
}

Quantity scale_seed_value(const SexagesimalSeed& seed, std::uint64_t k, ScaleMethod method) {
  if (k == 0) throw ArithmeticError("a square needs a positive side");
  if (method == ScaleMethod::multiplication) return seed.surface * Rational(k * k);
  Quantity sum = surface(0);
  for (std::uint64_t i = 0; i < k * k; ++i) sum = sum + seed.surface;
  return sum;
}

CompoundValue scale_seed(const SexagesimalSeed& seed, std::uint64_t k, const MetrologicalContext& ctx) {
  return decompose_canonical(scale_seed_value(seed, k), ctx);
}

std::optional<CompoundValue> subtractive_form(const Quantity& q, const MetrologicalContext& ctx) {
  if (q.dimension != ctx.dimension || ctx.numeral_system != NumeralSystem::S) return std::nullopt;
  std::size_t best = decompose_pieces(q.magnitude, ctx).size();
  std::optional<CompoundValue> found;
  for (const UnitStyle& style : ctx.units) {
    std::vector<Rational> steps{style.unit->ratio()};
    for (FractionSign f : style.fractions) steps.push_back(style.unit->ratio() * fraction_value(f));
    for (const Rational& step : steps) {
      Rational anchor = Rational(floor_of(q.magnitude / step) + 1) * step;
      Rational deficit = anchor - q.magnitude;
      try {
        auto top = decompose_pieces(anchor, ctx);
        auto cut = decompose_pieces(deficit, ctx);
        if (top.size() + cut.size() <= best && (!found || top.size() + cut.size() < best)) {
          best = top.size() + cut.size();
          CompoundValue v;
          v.segments.push_back({SegmentSign::plus, std::move(top)});
          v.segments.push_back({SegmentSign::minus, std::move(cut)});
          found = std::move(v);
        }
      } catch (const RepresentationError&) {
      }
    }
  }
  return found;
}

std::span<const RedundancyClass> redundancy_classes() {
  using namespace units;
  static const std::vector<RedundancyClass> table{
      {{1, &gisz_bad}, {2, &szu_bad}},
      {{1, &kusz3_numun}, {2, &gisz_bad}, {4, &szu_bad}},
      {{1, &nig2_kas7}, {3, &gisz_bad}, {6, &szu_bad}},
      {{2, &kusz3_numun}, {4, &gisz_bad}, {8, &szu_bad}},
      {{5, &gisz_bad}, {10, &szu_bad}},
      {{2, &nig2_kas7}, {3, &kusz3_numun}, {6, &gisz_bad}},
      {{4, &kusz3_numun}, {8, &gisz_bad}},
      {{3, &nig2_kas7}, {9, &gisz_bad}},
      {{5, &kusz3_numun}, {10, &gisz_bad}},
      {{1, &ninda}, {4, &nig2_kas7}, {6, &kusz3_numun}},
      {{6, &nig2_kas7}, {9, &kusz3_numun}},
      {{2, &ninda}, {8, &nig2_kas7}},
  };
  return table;
}

}  // namespace edst
