#pragma once

#include "edst/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edst {

// S counts discrete things and lengths; G counts surfaces in iku.
enum class NumeralSystem { S, G };

// Multipliers written after a run of szar signs in System G.
enum class Tier { plain, gal, kid };

enum class SignId : std::uint8_t {
  s_as, s_disz, s_u, s_gesz2, s_geszu, s_szar2, s_szaru,
  g_quarter, g_ubu, g_iku, g_esze3, g_bur3, g_buru, g_szar2, g_szaru,
};

struct NumeralSign {
  SignId id;
  NumeralSystem system;
  std::string_view name;
  std::int64_t num;
  std::int64_t den;
  bool tiered;  // may carry gal or KID
};

const NumeralSign& sign_info(SignId id);
std::span<const NumeralSign> signs_of(NumeralSystem system);
std::optional<SignId> find_sign(std::string_view name, NumeralSystem system);
Rational sign_value(SignId id, Tier tier = Tier::plain);
std::string_view to_string(NumeralSystem system);
std::string_view to_string(Tier tier);

struct NumeralTerm {
  SignId sign;
  Tier tier = Tier::plain;
  std::uint64_t repetition = 1;

  Rational value() const { return sign_value(sign, tier) * repetition; }
  friend bool operator==(const NumeralTerm&, const NumeralTerm&) = default;
};

// Terms in each part are ordered by strictly decreasing sign value. A non-empty
// subtrahend marks a "positive la2 subtrahend" numeral.
struct NumeralExpr {
  NumeralSystem system = NumeralSystem::S;
  std::vector<NumeralTerm> positive;
  std::vector<NumeralTerm> subtrahend;

  friend bool operator==(const NumeralExpr&, const NumeralExpr&) = default;
};

// The sign used for a single unit in System S. The tablets write counts of
// some units with disz and others with as; both are worth one.
enum class OneSign { as, disz };

struct NumeralStyle {
  bool subtractive_nine = false;  // write n with n % 10 == 9 as (n+1) la2 1
  OneSign one_sign = OneSign::as;
};

enum class ParseMode { strict, lenient };

Rational decode_numeral(const NumeralExpr& expr, NumeralSystem system);
inline Rational decode_numeral(const NumeralExpr& expr) { return decode_numeral(expr, expr.system); }

// Greedy canonical form. Throws NumeralError for n <= 0 or values the system
// cannot write (non-integers in S, non-multiples of 1/4 in G).
NumeralExpr encode_canonical(const Rational& n, NumeralSystem system, NumeralStyle style = {});

// Throws ParseError with the byte offset of the offending token. Lenient mode
// accepts signs written out of order, as on some damaged or nonstandard lines,
// and normalizes them into decreasing order.
NumeralExpr parse_numeral(std::string_view text, NumeralSystem system, ParseMode mode = ParseMode::strict);

std::string render_numeral(const NumeralExpr& expr);

// Throws NumeralError if the expression breaks its invariants.
void validate(const NumeralExpr& expr);

enum class FractionSign { third, half, two_thirds, quarter };

Rational fraction_value(FractionSign f);
std::string_view fraction_label(FractionSign f);  // "1/3", "1/2", "2/3", "igi-4"
std::optional<FractionSign> parse_fraction_sign(std::string_view text);

}  // namespace edst
