#pragma once

#include "edst/compound.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace edst {

enum class Qualifier { sag, sa2, ki, gan2 };
enum class Placement { before, after };

std::string_view to_string(Qualifier q);

struct QualifierMark {
  Qualifier qualifier;
  Placement placement;
  friend bool operator==(const QualifierMark&, const QualifierMark&) = default;
};

// Editorial state of one token as printed in the edition.
enum Mark : unsigned {
  mark_restored = 1u << 0,   // [ ]
  mark_damaged = 1u << 1,    // # or half brackets
  mark_inserted = 1u << 2,   // < >
  mark_deleted = 1u << 3,    // { }
  mark_emended = 1u << 4,    // X!(Y)
  mark_glossed = 1u << 5,    // (=2/3)
  mark_uncertain = 1u << 6,  // ?
};

struct Token {
  std::string text;  // reading after markers are removed
  std::size_t offset = 0;
  unsigned marks = 0;
};

struct MeasureExpression {
  ContextId context = ContextId::ed3a;
  CompoundValue value;
  std::vector<QualifierMark> qualifiers;
  std::vector<Token> tokens;
  std::string raw;
  bool reordered = false;       // a unit or fraction stood before its count
  bool units_inferred = false;  // some unit was supplied from the context

  bool has_mark(unsigned mark) const;
};

// Folds Unicode transliteration to the ASCII convention (sz, subscript digits
// as plain digits, as for asz).
std::string fold_ascii(std::string_view text);

// Throws ParseError with a byte offset into text. Lenient mode additionally
// supplies missing unit words from the context, as some tablet lines omit them.
MeasureExpression parse_measure(std::string_view text, const MetrologicalContext& ctx,
                                ParseMode mode = ParseMode::strict);

enum class Script { ascii, unicode };
enum class Notation { translit, arabic };

struct RenderConventions {
  Script script = Script::ascii;
  Notation notation = Notation::translit;
  bool show_brackets = false;  // wrap restored pieces in [ ]
  bool force_units = false;    // write heading units out
};

std::string render_measure(const MeasureExpression& expr, const RenderConventions& conv = {});
std::string render_value(const CompoundValue& value, const MetrologicalContext& ctx,
                         const RenderConventions& conv = {},
                         const std::vector<QualifierMark>& qualifiers = {});

// render_measure(parse_measure(text)). Idempotent.
std::string normalize(std::string_view text, const MetrologicalContext& ctx,
                      ParseMode mode = ParseMode::strict);

// ASCII translit to Unicode: sz to š, trailing index digits to subscripts, as to aš.
std::string to_unicode(std::string_view ascii);

}  // namespace edst
