#include "edst/translit.hpp"

#include "edst/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <cctype>

namespace edst {

std::string_view to_string(Qualifier q) {
  switch (q) {
    case Qualifier::sag: return "sag";
    case Qualifier::sa2: return "sa2";
    case Qualifier::ki: return "ki";
    case Qualifier::gan2: return "GAN2";
  }
  return "";
}

bool MeasureExpression::has_mark(unsigned mark) const {
  return std::any_of(tokens.begin(), tokens.end(), [&](const Token& t) { return (t.marks & mark) != 0; });
}

std::string fold_ascii(std::string_view text) {
  std::string out = detail::fold_with_offsets(text).text;
  std::erase_if(out, [](char c) { return c == '\x01' || c == '\x02'; });
  return out;
}

namespace {

enum class Kind { numeral, tier, bare, fraction, unit, qualifier, la2, plus };

struct Lexeme {
  Kind kind;
  Token token;
  const Unit* unit = nullptr;
  Qualifier qualifier = Qualifier::sag;
  FractionSign fraction = FractionSign::third;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// count(sign) or k/d(iku).
bool numeral_shape(std::string_view w) {
  auto open = w.find('(');
  if (open == 0 || open == std::string_view::npos || w.back() != ')') return false;
  std::string_view count = w.substr(0, open);
  auto slash = count.find('/');
  if (slash == std::string_view::npos) return detail::all_digits(count);
  return detail::all_digits(count.substr(0, slash)) && detail::all_digits(count.substr(slash + 1));
}

class Lexer {
 public:
  Lexer(std::string_view text, const MetrologicalContext& ctx) : ctx_(ctx) {
    folded_ = detail::fold_with_offsets(text);
  }

  std::vector<Lexeme> run(std::vector<Token>& tokens) {
    auto words = detail::split_words(folded_.text);
    std::vector<Lexeme> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      Token t = clean(words[i]);
      if (t.text.empty()) {
        if (t.marks & mark_deleted) tokens.push_back(t);
        continue;
      }
      // "ur2 hal-la" is one unit word.
      if (lower(t.text) == "ur2" && i + 1 < words.size()) {
        Token next = clean(words[i + 1]);
        if (lower(next.text) == "hal-la") {
          t.text = "ur2-hal-la";
          t.marks |= next.marks;
          ++i;
        }
      }
      if (t.text.size() > 2 && t.text.front() == '(' && t.text[1] == '=' && t.text.back() == ')') {
        std::string gloss = t.text.substr(2, t.text.size() - 3);
        auto f = parse_fraction_sign(gloss);
        if (!f || out.empty() || out.back().kind != Kind::numeral)
          throw ParseError(t.offset, "gloss '" + t.text + "' does not follow a numeral");
        out.back().kind = Kind::fraction;
        out.back().fraction = *f;
        out.back().token.marks |= mark_glossed;
        out.back().token.text += " " + t.text;
        tokens.back() = out.back().token;
        continue;
      }
      tokens.push_back(t);
      out.push_back(classify(t));
    }
    return out;
  }

 private:
  std::size_t origin(std::size_t folded_offset) const { return folded_.origin[folded_offset]; }

  Token clean(const detail::Word& w) {
    Token t;
    t.offset = origin(w.begin);
    std::string_view src = w.text;
    auto bang = src.find("!(");
    if (bang != std::string_view::npos && src.back() == ')') {
      t.marks |= mark_emended;
      // Bracket state of the written form still counts.
      for (char c : src.substr(0, bang)) track(c, t);
      src = src.substr(bang + 2, src.size() - bang - 3);
    }
    std::string reading;
    bool all_inserted = true;
    bool all_deleted = true;
    bool any = false;
    for (char c : src) {
      if (track(c, t)) continue;
      if (c == '#') {
        t.marks |= mark_damaged;
        continue;
      }
      if (c == '?') {
        t.marks |= mark_uncertain;
        continue;
      }
      if (c == '*') continue;
      reading.push_back(c);
      any = true;
      if (bracket_ > 0) t.marks |= mark_restored;
      if (insert_ == 0) all_inserted = false;
      if (delete_ == 0) all_deleted = false;
    }
    if (any && all_inserted) t.marks |= mark_inserted;
    if (any && all_deleted) {
      t.marks |= mark_deleted;
      reading.clear();
    }
    // Grouping parentheses around an add-back, and partial restorations like gin2-(bi).
    if (!reading.empty() && reading.front() == '(' && reading.size() > 1 && reading[1] != '=') reading.erase(0, 1);
    auto opens = std::count(reading.begin(), reading.end(), '(');
    auto closes = std::count(reading.begin(), reading.end(), ')');
    while (closes > opens && !reading.empty() && reading.back() == ')') {
      reading.pop_back();
      --closes;
    }
    if (!reading.empty() && reading.find('(') != std::string::npos && !numeral_shape(reading) &&
        !(reading.size() > 1 && reading[0] == '(' && reading[1] == '=') && !parse_fraction_sign(reading)) {
      std::erase_if(reading, [](char c) { return c == '(' || c == ')'; });
    }
    t.text = reading;
    return t;
  }

  // Consumes editorial brackets; true if c was one.
  bool track(char c, Token& t) {
    switch (c) {
      case '[': ++bracket_; t.marks |= mark_restored; return true;
      case ']': if (bracket_ > 0) --bracket_; t.marks |= mark_restored; return true;
      case '<': ++insert_; return true;
      case '>': if (insert_ > 0) --insert_; return true;
      case '{': ++delete_; return true;
      case '}': if (delete_ > 0) --delete_; return true;
      case '\x01': case '\x02': t.marks |= mark_damaged; return true;
      default: return false;
    }
  }

  Lexeme classify(const Token& t) const {
    Lexeme l{Kind::bare, t};
    std::string w = lower(t.text);
    if (w == "la2") return l.kind = Kind::la2, l;
    if (w == "+") return l.kind = Kind::plus, l;
    if (w == "gal" || w == "kid") return l.kind = Kind::tier, l;
    if (w == "sag") return l.kind = Kind::qualifier, l.qualifier = Qualifier::sag, l;
    if (w == "sa2") return l.kind = Kind::qualifier, l.qualifier = Qualifier::sa2, l;
    if (w == "ki") return l.kind = Kind::qualifier, l.qualifier = Qualifier::ki, l;
    if (w == "gan2" && ctx_.dimension == Dimension::length)
      return l.kind = Kind::qualifier, l.qualifier = Qualifier::gan2, l;
    if (auto f = parse_fraction_sign(t.text)) return l.kind = Kind::fraction, l.fraction = *f, l;
    if (numeral_shape(t.text)) return l.kind = Kind::numeral, l;
    if (detail::all_digits(t.text)) {
      if (t.text.size() > 9) throw ParseError(t.offset, "count too large");
      return l.kind = Kind::bare, l;
    }
    if (const Unit* u = find_unit(t.text)) return l.kind = Kind::unit, l.unit = u, l;
    throw ParseError(t.offset, "unknown word '" + t.text + "'");
  }

  const MetrologicalContext& ctx_;
  detail::Folded folded_;
  int bracket_ = 0;
  int insert_ = 0;
  int delete_ = 0;
};

struct Group {
  std::vector<const Lexeme*> numeral;  // numeral, tier and inner la2 words
  const Lexeme* bare = nullptr;
  std::optional<FractionSign> fraction;
  std::size_t offset = 0;
  bool restored = false;

  bool empty() const { return numeral.empty() && !bare && !fraction; }
  bool fraction_only() const { return numeral.empty() && !bare && fraction; }
  bool has_count() const { return !numeral.empty() || bare; }
};

struct Item {
  enum Type { count, unit_word, la2, plus } type;
  Group g;
  const Unit* unit = nullptr;
  std::size_t offset = 0;
  bool restored = false;
};

// Value of the last numeral sign in a group, for spotting where a new count starts.
std::optional<Rational> last_sign_value(const Group& g, NumeralSystem system) {
  for (auto it = g.numeral.rbegin(); it != g.numeral.rend(); ++it) {
    if ((*it)->kind != Kind::numeral) return std::nullopt;
    const std::string& w = (*it)->token.text;
    auto open = w.find('(');
    auto id = find_sign(w.substr(open + 1, w.size() - open - 2), system);
    if (!id) return std::nullopt;
    return sign_value(*id);
  }
  return std::nullopt;
}

class Assembler {
 public:
  Assembler(const MetrologicalContext& ctx, ParseMode mode, MeasureExpression& out)
      : ctx_(ctx), mode_(mode), out_(out) {}

  void build(const std::vector<Lexeme>& lex) {
    items_ = group_items(lex);
    bool any_unit = std::any_of(items_.begin(), items_.end(), [](const Item& i) { return i.type == Item::unit_word; });
    bool any_count = std::any_of(items_.begin(), items_.end(), [](const Item& i) { return i.type == Item::count; });
    if (!any_count) throw ParseError(items_.empty() ? 0 : items_.front().offset, "no value");
    try {
      assemble_strict(any_unit);
    } catch (const ParseError&) {
      if (mode_ != ParseMode::lenient) throw;
      out_.value.segments.clear();
      out_.reordered = false;
      assemble_lenient();
    }
    check();
  }

 private:
  NumeralSystem system_for(const Unit* u) const {
    return u == &units::gan2 ? NumeralSystem::G : NumeralSystem::S;
  }

  std::vector<Item> group_items(const std::vector<Lexeme>& lex) {
    std::vector<Item> items;
    Group g;
    bool seen_value = false;
    auto flush = [&] {
      if (!g.empty()) {
        Item it{Item::count, g};
        it.offset = g.offset;
        items.push_back(it);
        seen_value = true;
      }
      g = Group{};
    };
    auto start = [&](const Lexeme& l) {
      if (g.empty()) g.offset = l.token.offset;
      if (l.token.marks & mark_restored) g.restored = true;
    };
    for (std::size_t i = 0; i < lex.size(); ++i) {
      const Lexeme& l = lex[i];
      switch (l.kind) {
        case Kind::numeral: {
          bool split = g.fraction || g.bare;
          if (!split && !g.numeral.empty() && ctx_.numeral_system == NumeralSystem::S &&
              g.numeral.back()->kind == Kind::numeral) {
            auto prev = last_sign_value(g, NumeralSystem::S);
            auto open = l.token.text.find('(');
            auto id = find_sign(std::string_view(l.token.text).substr(open + 1, l.token.text.size() - open - 2),
                                NumeralSystem::S);
            if (prev && id && sign_value(*id) >= *prev) split = true;
          }
          if (split) flush();
          start(l);
          g.numeral.push_back(&l);
          break;
        }
        case Kind::tier:
          if (g.numeral.empty()) throw ParseError(l.token.offset, "gal or KID with no preceding sign");
          g.numeral.push_back(&l);
          break;
        case Kind::la2:
          if (!g.numeral.empty() && !g.fraction && !g.bare && i + 1 < lex.size() && lex[i + 1].kind == Kind::numeral &&
              g.numeral.back()->kind != Kind::la2) {
            g.numeral.push_back(&l);
            break;
          }
          flush();
          items.push_back({Item::la2, {}, nullptr, l.token.offset});
          break;
        case Kind::plus:
          flush();
          items.push_back({Item::plus, {}, nullptr, l.token.offset});
          break;
        case Kind::fraction:
          if (g.fraction) flush();
          start(l);
          g.fraction = l.fraction;
          break;
        case Kind::bare:
          if (!g.empty()) flush();
          start(l);
          g.bare = &l;
          break;
        case Kind::unit: {
          flush();
          Item it{Item::unit_word, {}, l.unit, l.token.offset};
          it.restored = (l.token.marks & mark_restored) != 0;
          items.push_back(it);
          seen_value = true;
          break;
        }
        case Kind::qualifier:
          flush();
          out_.qualifiers.push_back({l.qualifier, seen_value ? Placement::after : Placement::before});
          break;
      }
    }
    flush();
    return items;
  }

  Piece make_piece(const Group& g, const Unit* unit, bool explicit_unit, bool restored) {
    Piece p;
    p.unit = unit;
    p.unit_explicit = explicit_unit;
    p.fraction = g.fraction;
    p.restored = g.restored || restored;
    if (!g.numeral.empty()) {
      std::string joined;
      for (const Lexeme* l : g.numeral) {
        if (!joined.empty()) joined += ' ';
        joined += l->token.text;
      }
      try {
        NumeralExpr e = parse_numeral(joined, system_for(unit), mode_);
        p.count = decode_numeral(e);
        p.numeral = std::move(e);
      } catch (const ParseError& err) {
        throw ParseError(g.offset, err.message());
      } catch (const NumeralError& err) {
        throw ParseError(g.offset, err.what());
      }
    } else if (g.bare) {
      p.count = parse_rational(g.bare->token.text);
    }
    if (unit == &units::gan2 && p.fraction) throw ParseError(g.offset, "fractions of iku are written with signs");
    if (system_for(unit) == NumeralSystem::S && !is_integer(p.count)) throw ParseError(g.offset, "count is not whole");
    return p;
  }

  Segment& segment() { return out_.value.segments.back(); }

  const Unit* last_unit() const {
    for (auto s = out_.value.segments.rbegin(); s != out_.value.segments.rend(); ++s)
      if (!s->pieces.empty()) return s->pieces.back().unit;
    return nullptr;
  }

  void assemble_strict(bool any_unit) {
    out_.value.segments.push_back({SegmentSign::plus, {}});
    const auto n = items_.size();
    auto type_at = [&](std::size_t i) { return i < n ? items_[i].type : Item::plus; };
    for (std::size_t i = 0; i < n; ++i) {
      const Item& it = items_[i];
      switch (it.type) {
        case Item::la2:
        case Item::plus:
          if (segment().pieces.empty()) throw ParseError(it.offset, "nothing before " + std::string(it.type == Item::la2 ? "la2" : "+"));
          out_.value.segments.push_back({it.type == Item::la2 ? SegmentSign::minus : SegmentSign::plus, {}});
          break;
        case Item::unit_word:
          if (i + 1 < n && items_[i + 1].type == Item::count && type_at(i + 2) != Item::unit_word) {
            segment().pieces.push_back(make_piece(items_[i + 1].g, it.unit, true, it.restored));
            out_.reordered = true;
            ++i;
            break;
          }
          throw ParseError(it.offset, "unit word without a count");
        case Item::count: {
          const bool end_of_segment = i + 1 >= n || items_[i + 1].type == Item::la2 || items_[i + 1].type == Item::plus;
          if (i + 1 < n && items_[i + 1].type == Item::unit_word) {
            segment().pieces.push_back(make_piece(it.g, items_[i + 1].unit, true, items_[i + 1].restored));
            ++i;
          } else if (it.g.fraction_only() && i > 0 && items_[i - 1].type == Item::unit_word && !segment().pieces.empty() &&
                     !segment().pieces.back().fraction && i + 1 < n && items_[i + 1].type == Item::count) {
            Piece& prev = segment().pieces.back();
            prev.fraction = it.g.fraction;
            out_.reordered = true;
          } else if (end_of_segment && !any_unit) {
            if (!ctx_.heading_unit) throw ParseError(it.offset, "no unit, and " + std::string(to_string(ctx_.id)) + " has no default");
            segment().pieces.push_back(make_piece(it.g, ctx_.heading_unit, false, false));
          } else if (end_of_segment && it.g.fraction_only() && last_unit()) {
            segment().pieces.push_back(make_piece(it.g, last_unit(), false, false));
            segment().pieces.back().unit_explicit = true;
            out_.units_inferred = true;
          } else {
            throw ParseError(it.offset, "count without a unit");
          }
          break;
        }
      }
    }
    if (segment().pieces.empty()) throw ParseError(items_.back().offset, "expression ends with an operator");
    for (const Segment& s : out_.value.segments) check_order(s);
  }

  void check_order(const Segment& s) const {
    auto index = [&](const Unit* u) {
      for (std::size_t k = 0; k < ctx_.units.size(); ++k)
        if (ctx_.units[k].unit == u) return k;
      return ctx_.units.size();
    };
    for (std::size_t k = 1; k < s.pieces.size(); ++k)
      if (index(s.pieces[k].unit) <= index(s.pieces[k - 1].unit))
        throw ParseError(0, std::string(s.pieces[k].unit->name) + " after " + std::string(s.pieces[k - 1].unit->name));
  }

  // Pairs counts with the units present, largest first, and supplies the
  // next smaller units of the context for counts left over.
  void assemble_lenient() {
    std::vector<std::vector<const Item*>> segs(1);
    std::vector<SegmentSign> signs{SegmentSign::plus};
    for (const Item& it : items_) {
      if (it.type == Item::la2 || it.type == Item::plus) {
        segs.emplace_back();
        signs.push_back(it.type == Item::la2 ? SegmentSign::minus : SegmentSign::plus);
      } else {
        segs.back().push_back(&it);
      }
    }
    for (std::size_t s = 0; s < segs.size(); ++s) {
      std::vector<const Group*> groups;
      std::vector<std::size_t> unit_idx;
      std::vector<bool> unit_restored;
      for (const Item* it : segs[s]) {
        if (it->type == Item::count) {
          groups.push_back(&it->g);
        } else {
          std::size_t k = 0;
          while (k < ctx_.units.size() && ctx_.units[k].unit != it->unit) ++k;
          if (k == ctx_.units.size())
            throw ParseError(it->offset, std::string(it->unit->name) + " is not a unit of " + std::string(to_string(ctx_.id)));
          if (std::find(unit_idx.begin(), unit_idx.end(), k) == unit_idx.end()) unit_idx.push_back(k);
        }
      }
      std::sort(unit_idx.begin(), unit_idx.end());
      if (groups.empty()) throw ParseError(0, "segment without a count");
      if (unit_idx.size() > groups.size()) throw ParseError(0, "more unit words than counts");
      Segment seg{signs[s], {}};
      std::size_t next = 0;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        std::size_t k;
        bool explicit_unit = true;
        if (g < unit_idx.size()) {
          k = unit_idx[g];
        } else if (unit_idx.empty() && g == 0 && s == 0) {
          if (!ctx_.heading_unit) throw ParseError(groups[g]->offset, "no unit");
          k = 0;
          while (ctx_.units[k].unit != ctx_.heading_unit) ++k;
          explicit_unit = false;
        } else if (unit_idx.empty() && g == 0) {
          const Unit* u = last_unit();
          if (!u) throw ParseError(groups[g]->offset, "no unit");
          k = 0;
          while (ctx_.units[k].unit != u) ++k;
          out_.units_inferred = true;
        } else {
          k = next;
          out_.units_inferred = true;
        }
        if (k >= ctx_.units.size() || (g > 0 && k < next))
          throw ParseError(groups[g]->offset, "no smaller unit left in " + std::string(to_string(ctx_.id)));
        seg.pieces.push_back(make_piece(*groups[g], ctx_.units[k].unit, explicit_unit, false));
        next = k + 1;
      }
      out_.value.segments.push_back(std::move(seg));
    }
    if (std::any_of(segs.front().begin(), segs.front().end(), [](const Item* it) { return it->type == Item::unit_word; }) &&
        segs.front().front()->type == Item::unit_word)
      out_.reordered = true;
  }

  void check() {
    for (const Segment& s : out_.value.segments) {
      for (const Piece& p : s.pieces) {
        if (p.count == 0 && !p.fraction) throw ParseError(0, "empty count");
        if (mode_ == ParseMode::strict && p.fraction && !ctx_.accepts(*p.unit, *p.fraction))
          throw ParseError(0, std::string(fraction_label(*p.fraction)) + " is not written with " + std::string(p.unit->name) +
                                  " in " + std::string(to_string(ctx_.id)));
      }
    }
    try {
      evaluate(out_.value, ctx_);
    } catch (const ArithmeticError& e) {
      throw ParseError(0, e.what());
    }
  }

  const MetrologicalContext& ctx_;
  ParseMode mode_;
  MeasureExpression& out_;
  std::vector<Item> items_;
};

std::string count_text(const Piece& p, const MetrologicalContext& ctx, Notation notation) {
  if (p.count == 0) return "";
  if (notation == Notation::arabic) return to_mixed_string(p.count);
  NumeralSystem system = p.unit == &units::gan2 ? NumeralSystem::G : NumeralSystem::S;
  if (p.numeral) return render_numeral(*p.numeral);
  return render_numeral(encode_canonical(p.count, system, ctx.numeral_style(*p.unit)));
}

}  // namespace

MeasureExpression parse_measure(std::string_view text, const MetrologicalContext& ctx, ParseMode mode) {
  MeasureExpression out;
  out.context = ctx.id;
  out.raw = std::string(text);
  Lexer lexer(text, ctx);
  std::vector<Lexeme> lex = lexer.run(out.tokens);
  if (lex.empty()) throw ParseError(0, "empty expression");
  Assembler(ctx, mode, out).build(lex);
  return out;
}

std::string render_value(const CompoundValue& value, const MetrologicalContext& ctx, const RenderConventions& conv,
                         const std::vector<QualifierMark>& qualifiers) {
  std::vector<std::string> words;
  for (const auto& q : qualifiers)
    if (q.placement == Placement::before) words.emplace_back(to_string(q.qualifier));
  for (std::size_t s = 0; s < value.segments.size(); ++s) {
    const Segment& seg = value.segments[s];
    if (s > 0) words.emplace_back(seg.sign == SegmentSign::minus ? "la2" : "+");
    for (const Piece& p : seg.pieces) {
      std::string piece = count_text(p, ctx, conv.notation);
      if (p.fraction) {
        if (!piece.empty()) piece += ' ';
        piece += fraction_label(*p.fraction);
      }
      bool show_unit = p.unit_explicit || conv.force_units;
      if (show_unit) {
        if (!piece.empty()) piece += ' ';
        piece += conv.notation == Notation::arabic ? p.unit->gloss : p.unit->name;
      }
      if (conv.show_brackets && p.restored) piece = "[" + piece + "]";
      words.push_back(piece);
    }
  }
  for (const auto& q : qualifiers)
    if (q.placement == Placement::after) words.emplace_back(to_string(q.qualifier));
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  if (conv.script == Script::unicode && conv.notation == Notation::translit) return to_unicode(out);
  return out;
}

std::string render_measure(const MeasureExpression& expr, const RenderConventions& conv) {
  return render_value(expr.value, context_lookup(expr.context), conv, expr.qualifiers);
}

std::string normalize(std::string_view text, const MetrologicalContext& ctx, ParseMode mode) {
  return render_measure(parse_measure(text, ctx, mode));
}

std::string to_unicode(std::string_view ascii) {
  static const char* subscripts[] = {"\xE2\x82\x80", "\xE2\x82\x81", "\xE2\x82\x82", "\xE2\x82\x83", "\xE2\x82\x84",
                                     "\xE2\x82\x85", "\xE2\x82\x86", "\xE2\x82\x87", "\xE2\x82\x88", "\xE2\x82\x89"};
  std::string out;
  auto is_letter = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  for (std::size_t i = 0; i < ascii.size(); ++i) {
    char c = ascii[i];
    if ((c == 's' || c == 'S') && i + 1 < ascii.size() && (ascii[i + 1] == 'z' || ascii[i + 1] == 'Z')) {
      out += c == 's' ? "\xC5\xA1" : "\xC5\xA0";
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) && i > 0 && is_letter(ascii[i - 1])) {
      std::size_t j = i;
      while (j < ascii.size() && std::isdigit(static_cast<unsigned char>(ascii[j]))) ++j;
      if (j == ascii.size() || !is_letter(ascii[j])) {
        for (std::size_t k = i; k < j; ++k) out += subscripts[ascii[k] - '0'];
        i = j - 1;
        continue;
      }
    }
    if (c == '(' && ascii.substr(i, 4) == "(as)") {
      out += "(a\xC5\xA1)";
      i += 3;
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace edst
