#include "edst/numerals.hpp"

#include "edst/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace edst {

namespace {

constexpr std::array<NumeralSign, 15> sign_table{{
    {SignId::s_as, NumeralSystem::S, "as", 1, 1, false},
    {SignId::s_disz, NumeralSystem::S, "disz", 1, 1, false},
    {SignId::s_u, NumeralSystem::S, "u", 10, 1, false},
    {SignId::s_gesz2, NumeralSystem::S, "gesz2", 60, 1, false},
    {SignId::s_geszu, NumeralSystem::S, "gesz'u", 600, 1, false},
    {SignId::s_szar2, NumeralSystem::S, "szar2", 3600, 1, false},
    {SignId::s_szaru, NumeralSystem::S, "szar'u", 36000, 1, false},
    {SignId::g_quarter, NumeralSystem::G, "1/4", 1, 4, false},
    {SignId::g_ubu, NumeralSystem::G, "ubu", 1, 2, false},
    {SignId::g_iku, NumeralSystem::G, "iku", 1, 1, false},
    {SignId::g_esze3, NumeralSystem::G, "esze3", 6, 1, false},
    {SignId::g_bur3, NumeralSystem::G, "bur3", 18, 1, false},
    {SignId::g_buru, NumeralSystem::G, "bur'u", 180, 1, false},
    {SignId::g_szar2, NumeralSystem::G, "szar2", 1080, 1, true},
    {SignId::g_szaru, NumeralSystem::G, "szar'u", 10800, 1, true},
}};

struct Alias {
  std::string_view spelling;
  SignId id;
};

constexpr std::array s_aliases{
    Alias{"as", SignId::s_as},         Alias{"asz", SignId::s_as},        Alias{"as2", SignId::s_as},
    Alias{"asz2", SignId::s_as},       Alias{"disz", SignId::s_disz},     Alias{"dis", SignId::s_disz},
    Alias{"u", SignId::s_u},           Alias{"gesz2", SignId::s_gesz2},   Alias{"gesz", SignId::s_gesz2},
    Alias{"gesz'u", SignId::s_geszu},  Alias{"geszu", SignId::s_geszu},   Alias{"gesz^u", SignId::s_geszu},
    Alias{"szar2", SignId::s_szar2},   Alias{"szar", SignId::s_szar2},    Alias{"szar'u", SignId::s_szaru},
    Alias{"szaru", SignId::s_szaru},   Alias{"szar^u", SignId::s_szaru},
};

constexpr std::array g_aliases{
    Alias{"iku", SignId::g_iku},      Alias{"ubu", SignId::g_ubu},      Alias{"esze3", SignId::g_esze3},
    Alias{"esze", SignId::g_esze3},   Alias{"bur3", SignId::g_bur3},    Alias{"bur", SignId::g_bur3},
    Alias{"bur'u", SignId::g_buru},   Alias{"buru", SignId::g_buru},    Alias{"bur^u", SignId::g_buru},
    Alias{"szar2", SignId::g_szar2},  Alias{"szar", SignId::g_szar2},   Alias{"szar'u", SignId::g_szaru},
    Alias{"szaru", SignId::g_szaru},  Alias{"szar^u", SignId::g_szaru},
};

constexpr std::array s_ladder{SignId::s_szaru, SignId::s_szar2, SignId::s_geszu, SignId::s_gesz2, SignId::s_u,
                              SignId::s_as};

struct Rung {
  SignId sign;
  Tier tier;
};

constexpr std::array g_ladder{
    Rung{SignId::g_szaru, Tier::kid},   Rung{SignId::g_szar2, Tier::kid}, Rung{SignId::g_szaru, Tier::gal},
    Rung{SignId::g_szar2, Tier::gal},   Rung{SignId::g_szaru, Tier::plain}, Rung{SignId::g_szar2, Tier::plain},
    Rung{SignId::g_buru, Tier::plain},  Rung{SignId::g_bur3, Tier::plain},  Rung{SignId::g_esze3, Tier::plain},
    Rung{SignId::g_iku, Tier::plain},   Rung{SignId::g_ubu, Tier::plain},   Rung{SignId::g_quarter, Tier::plain},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::optional<Tier> parse_tier(std::string_view word) {
  std::string w = lower(word);
  if (w == "gal") return Tier::gal;
  if (w == "kid") return Tier::kid;
  return std::nullopt;
}

Rational part_value(const std::vector<NumeralTerm>& part) {
  Rational sum = 0;
  for (const auto& t : part) sum += t.value();
  return sum;
}

bool strictly_decreasing(const std::vector<NumeralTerm>& part) {
  for (std::size_t i = 1; i < part.size(); ++i)
    if (sign_value(part[i].sign, part[i].tier) >= sign_value(part[i - 1].sign, part[i - 1].tier)) return false;
  return true;
}

std::vector<NumeralTerm> greedy(Rational n, NumeralSystem system, OneSign one) {
  std::vector<NumeralTerm> terms;
  auto take = [&](SignId sign, Tier tier) {
    Rational v = sign_value(sign, tier);
    Integer k = floor_of(n / v);
    if (k > 0) {
      terms.push_back({sign, tier, static_cast<std::uint64_t>(k)});
      n -= v * Rational(k);
    }
  };
  if (system == NumeralSystem::S) {
    for (SignId s : s_ladder) take(s == SignId::s_as && one == OneSign::disz ? SignId::s_disz : s, Tier::plain);
  } else {
    for (const Rung& r : g_ladder) take(r.sign, r.tier);
  }
  return terms;
}

}  // namespace

const NumeralSign& sign_info(SignId id) { return sign_table[static_cast<std::size_t>(id)]; }

std::span<const NumeralSign> signs_of(NumeralSystem system) {
  return system == NumeralSystem::S ? std::span<const NumeralSign>(sign_table.data(), 7)
                                    : std::span<const NumeralSign>(sign_table.data() + 7, 8);
}

std::optional<SignId> find_sign(std::string_view name, NumeralSystem system) {
  std::string n = lower(name);
  const auto& table = system == NumeralSystem::S ? std::span<const Alias>(s_aliases) : std::span<const Alias>(g_aliases);
  for (const Alias& a : table)
    if (a.spelling == n) return a.id;
  return std::nullopt;
}

Rational sign_value(SignId id, Tier tier) {
  const NumeralSign& s = sign_info(id);
  Rational v(s.num, s.den);
  if (tier == Tier::gal) v *= 60;
  if (tier == Tier::kid) v *= 3600;
  return v;
}

std::string_view to_string(NumeralSystem system) { return system == NumeralSystem::S ? "S" : "G"; }

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::gal: return "gal";
    case Tier::kid: return "KID";
    default: return "";
  }
}

void validate(const NumeralExpr& expr) {
  if (expr.positive.empty()) throw NumeralError("numeral has no signs");
  for (const auto* part : {&expr.positive, &expr.subtrahend}) {
    for (const auto& t : *part) {
      const NumeralSign& s = sign_info(t.sign);
      if (s.system != expr.system)
        throw NumeralError("sign " + std::string(s.name) + " belongs to System " + std::string(to_string(s.system)));
      if (t.repetition == 0) throw NumeralError("zero repetition of " + std::string(s.name));
      if (t.tier != Tier::plain && !s.tiered) throw NumeralError(std::string(s.name) + " cannot take gal or KID");
    }
    if (!strictly_decreasing(*part)) throw NumeralError("signs are not in decreasing order");
  }
  if (!expr.subtrahend.empty() && part_value(expr.subtrahend) >= part_value(expr.positive))
    throw NumeralError("subtrahend is not smaller than the numeral");
}

Rational decode_numeral(const NumeralExpr& expr, NumeralSystem system) {
  for (const auto* part : {&expr.positive, &expr.subtrahend})
    for (const auto& t : *part)
      if (sign_info(t.sign).system != system)
        throw NumeralError("sign " + std::string(sign_info(t.sign).name) + " is not a System " +
                           std::string(to_string(system)) + " sign");
  validate(expr);
  return part_value(expr.positive) - part_value(expr.subtrahend);
}

NumeralExpr encode_canonical(const Rational& n, NumeralSystem system, NumeralStyle style) {
  if (n <= 0) throw NumeralError("no numeral for " + to_string(n));
  if (system == NumeralSystem::S && !is_integer(n)) throw NumeralError("System S has no sign for " + to_string(n));
  if (system == NumeralSystem::G && !is_integer(n * 4))
    throw NumeralError("System G has no sign for " + to_string(n) + " iku");
  NumeralExpr e;
  e.system = system;
  if (system == NumeralSystem::S && style.subtractive_nine && numerator(n) % 10 == 9) {
    e.positive = greedy(n + 1, system, style.one_sign);
    e.subtrahend.push_back({style.one_sign == OneSign::disz ? SignId::s_disz : SignId::s_as, Tier::plain, 1});
  } else {
    e.positive = greedy(n, system, style.one_sign);
  }
  return e;
}

NumeralExpr parse_numeral(std::string_view text, NumeralSystem system, ParseMode mode) {
  detail::Folded folded = detail::fold_with_offsets(text);
  auto where = [&](std::size_t folded_offset) { return folded.origin[folded_offset]; };
  NumeralExpr e;
  e.system = system;
  std::vector<std::size_t> offsets[2];
  int part = 0;
  std::size_t run_start = 0;
  auto current = [&]() -> std::vector<NumeralTerm>& { return part == 0 ? e.positive : e.subtrahend; };

  auto words = detail::split_words(folded.text);
  if (words.empty()) throw ParseError(0, "empty numeral");
  for (const auto& w : words) {
    if (w.text == "la2") {
      if (part == 1 || e.positive.empty()) throw ParseError(where(w.begin), "unexpected la2");
      part = 1;
      run_start = 0;
      continue;
    }
    if (auto tier = parse_tier(w.text)) {
      auto& terms = current();
      if (run_start >= terms.size()) throw ParseError(where(w.begin), "gal or KID with no preceding sign");
      std::size_t end = terms.size();
      if (mode == ParseMode::lenient) {
        // The qualifier reaches back over the decreasing run only.
        for (std::size_t i = run_start + 1; i < terms.size(); ++i) {
          if (sign_value(terms[i].sign) >= sign_value(terms[i - 1].sign)) {
            end = i;
            break;
          }
        }
      }
      for (std::size_t i = run_start; i < end; ++i) {
        if (!sign_info(terms[i].sign).tiered)
          throw ParseError(where(offsets[part][i]), std::string(sign_info(terms[i].sign).name) + " cannot take " +
                                                        std::string(w.text));
        terms[i].tier = *tier;
      }
      run_start = terms.size();
      continue;
    }
    auto open = w.text.find('(');
    if (open == std::string_view::npos || w.text.back() != ')' || open == 0)
      throw ParseError(where(w.begin), "expected count(sign), got '" + std::string(w.text) + "'");
    std::string_view count = w.text.substr(0, open);
    std::string_view name = w.text.substr(open + 1, w.text.size() - open - 2);
    std::size_t name_at = where(w.begin + open + 1);
    NumeralTerm term;
    auto slash = count.find('/');
    if (slash != std::string_view::npos) {
      std::string_view k = count.substr(0, slash);
      std::string_view d = count.substr(slash + 1);
      if (system != NumeralSystem::G || lower(name) != "iku" || !detail::all_digits(k) || (d != "2" && d != "4"))
        throw ParseError(where(w.begin), "unknown fractional sign '" + std::string(w.text) + "'");
      term.sign = d == "2" ? SignId::g_ubu : SignId::g_quarter;
      term.repetition = std::stoull(std::string(k));
    } else {
      if (!detail::all_digits(count) || count.size() > 9)
        throw ParseError(where(w.begin), "bad repetition count '" + std::string(count) + "'");
      term.repetition = std::stoull(std::string(count));
      auto id = find_sign(name, system);
      if (!id) throw ParseError(name_at, "unknown System " + std::string(to_string(system)) + " sign '" + std::string(name) + "'");
      term.sign = *id;
    }
    if (term.repetition == 0) throw ParseError(where(w.begin), "repetition count of zero");
    current().push_back(term);
    offsets[part].push_back(w.begin);
  }
  if (part == 1 && e.subtrahend.empty()) throw ParseError(text.size(), "la2 with nothing subtracted");
  if (e.positive.empty()) throw ParseError(0, "numeral has no signs");

  for (int p = 0; p < 2; ++p) {
    auto& terms = p == 0 ? e.positive : e.subtrahend;
    if (mode == ParseMode::strict) {
      for (std::size_t i = 1; i < terms.size(); ++i)
        if (sign_value(terms[i].sign, terms[i].tier) >= sign_value(terms[i - 1].sign, terms[i - 1].tier))
          throw ParseError(where(offsets[p][i]), "signs out of decreasing order");
    } else {
      std::stable_sort(terms.begin(), terms.end(), [](const NumeralTerm& a, const NumeralTerm& b) {
        return sign_value(a.sign, a.tier) > sign_value(b.sign, b.tier);
      });
      std::vector<NumeralTerm> merged;
      for (const auto& t : terms) {
        if (!merged.empty() && sign_value(merged.back().sign, merged.back().tier) == sign_value(t.sign, t.tier))
          merged.back().repetition += t.repetition;
        else
          merged.push_back(t);
      }
      terms = std::move(merged);
    }
  }
  if (!e.subtrahend.empty() && part_value(e.subtrahend) >= part_value(e.positive))
    throw ParseError(0, "subtrahend is not smaller than the numeral");
  return e;
}

std::string render_numeral(const NumeralExpr& expr) {
  std::string out;
  auto emit = [&](const std::vector<NumeralTerm>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const NumeralTerm& t = terms[i];
      if (!out.empty()) out += ' ';
      const std::string rep = std::to_string(t.repetition);
      if (t.sign == SignId::g_quarter)
        out += rep + "/4(iku)";
      else if (t.sign == SignId::g_ubu)
        out += rep + "/2(iku)";
      else
        out += rep + "(" + std::string(sign_info(t.sign).name) + ")";
      if (t.tier != Tier::plain && (i + 1 == terms.size() || terms[i + 1].tier != t.tier)) {
        out += ' ';
        out += to_string(t.tier);
      }
    }
  };
  emit(expr.positive);
  if (!expr.subtrahend.empty()) {
    out += " la2";
    emit(expr.subtrahend);
  }
  return out;
}

Rational fraction_value(FractionSign f) {
  switch (f) {
    case FractionSign::third: return Rational(1, 3);
    case FractionSign::half: return Rational(1, 2);
    case FractionSign::two_thirds: return Rational(2, 3);
    case FractionSign::quarter: return Rational(1, 4);
  }
  return 0;
}

std::string_view fraction_label(FractionSign f) {
  switch (f) {
    case FractionSign::third: return "1/3";
    case FractionSign::half: return "1/2";
    case FractionSign::two_thirds: return "2/3";
    case FractionSign::quarter: return "igi-4";
  }
  return "";
}

std::optional<FractionSign> parse_fraction_sign(std::string_view text) {
  std::string t = lower(text);
  if (t == "1/3") return FractionSign::third;
  if (t == "1/2") return FractionSign::half;
  if (t == "2/3") return FractionSign::two_thirds;
  if (t == "igi-4" || t == "igi-4(disz)" || t == "igi-4(disz)-gal2" || t == "igi-4-gal2") return FractionSign::quarter;
  return std::nullopt;
}

}  // namespace edst
