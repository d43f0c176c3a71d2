#include "text.hpp"

#include "edst/errors.hpp"
#include "edst/rational.hpp"

#include <array>
#include <utility>

namespace edst {

Integer floor_of(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_mixed_string(const Rational& r) {
  if (r < 0) return "-" + to_mixed_string(-r);
  Integer whole = floor_of(r);
  Rational rest = r - Rational(whole);
  if (rest == 0) return whole.str();
  if (whole == 0) return to_string(rest);
  return whole.str() + " " + to_string(rest);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) throw ParseError(0, "not a rational: " + std::string(text));
  Integer d{std::string(den)};
  if (d == 0) throw ParseError(slash, "zero denominator");
  Rational r(Integer{std::string(num)}, d);
  return negative ? Rational(-r) : r;
}

namespace detail {

namespace {

struct Fold {
  std::string_view from;
  std::string_view to;
};

// Longest sequences first where prefixes overlap.
constexpr std::array folds{
    Fold{"\xC5\xA1", "sz"},          Fold{"\xC5\xA0", "SZ"},         Fold{"\xE1\xB8\xAB", "h"},
    Fold{"\xE1\xB8\xAA", "H"},       Fold{"\xE2\x82\x80", "0"},      Fold{"\xE2\x82\x81", "1"},
    Fold{"\xE2\x82\x82", "2"},       Fold{"\xE2\x82\x83", "3"},      Fold{"\xE2\x82\x84", "4"},
    Fold{"\xE2\x82\x85", "5"},       Fold{"\xE2\x82\x86", "6"},      Fold{"\xE2\x82\x87", "7"},
    Fold{"\xE2\x82\x88", "8"},       Fold{"\xE2\x82\x89", "9"},      Fold{"\xE2\x82\x93", "x"},
    Fold{"\xCA\xBE", "'"},           Fold{"\xCA\xBF", "'"},          Fold{"\xE2\x80\x99", "'"},
    Fold{"\xE2\x80\x98", "'"},       Fold{"\xE1\xB5\x98", "'u"},     Fold{"\xC2\xBD", "1/2"},
    Fold{"\xE2\x85\x93", "1/3"},     Fold{"\xE2\x85\x94", "2/3"},    Fold{"\xC2\xBC", "1/4"},
    Fold{"\xE2\xB8\xA2", "\x01"},    Fold{"\xE2\xB8\xA3", "\x02"},   Fold{"\xE2\x8C\x88", "\x01"},
    Fold{"\xE2\x8C\x89", "\x02"},    Fold{"\xC2\xA0", " "},          Fold{"\xE2\x80\x93", "-"},
    Fold{"\xC3\xA1", "a2"},          Fold{"\xC3\xA9", "e2"},         Fold{"\xC3\xAD", "i2"},
    Fold{"\xC3\xBA", "u2"},          Fold{"\xC3\xA0", "a3"},         Fold{"\xC3\xA8", "e3"},
    Fold{"\xC3\xAC", "i3"},          Fold{"\xC3\xB9", "u3"},         Fold{"\xC3\x97", "x"},
};

}  // namespace

Folded fold_with_offsets(std::string_view source) {
  Folded out;
  out.text.reserve(source.size());
  std::size_t i = 0;
  while (i < source.size()) {
    bool matched = false;
    if (static_cast<unsigned char>(source[i]) >= 0x80) {
      for (const Fold& f : folds) {
        if (source.substr(i, f.from.size()) == f.from) {
          for (char c : f.to) {
            out.text.push_back(c);
            out.origin.push_back(i);
          }
          i += f.from.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      out.text.push_back(source[i]);
      out.origin.push_back(i);
      ++i;
    }
  }
  out.origin.push_back(source.size());
  return out;
}

std::vector<Word> split_words(std::string_view text) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) words.push_back({text.substr(start, i - start), start});
  }
  return words;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail
}  // namespace edst
