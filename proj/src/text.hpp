#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace edst::detail {

struct Folded {
  std::string text;
  std::vector<std::size_t> origin;  // byte offset in the source of each byte, plus one past the end
};

// Unicode transliteration to ASCII, remembering where each byte came from.
// Half brackets become '\x01' and '\x02'.
Folded fold_with_offsets(std::string_view source);

struct Word {
  std::string_view text;
  std::size_t begin;  // offset in the folded text
};

std::vector<Word> split_words(std::string_view text);

bool all_digits(std::string_view s);

}  // namespace edst::detail
