#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altquot {

// Generator labels are 1-based, matching alpha_1 .. alpha_r.
using Label = std::uint32_t;

struct Letter {
  Label index = 1;
  int sign = 1;  // +1 generator, -1 inverse

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr bool cancels(const Letter& other) const noexcept {
    return index == other.index && sign == -other.sign;
  }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

// An element of the free group, always stored freely reduced.
class Word {
 public:
  Word() = default;

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Largest generator index used, 0 for the empty word.
  Label max_label() const noexcept;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter> letters);
  std::vector<Letter> letters_;
};

// Free reduction by a single stack pass; the result is the unique reduced
// representative of the input sequence.
Word free_reduce(std::span<const Letter> letters);

Word invert(const Word& w);

// Reduced product u*v.
Word concat(const Word& u, const Word& v);

// Text syntax: 'a'..'z' are generators 1..26, 'A'..'Z' their inverses.
// Throws Error{invalid_character} or Error{generator_out_of_range}.
Word parse_word(std::string_view text, std::size_t rank);

std::vector<Word> parse_words(std::span<const std::string> texts,
                              std::size_t rank);

// Inverse of parse_word. Throws std::out_of_range for labels above 26.
std::string render(const Word& w);
char letter_char(Letter l);

}  // namespace altquot
