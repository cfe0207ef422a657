#include "altquot/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "altquot/errors.hpp"

namespace altquot {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::generator_out_of_range: return "GeneratorOutOfRange";
    case Errc::already_covering: return "AlreadyCovering";
    case Errc::plan_mismatch: return "PlanMismatch";
    case Errc::rank_too_small: return "RankTooSmall";
    case Errc::verification_exhausted: return "VerificationExhausted";
    case Errc::not_a_covering: return "NotACovering";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::not_transitive: return "NotTransitive";
    case Errc::gamma_in_subgroup: return "GammaInSubgroup";
    case Errc::finite_index_subgroup: return "FiniteIndexSubgroup";
    case Errc::empty_gamma_list: return "EmptyGammaList";
  }
  return "Unknown";
}

Label Word::max_label() const noexcept {
  Label m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

Word free_reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!w.letters_.empty() && w.letters_.back().cancels(l))
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(it->inverse());
  // reversal with flipped signs is still reduced; the pass is a no-op
  return free_reduce(out);
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> joined(u.begin(), u.end());
  joined.insert(joined.end(), v.begin(), v.end());
  return free_reduce(joined);
}

Word parse_word(std::string_view text, std::size_t rank) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    Letter l;
    if (c >= 'a' && c <= 'z') {
      l = {static_cast<Label>(c - 'a' + 1), 1};
    } else if (c >= 'A' && c <= 'Z') {
      l = {static_cast<Label>(c - 'A' + 1), -1};
    } else {
      throw Error(Errc::invalid_character,
                  "invalid character in word \"" + std::string(text) +
                      "\" at position " + std::to_string(pos),
                  pos);
    }
    if (l.index > rank) {
      throw Error(Errc::generator_out_of_range,
                  std::string("generator '") + c + "' exceeds rank " +
                      std::to_string(rank),
                  pos);
    }
    letters.push_back(l);
  }
  return free_reduce(letters);
}

std::vector<Word> parse_words(std::span<const std::string> texts,
                              std::size_t rank) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_word(t, rank));
  return out;
}

char letter_char(Letter l) {
  if (l.index < 1 || l.index > 26)
    throw std::out_of_range("label " + std::to_string(l.index) +
                            " has no letter in the text format");
  const char base = l.sign > 0 ? 'a' : 'A';
  return static_cast<char>(base + static_cast<char>(l.index - 1));
}

std::string render(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) s.push_back(letter_char(l));
  return s;
}

}  // namespace altquot
