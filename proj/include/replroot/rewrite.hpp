#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "replroot/matrix.hpp"
#include "replroot/numeric.hpp"

namespace replroot {

/// A letter of the conjugate-extended alphabet. With n = 2m base letters,
/// indices [0, n) are base letters and index k + n is the conjugate of k.
struct Symbol {
  std::uint32_t index = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

/// Net symbol counts: entry k is #k - #conj(k).
using CountVector = std::vector<BigInt>;

inline constexpr std::size_t kDefaultLengthCap = 1'000'000;

inline Symbol conjugate(Symbol s, std::size_t base) {
  return {static_cast<std::uint32_t>((s.index + base) % (2 * base))};
}
Word conjugate(const Word& w, std::size_t base);

/// Images of all 2n letters under one replacement step.
class RuleTable {
 public:
  RuleTable(std::size_t base, std::vector<Word> images);

  /// Number of base letters (2m for a complexified degree-m system).
  std::size_t base_size() const { return base_; }
  std::size_t alphabet_size() const { return 2 * base_; }
  const Word& image(Symbol s) const { return images_.at(s.index); }
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  std::size_t base_;
  std::vector<Word> images_;
};

/// Column j of m gives the image of base letter j: for rows i ascending,
/// letter i repeated m(i,j) times when positive, conj(i) repeated |m(i,j)|
/// times when negative. Conjugate letters take the conjugated image.
RuleTable derive_rules(const RealBlockMatrix& m);

/// Concatenation of the images of each letter of w, in order.
Word rewrite_word(const RuleTable& rules, const Word& w);

/// As rewrite_word, but returns nullopt instead of building a word longer
/// than length_cap.
std::optional<Word> rewrite_word_capped(const RuleTable& rules, const Word& w, std::size_t length_cap);

/// Deletes min(#k, #conj(k)) occurrences of both k and conj(k), earliest
/// first; survivors keep their order. Counts are unchanged.
Word cancel_conjugates(const Word& w, std::size_t base);

CountVector count(const Word& w, std::size_t base);

/// Word whose count is v: letter k repeated v[k] times, or conj(k) repeated
/// -v[k] times, in ascending k.
Word word_from_counts(const CountVector& v);

struct WordSequence {
  std::vector<Word> words;    // W0 .. Wk, or the completed prefix
  bool cap_exceeded = false;  // the next word would have exceeded length_cap
};

/// W0, R*(W0), R*(R*(W0)), ... with k applications, no cancellation.
WordSequence iterate_words(const RuleTable& rules, const Word& w0, std::size_t k,
                           std::size_t length_cap = kDefaultLengthCap);

/// "0", "1~2", "031312~": decimal index for base letters, "~" suffix for
/// conjugates. Letters are space-separated once the base alphabet exceeds 10.
std::string format_word(const Word& w, std::size_t base);
Word parse_word(std::string_view text, std::size_t base);

/// One "a -> image" line per letter, base letters first.
std::string format_rules(const RuleTable& rules);

}  // namespace replroot
