#include "replroot/rewrite.hpp"

#include <cctype>

#include "replroot/polynomial.hpp"

namespace replroot {

namespace {

void check_symbols(const Word& w, std::size_t alphabet) {
  for (Symbol s : w) {
    if (s.index >= alphabet) {
      throw Error("symbol " + std::to_string(s.index) + " outside alphabet of size " +
                  std::to_string(alphabet));
    }
  }
}

std::string format_symbol(Symbol s, std::size_t base) {
  if (s.index < base) return std::to_string(s.index);
  return std::to_string(s.index - base) + "~";
}

}  // namespace

Word conjugate(const Word& w, std::size_t base) {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(conjugate(s, base));
  return out;
}

RuleTable::RuleTable(std::size_t base, std::vector<Word> images) : base_(base), images_(std::move(images)) {
  if (images_.size() != 2 * base_) throw DimensionMismatch("rule table needs one image per letter");
  for (const Word& w : images_) check_symbols(w, 2 * base_);
}

RuleTable derive_rules(const RealBlockMatrix& m) {
  const std::size_t base = m.dim();
  std::vector<Word> images(2 * base);
  for (std::size_t col = 0; col < base; ++col) {
    Word& image = images[col];
    for (std::size_t row = 0; row < base; ++row) {
      const BigInt& entry = m(row, col);
      if (entry.is_zero()) continue;
      const Symbol letter{static_cast<std::uint32_t>(entry > 0 ? row : row + base)};
      const auto reps = boost::multiprecision::abs(entry).convert_to<std::size_t>();
      image.insert(image.end(), reps, letter);
    }
    images[col + base] = conjugate(image, base);
  }
  return RuleTable(base, std::move(images));
}

std::optional<Word> rewrite_word_capped(const RuleTable& rules, const Word& w, std::size_t length_cap) {
  check_symbols(w, rules.alphabet_size());
  std::size_t length = 0;
  for (Symbol s : w) {
    length += rules.image(s).size();
    if (length > length_cap) return std::nullopt;
  }
  Word out;
  out.reserve(length);
  for (Symbol s : w) {
    const Word& image = rules.image(s);
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

Word rewrite_word(const RuleTable& rules, const Word& w) {
  return *rewrite_word_capped(rules, w, static_cast<std::size_t>(-1));
}

Word cancel_conjugates(const Word& w, std::size_t base) {
  check_symbols(w, 2 * base);
  std::vector<std::size_t> occurrences(2 * base, 0);
  for (Symbol s : w) ++occurrences[s.index];
  // pending[k] = how many more copies of letter k are still to be deleted
  std::vector<std::size_t> pending(2 * base, 0);
  for (std::size_t k = 0; k < base; ++k) {
    const std::size_t pairs = std::min(occurrences[k], occurrences[k + base]);
    pending[k] = pending[k + base] = pairs;
  }
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (pending[s.index] > 0) {
      --pending[s.index];
    } else {
      out.push_back(s);
    }
  }
  return out;
}

CountVector count(const Word& w, std::size_t base) {
  check_symbols(w, 2 * base);
  std::vector<long long> net(base, 0);
  for (Symbol s : w) {
    if (s.index < base) {
      ++net[s.index];
    } else {
      --net[s.index - base];
    }
  }
  return CountVector(net.begin(), net.end());
}

Word word_from_counts(const CountVector& v) {
  const std::size_t base = v.size();
  Word out;
  for (std::size_t k = 0; k < base; ++k) {
    const Symbol letter{static_cast<std::uint32_t>(v[k] >= 0 ? k : k + base)};
    out.insert(out.end(), boost::multiprecision::abs(v[k]).convert_to<std::size_t>(), letter);
  }
  return out;
}

WordSequence iterate_words(const RuleTable& rules, const Word& w0, std::size_t k, std::size_t length_cap) {
  WordSequence seq;
  seq.words.push_back(w0);
  for (std::size_t step = 0; step < k; ++step) {
    auto next = rewrite_word_capped(rules, seq.words.back(), length_cap);
    if (!next) {
      seq.cap_exceeded = true;
      break;
    }
    seq.words.push_back(std::move(*next));
  }
  return seq;
}

std::string format_word(const Word& w, std::size_t base) {
  const bool spaced = base > 10;
  std::string out;
  for (Symbol s : w) {
    if (spaced && !out.empty()) out += ' ';
    out += format_symbol(s, base);
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t base) {
  Word out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError(pos, "expected symbol index");
    const std::size_t start = pos;
    std::size_t index = 0;
    // Short alphabets print letters without separators, so read one digit.
    const std::size_t max_digits = base > 10 ? 20 : 1;
    while (pos < text.size() && pos - start < max_digits && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + static_cast<std::size_t>(text[pos] - '0');
      ++pos;
    }
    if (index >= base) throw ParseError(start, "symbol index out of range");
    if (pos < text.size() && text[pos] == '~') {
      index += base;
      ++pos;
    }
    out.push_back(Symbol{static_cast<std::uint32_t>(index)});
    skip_ws();
  }
  return out;
}

std::string format_rules(const RuleTable& rules) {
  std::string out;
  const std::size_t base = rules.base_size();
  for (std::uint32_t k = 0; k < rules.alphabet_size(); ++k) {
    const Symbol s{k};
    out += format_symbol(s, base) + " -> " + format_word(rules.image(s), base) + "\n";
  }
  return out;
}

}  // namespace replroot
