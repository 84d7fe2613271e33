#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/partition.hpp"
#include "fusionkit/paths.hpp"

namespace fusionkit {

/// Letters of the first block become '(' and letters of the second ')'.
enum class Paren : unsigned char { Left, Right };

struct Letter {
  int label = 0;
  Paren paren = Paren::Left;
  std::optional<Box> box;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Unpaired '(' count and unpaired ')' count.
struct WordType {
  int left = 0;
  int right = 0;

  friend bool operator==(const WordType&, const WordType&) = default;
};

/// The labels of a two-block path sorted increasingly, with brackets by block
/// and the usual parenthesis matching. A label shared by both blocks puts
/// its first-block copy first, so the two copies always pair.
class BracketWord {
 public:
  BracketWord() = default;

  static BracketWord from_labels(std::span<const int> first,
                                 std::span<const int> second) {
    std::vector<Letter> letters;
    for (int x : first) {
      letters.push_back({x, Paren::Left, std::nullopt});
    }
    for (int x : second) {
      letters.push_back({x, Paren::Right, std::nullopt});
    }
    return BracketWord(std::move(letters));
  }

  static BracketWord from_blocks(std::span<const Box> first,
                                 std::span<const Box> second) {
    std::vector<Letter> letters;
    for (Box b : first) {
      letters.push_back({diagonal_label(b), Paren::Left, b});
    }
    for (Box b : second) {
      letters.push_back({diagonal_label(b), Paren::Right, b});
    }
    return BracketWord(std::move(letters));
  }

  /// A word given only by its bracket string; letter i gets label i.
  static BracketWord from_brackets(std::string_view brackets) {
    std::vector<Letter> letters;
    int label = 0;
    for (char c : brackets) {
      if (c != '(' && c != ')') {
        throw InvalidInput("bracket string may only contain '(' and ')'");
      }
      letters.push_back({label++, c == '(' ? Paren::Left : Paren::Right,
                         std::nullopt});
    }
    return BracketWord(std::move(letters));
  }

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
  [[nodiscard]] const Letter& operator[](std::size_t i) const {
    return letters_[i];
  }

  [[nodiscard]] std::optional<std::size_t> partner(std::size_t i) const {
    if (partner_[i] < 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(partner_[i]);
  }
  [[nodiscard]] bool paired(std::size_t i) const { return partner_[i] >= 0; }

  [[nodiscard]] std::vector<std::size_t> unpaired(Paren p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].paren == p && partner_[i] < 0) {
        out.push_back(i);
      }
    }
    return out;
  }

  [[nodiscard]] WordType type() const {
    return {static_cast<int>(unpaired(Paren::Left).size()),
            static_cast<int>(unpaired(Paren::Right).size())};
  }

  /// Position of the letter placed at `b`, if any.
  [[nodiscard]] std::optional<std::size_t> position_of(Box b) const {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].box == b) {
        return i;
      }
    }
    return std::nullopt;
  }

  /// The word with the listed letters moved to the other block.
  [[nodiscard]] BracketWord flipped(std::span<const std::size_t> where) const {
    std::vector<Letter> letters = letters_;
    for (std::size_t i : where) {
      letters[i].paren =
          letters[i].paren == Paren::Left ? Paren::Right : Paren::Left;
    }
    return BracketWord(std::move(letters));
  }

  /// Bracket rendering; the highlighted letter is wrapped as "[)]".
  [[nodiscard]] std::string brackets(
      std::optional<std::size_t> highlight = std::nullopt) const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const char c = letters_[i].paren == Paren::Left ? '(' : ')';
      if (highlight && *highlight == i) {
        out += '[';
        out += c;
        out += ']';
      } else {
        out += c;
      }
    }
    return out;
  }

  /// Splits the boxes back into the two blocks. Requires a word built from
  /// boxes.
  [[nodiscard]] std::pair<Block, Block> blocks() const {
    Block first;
    Block second;
    for (const Letter& l : letters_) {
      if (!l.box) {
        throw InvalidInput("word carries no boxes");
      }
      (l.paren == Paren::Left ? first : second).push_back(*l.box);
    }
    detail::sort_decreasing(first);
    detail::sort_decreasing(second);
    return {std::move(first), std::move(second)};
  }

  friend bool operator==(const BracketWord& a, const BracketWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  explicit BracketWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {
    std::stable_sort(letters_.begin(), letters_.end(),
                     [](const Letter& a, const Letter& b) {
                       if (a.label != b.label) {
                         return a.label < b.label;
                       }
                       return a.paren == Paren::Left && b.paren == Paren::Right;
                     });
    for (std::size_t i = 1; i < letters_.size(); ++i) {
      if (letters_[i].label == letters_[i - 1].label &&
          letters_[i].paren == letters_[i - 1].paren) {
        throw InvalidInput("a label appears twice in one block");
      }
    }
    pair_up();
  }

  void pair_up() {
    partner_.assign(letters_.size(), -1);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_[i].paren == Paren::Left) {
        open.push_back(i);
      } else if (!open.empty()) {
        const std::size_t j = open.back();
        open.pop_back();
        partner_[i] = static_cast<long>(j);
        partner_[j] = static_cast<long>(i);
      }
    }
  }

  std::vector<Letter> letters_;
  std::vector<long> partner_;
};

inline BracketWord word_of(std::span<const int> first_labels,
                           std::span<const int> second_labels) {
  return BracketWord::from_labels(first_labels, second_labels);
}

inline WordType word_type(const BracketWord& w) { return w.type(); }

/// Applies e `times` times: the rightmost unpaired ')' letters become '('.
inline BracketWord raise_e(const BracketWord& w, int times = 1) {
  const auto right = w.unpaired(Paren::Right);
  if (times < 0 || static_cast<std::size_t>(times) > right.size()) {
    throw UndefinedOperator("e needs an unpaired right parenthesis");
  }
  return w.flipped(std::span(right).last(static_cast<std::size_t>(times)));
}

/// Applies f `times` times: the leftmost unpaired '(' letters become ')'.
inline BracketWord lower_f(const BracketWord& w, int times = 1) {
  const auto left = w.unpaired(Paren::Left);
  if (times < 0 || static_cast<std::size_t>(times) > left.size()) {
    throw UndefinedOperator("f needs an unpaired left parenthesis");
  }
  return w.flipped(std::span(left).first(static_cast<std::size_t>(times)));
}

/// e^d for d > 0, f^(-d) for d < 0.
inline BracketWord crystal_power(const BracketWord& w, int d) {
  return d >= 0 ? raise_e(w, d) : lower_f(w, -d);
}

/// True when no adjacent pair of blocks leaves a ')' unpaired.
inline bool fits_blocks(const LatticePath& path) {
  for (int i = 0; i + 1 < path.block_count(); ++i) {
    if (BracketWord::from_blocks(path.block(i), path.block(i + 1))
            .type()
            .right > 0) {
      return false;
    }
  }
  return true;
}

/// The path fits mu: its blocks, read as the columns of mu, form a
/// column-strict tableau.
inline bool fits(const LatticePath& path, const Partition& mu) {
  if (path.ascents() != conjugate(mu).parts()) {
    throw InvalidInput("fits: path blocks do not have the column lengths of mu");
  }
  return fits_blocks(path);
}

}  // namespace fusionkit
