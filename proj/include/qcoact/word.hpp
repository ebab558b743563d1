#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qcoact {

/// One generator occurrence: z_index or z_index^*.
struct Letter {
  std::uint8_t index = 0;
  bool starred = false;

  Letter star() const { return {index, !starred}; }

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.index == b.index && a.starred == b.starred;
  }
  friend auto operator<=>(const Letter& a, const Letter& b) {
    if (a.starred != b.starred) return a.starred <=> b.starred;
    return a.index <=> b.index;
  }
};

/// Finite product of letters; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}

  static Word gen(std::uint8_t index, bool starred = false) {
    return Word({Letter{index, starred}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& at(std::size_t i) const { return letters_[i]; }

  Word concat(const Word& o) const {
    Word r = *this;
    r.letters_.insert(r.letters_.end(), o.letters_.begin(), o.letters_.end());
    return r;
  }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }

  /// Reversal with every star flag flipped.
  Word adjoint() const {
    Word r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(it->star());
    return r;
  }

  std::uint8_t max_index() const {
    std::uint8_t m = 0;
    for (const auto& l : letters_)
      if (l.index > m) m = l.index;
    return m;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Letter> letters_;
};

/// Degree-lexicographic order on words from a letter precedence. The default
/// precedence puts every starred letter above every plain one, rises with the
/// index on plain letters and falls with it on starred ones, so oriented
/// rewriting sorts plain letters ascending and starred letters descending.
class TermOrder {
 public:
  TermOrder() = default;
  /// Custom plain-letter precedence: rank_of_plain[i] replaces i.
  explicit TermOrder(std::vector<int> rank_of_plain) : plain_rank_(std::move(rank_of_plain)) {}

  long letter_rank(const Letter& l) const {
    long base = plain_rank_.empty() ? l.index : plain_rank_[l.index];
    return l.starred ? (1'000'000 - base) : base;
  }

  /// Strict comparison: true when a < b.
  bool less(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.degree(); ++i) {
      long ra = letter_rank(a.at(i)), rb = letter_rank(b.at(i));
      if (ra != rb) return ra < rb;
    }
    return false;
  }

  bool is_default() const { return plain_rank_.empty(); }
  const std::vector<int>& plain_ranks() const { return plain_rank_; }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.plain_rank_ == b.plain_rank_;
  }

 private:
  std::vector<int> plain_rank_;
};

/// Canonical storage order for term maps: the default TermOrder.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    static const TermOrder def;
    return def.less(a, b);
  }
};

}  // namespace qcoact
