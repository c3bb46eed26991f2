#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace surftrace {

struct Letter {
  int gen = 0;   // 0-based generator index
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.sign == b.sign; }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  Letter inverse() const { return {gen, -sign}; }
};

// Freely reduced word in the free group of the given rank. For surface-group work the rank is
// 2g and generator 2i is a_{i+1}, generator 2i+1 is b_{i+1}.
class Word {
 public:
  explicit Word(int rank = 4) : rank_(rank) {}
  Word(int rank, std::vector<Letter> letters);  // freely reduces

  int rank() const { return rank_; }
  int genus() const { return rank_ / 2; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](int i) const { return letters_[i]; }

  Word inverse() const;
  Word rotated(int shift) const;  // starts at letter `shift`
  bool is_cyclically_reduced() const;
  std::vector<int> exponent_sums() const;
  std::vector<int> positive_counts() const;  // p_f: occurrences of f^{+1}
  std::string to_string() const;             // compact letters a,b,c,... / A,B,C,...
  std::string to_token_string() const;       // "a1 b1 -a1 -b1"
  std::string key() const;                   // compact byte encoding for hashing

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  int rank_;
  std::vector<Letter> letters_;
};

// Surface-group words of genus g (rank 2g).
Word parse_word(std::string_view text, int g);
// Free-group words of rank r; same syntax.
Word parse_free_word(std::string_view text, int r);

Word relator(int g);  // R_g = [a1,b1]...[ag,bg]
Word cyclic_reduce(const Word& w);
bool in_commutator_subgroup(const Word& w);

// Greedy Dehn rewriting: while the cyclic word contains a subword of length >= 2g+1 that is a
// subword of a cyclic rotation of R_g^{+-1}, replace it (leftmost start, longest match) by the
// inverse of the complementary part of that rotation, then freely reduce.
Word dehn_shorten(const Word& w);
bool is_shortest_conj_rep(const Word& w);
// Fixed point of cyclic reduction and Dehn rewriting.
Word shortest_conj_rep(const Word& w);

// Lexicographically least rotation of a cyclically reduced word (conjugacy key in the free group).
Word min_rotation(const Word& w);

}  // namespace surftrace
