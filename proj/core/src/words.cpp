#include "surftrace/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <unordered_map>

#include "surftrace/errors.hpp"

namespace surftrace {

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const auto& x : in) {
    if (!out.empty() && out.back().gen == x.gen && out.back().sign == -x.sign)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

char encode(const Letter& x) { return static_cast<char>(2 * x.gen + (x.sign < 0 ? 1 : 0)); }

Word parse_with_rank(std::string_view text, int rank, bool genus_mode) {
  if (rank < 1) throw DomainError("word rank must be positive");
  bool token_mode = std::any_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  std::vector<Letter> letters;
  if (token_mode) {
    size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.' || c == '*') {
        ++i;
        continue;
      }
      int sign = 1;
      if (c == '-') {
        sign = -1;
        ++i;
        if (i >= text.size()) throw DomainError("dangling '-' in word");
        c = text[i];
      }
      if (c != 'a' && c != 'b') throw DomainError(std::string("unknown token starting with '") + c + "'");
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw DomainError("generator token needs an index, e.g. a1");
      int idx = std::stoi(std::string(text.substr(start, i - start)));
      int gen = 2 * (idx - 1) + (c == 'b' ? 1 : 0);
      if (idx < 1 || gen >= rank)
        throw DomainError(std::string("generator ") + c + std::to_string(idx) + " exceeds " +
                          (genus_mode ? "genus " + std::to_string(rank / 2) : "rank " + std::to_string(rank)));
      letters.push_back({gen, sign});
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isalpha(static_cast<unsigned char>(c))) throw DomainError(std::string("unknown token '") + c + "'");
      int gen = std::tolower(static_cast<unsigned char>(c)) - 'a';
      if (gen >= rank) throw DomainError(std::string("unknown token '") + c + "' for rank " + std::to_string(rank));
      letters.push_back({gen, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1});
    }
  }
  return Word(rank, std::move(letters));
}

struct PieceTable {
  // cyclic subword of R^{+-1} (encoded) -> replacement (inverse of the complement)
  std::unordered_map<std::string, std::vector<Letter>> pieces;
  int min_len = 0;
  int max_len = 0;
};

const PieceTable& piece_table(int g) {
  static std::mutex mu;
  static std::map<int, PieceTable> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(g);
  if (it != tables.end()) return it->second;
  PieceTable t;
  t.min_len = 2 * g + 1;
  t.max_len = 4 * g;
  Word r = relator(g);
  for (const Word& base : {r, r.inverse()}) {
    int len = base.size();
    for (int s = 0; s < len; ++s) {
      Word rot = base.rotated(s);
      for (int L = t.min_len; L <= len; ++L) {
        std::string key;
        for (int i = 0; i < L; ++i) key.push_back(encode(rot[i]));
        // rot = u v with u the first L letters; u = v^{-1} in the surface group.
        std::vector<Letter> repl;
        for (int i = len - 1; i >= L; --i) repl.push_back(rot[i].inverse());
        t.pieces.emplace(key, std::move(repl));
      }
    }
  }
  return tables.emplace(g, std::move(t)).first->second;
}

struct Match {
  int start = -1;
  int len = 0;
  const std::vector<Letter>* repl = nullptr;
};

Match find_piece(const Word& w, const PieceTable& t) {
  int n = w.size();
  for (int i = 0; i < n; ++i) {
    for (int L = std::min(t.max_len, n); L >= t.min_len; --L) {
      std::string key;
      key.reserve(L);
      for (int j = 0; j < L; ++j) key.push_back(encode(w[(i + j) % n]));
      auto it = t.pieces.find(key);
      if (it != t.pieces.end()) return {i, L, &it->second};
    }
  }
  return {};
}

}  // namespace

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank) {
  for (const auto& x : letters) {
    if (x.gen < 0 || x.gen >= rank) throw DomainError("letter generator out of range");
    if (x.sign != 1 && x.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
  letters_ = free_reduce(letters);
}

Word Word::inverse() const {
  std::vector<Letter> inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
  return Word(rank_, std::move(inv));
}

Word Word::rotated(int shift) const {
  int n = size();
  if (n == 0) return *this;
  shift = ((shift % n) + n) % n;
  std::vector<Letter> r(letters_.begin() + shift, letters_.end());
  r.insert(r.end(), letters_.begin(), letters_.begin() + shift);
  return Word(rank_, std::move(r));
}

bool Word::is_cyclically_reduced() const {
  return size() < 2 || letters_.front() != letters_.back().inverse();
}

std::vector<int> Word::exponent_sums() const {
  std::vector<int> s(rank_, 0);
  for (const auto& x : letters_) s[x.gen] += x.sign;
  return s;
}

std::vector<int> Word::positive_counts() const {
  std::vector<int> s(rank_, 0);
  for (const auto& x : letters_)
    if (x.sign > 0) s[x.gen]++;
  return s;
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& x : letters_) {
    char c = static_cast<char>('a' + x.gen);
    s.push_back(x.sign > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return s;
}

std::string Word::to_token_string() const {
  std::string s;
  for (const auto& x : letters_) {
    if (!s.empty()) s += ' ';
    if (x.sign < 0) s += '-';
    s += (x.gen % 2 == 0 ? 'a' : 'b');
    s += std::to_string(x.gen / 2 + 1);
  }
  return s;
}

std::string Word::key() const {
  std::string k;
  for (const auto& x : letters_) k.push_back(encode(x));
  return k;
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_) throw DomainError("word rank mismatch");
  std::vector<Letter> c = a.letters_;
  c.insert(c.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.rank_, std::move(c));
}

Word parse_word(std::string_view text, int g) {
  if (g < 1) throw DomainError("genus must be at least 1");
  return parse_with_rank(text, 2 * g, true);
}

Word parse_free_word(std::string_view text, int r) { return parse_with_rank(text, r, false); }

Word relator(int g) {
  std::vector<Letter> r;
  for (int i = 0; i < g; ++i) {
    r.push_back({2 * i, 1});
    r.push_back({2 * i + 1, 1});
    r.push_back({2 * i, -1});
    r.push_back({2 * i + 1, -1});
  }
  return Word(2 * g, std::move(r));
}

Word cyclic_reduce(const Word& w) {
  const auto& L = w.letters();
  size_t lo = 0, hi = L.size();
  while (hi - lo >= 2 && L[lo] == L[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(w.rank(), std::vector<Letter>(L.begin() + lo, L.begin() + hi));
}

bool in_commutator_subgroup(const Word& w) {
  for (int s : w.exponent_sums())
    if (s != 0) return false;
  return true;
}

Word dehn_shorten(const Word& w) {
  if (w.rank() % 2 != 0) throw DomainError("dehn_shorten needs a surface-group word (even rank)");
  const PieceTable& t = piece_table(w.genus());
  Word cur = w;
  while (true) {
    Match m = find_piece(cur, t);
    if (m.start < 0) return cur;
    int n = cur.size();
    std::vector<Letter> next;
    if (m.start + m.len <= n) {
      next.assign(cur.letters().begin(), cur.letters().begin() + m.start);
      next.insert(next.end(), m.repl->begin(), m.repl->end());
      next.insert(next.end(), cur.letters().begin() + m.start + m.len, cur.letters().end());
    } else {
      // The match wraps around; continue from its rotation.
      Word rot = cur.rotated(m.start);
      next = *m.repl;
      next.insert(next.end(), rot.letters().begin() + m.len, rot.letters().end());
    }
    cur = Word(cur.rank(), std::move(next));
  }
}

bool is_shortest_conj_rep(const Word& w) {
  if (w.rank() % 2 != 0) throw DomainError("is_shortest_conj_rep needs a surface-group word");
  if (!w.is_cyclically_reduced()) return false;
  return find_piece(w, piece_table(w.genus())).start < 0;
}

Word shortest_conj_rep(const Word& w) {
  Word cur = cyclic_reduce(w);
  while (true) {
    Word next = cyclic_reduce(dehn_shorten(cur));
    if (next == cur) return cur;
    cur = next;
  }
}

Word min_rotation(const Word& w) {
  Word best = w;
  std::string bk = w.key();
  for (int s = 1; s < w.size(); ++s) {
    Word r = w.rotated(s);
    std::string k = r.key();
    if (k < bk) {
      bk = k;
      best = r;
    }
  }
  return best;
}

}  // namespace surftrace
