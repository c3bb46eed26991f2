#include <doctest.h>

#include <random>

#include "support.hpp"
#include "surftrace/errors.hpp"
#include "surftrace/words.hpp"

using namespace surftrace;

namespace {

// All freely reduced words of length exactly len over 2g letters, as strings.
std::vector<std::string> reduced_words(int g, int len) {
  std::string alphabet;
  for (int i = 0; i < 2 * g; ++i) alphabet += static_cast<char>('a' + i);
  for (int i = 0; i < 2 * g; ++i) alphabet += static_cast<char>('A' + i);
  std::vector<std::string> out{""};
  for (int step = 0; step < len; ++step) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : alphabet)
        if (s.empty() || s.back() != testsupport::inv_char(c)) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("parsing") {
  Word w = parse_word("abAB", 2);
  CHECK(w.size() == 4);
  CHECK(w[2] == Letter{0, -1});
  CHECK(parse_word("a1 b1 -a1 -b1", 2) == w);
  CHECK(parse_word("a1 -a1", 3).empty());
  CHECK_THROWS_AS(parse_word("e", 2), DomainError);
  CHECK_THROWS_AS(parse_word("a3", 2), DomainError);
  CHECK(parse_free_word("aA", 1).empty());
  CHECK(w.to_token_string() == "a1 b1 -a1 -b1");
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclic_reduce(parse_free_word("abA", 2)) == parse_free_word("b", 2));
  CHECK(cyclic_reduce(parse_word("abAB", 2)) == parse_word("abAB", 2));
  CHECK(cyclic_reduce(Word(4)).empty());
  for (const auto& s : reduced_words(1, 5)) {
    Word c = cyclic_reduce(parse_free_word(s, 2));
    CHECK(c.is_cyclically_reduced());
    CHECK(testsupport::cyclic_canon(c.to_string()) == testsupport::cyclic_canon(s));
  }
}

TEST_CASE("commutator subgroup membership") {
  CHECK(in_commutator_subgroup(parse_word("abAB", 2)));
  CHECK_FALSE(in_commutator_subgroup(parse_word("a", 2)));
  CHECK(in_commutator_subgroup(relator(2)));
  CHECK(in_commutator_subgroup(relator(3)));
  CHECK_FALSE(in_commutator_subgroup(parse_word("aabAB", 2)));
}

TEST_CASE("relator") {
  CHECK(relator(2).to_string() == "abABcdCD");
  CHECK(relator(1).to_string() == "abAB");
}

TEST_CASE("dehn examples") {
  CHECK(dehn_shorten(relator(2)).empty());
  CHECK(dehn_shorten(parse_word("abABc", 2)).to_string() == "dcD");
  CHECK(dehn_shorten(parse_word("abAB", 2)).to_string() == "abAB");
  CHECK(dehn_shorten(relator(2).inverse()).empty());
  CHECK(testsupport::conjugate_by_search("abABc", "dcD", "abABcdCD"));
}

TEST_CASE("shortest representative predicate") {
  CHECK(is_shortest_conj_rep(parse_word("abAB", 2)));
  CHECK_FALSE(is_shortest_conj_rep(parse_word("abABc", 2)));
  CHECK_FALSE(is_shortest_conj_rep(relator(2)));
  CHECK(shortest_conj_rep(parse_word("abABc", 2)).to_string() == "c");
  CHECK(shortest_conj_rep(relator(2)).empty());
}

TEST_CASE("every dehn rewrite of a short word is certified conjugate in the surface group") {
  const std::string rel = relator(2).to_string();
  int rewritten = 0;
  for (int len = 1; len <= 6; ++len)
    for (const auto& s : reduced_words(2, len)) {
      Word w = parse_free_word(s, 4);
      Word d = dehn_shorten(w);
      if (d.to_string() == s) continue;
      ++rewritten;
      CHECK(d.size() < w.size());
      INFO(s << " -> " << d.to_string());
      CHECK(testsupport::conjugate_by_search(s, d.to_string(), rel));
    }
  CHECK(rewritten > 0);
}

TEST_CASE("small-radius search finds no shorter conjugate than the reported one") {
  const std::string rel = relator(2).to_string();
  for (int len = 1; len <= 4; ++len)
    for (const auto& s : reduced_words(2, len)) {
      if (testsupport::cyclic_canon(s).size() != s.size()) continue;
      Word rep = shortest_conj_rep(parse_free_word(s, 4));
      auto ball = testsupport::relator_moves(s, rel, 14);
      for (const auto& x : ball) {
        INFO(s << " conjugate " << x);
        CHECK(static_cast<int>(x.size()) >= rep.size());
      }
    }
}

TEST_CASE("dehn is idempotent on random words") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 24), gen(0, 3), sgn(0, 1);
  for (int it = 0; it < 200; ++it) {
    std::vector<Letter> v;
    int L = len(rng);
    for (int i = 0; i < L; ++i) v.push_back({gen(rng), sgn(rng) ? 1 : -1});
    Word w(4, v);
    Word d = dehn_shorten(w);
    CHECK(dehn_shorten(d) == d);
    CHECK(d.size() <= w.size());
    CHECK(in_commutator_subgroup(d) == in_commutator_subgroup(w));
  }
}

}  // TEST_SUITE
