#include <doctest.h>

#include "surftrace/matchenum.hpp"
#include "surftrace/surfacegeom.hpp"
#include "surftrace/words.hpp"

using namespace surftrace;

namespace {

Word W(const char* s) { return parse_word(s, 2); }

std::vector<MatchingDatum> collect(const Word& w, int k, int l, bool star) {
  std::vector<MatchingDatum> out;
  enumerate_match(w, k, l, star, [&](const MatchingDatum& d) { out.push_back(d); });
  return out;
}

}  // namespace

TEST_SUITE("surfacegeom") {

TEST_CASE("identity datum of the commutator") {
  Word w = W("abAB");
  MatchingDatum d = collect(w, 1, 0, false).front();
  for (const auto& s : d.sigma) CHECK(s.is_identity());
  DecoratedSurface s = build_surface(d, w);
  CHECK(s.chi_graph == -12);
  CHECK(s.chi == -12 + static_cast<int>(s.type1.size() + s.type2.size()));
  CHECK(static_cast<int>(s.type1.size()) == count_N_exponent(d, w));
}

TEST_CASE("graph Euler characteristic law") {
  Word w = W("abAB");
  for (auto [k, l] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 0}})
    for (const auto& d : collect(w, k, l, true)) {
      DecoratedSurface s = build_surface(d, w);
      CHECK(s.chi_graph == -(w.size() + 8 * (k + l)));
      CHECK(s.orientable);
      CHECK(static_cast<int>(s.type1.size()) == count_N_exponent(d, w));
    }
}

TEST_CASE("k = 1 gives one R-loop reading R once") {
  Word w = W("abAB");
  auto data = collect(w, 1, 0, true);
  CHECK(data.size() == 4);
  for (const auto& d : data) {
    DecoratedSurface s = build_surface(d, w);
    int r_loops = 0, w_loops = 0;
    for (const auto& L : s.loops) {
      if (L.type == LoopType::R) {
        ++r_loops;
        CHECK(L.power == 1);
        CHECK(Word(4, L.reading).size() == 8);
      }
      if (L.type == LoopType::W) ++w_loops;
      CHECK(L.type != LoopType::Mixed);
    }
    CHECK(r_loops == 1);
    CHECK(w_loops == 1);
  }
}

TEST_CASE("collapse census and properties") {
  Word w = W("abAB");
  for (auto [k, l] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{0, 2}})
    for (const auto& d : collect(w, k, l, true)) {
      DecoratedSurface s = build_surface(d, w);
      CollapsedSurface c = collapse(s);
      CHECK(c.chi == s.chi);
      CHECK(2 * c.n_rr + c.n_wr == 8 * (k + l));
      CHECK(c.n_wr + 2 * c.n_ww == w.size());
      for (const auto& p : piece_decomposition(c)) CHECK(piece_inequality_holds(p, 2));
    }
}

TEST_CASE("single WR-arc piece") {
  Piece p;
  p.e_count = 1;
  p.he_count = 0;
  p.chi = 1;
  CHECK(piece_inequality_holds(p, 2));
  p.e_count = 5;
  CHECK_FALSE(piece_inequality_holds(p, 2));
}

TEST_CASE("euler characteristic bound over MATCH*") {
  CHECK(max_chi_over_matchstar(W("abAB"), 1, 0) <= -1);
  CHECK(max_chi_over_matchstar(W("abAB"), 1, 1) <= -2);
  CHECK(max_chi_over_matchstar(relator(2), 0, 1) == 0);
  ChiCheckReport r = chi_check(W("abAB"), 1, 0);
  CHECK(r.count == 4);
  CHECK(r.max_chi == -4);
  CHECK(r.chi_bound_violations == 0);
  CHECK(r.piece_violations == 0);
  uint64_t hist = 0;
  for (auto [chi, c] : r.chi_histogram) hist += c;
  CHECK(hist == r.count);
}

TEST_CASE("the relator itself is flagged") {
  ChiCheckReport r = chi_check(relator(2), 0, 1);
  CHECK(r.max_chi == 0);
  CHECK(r.chi_bound_violations > 0);
  CHECK_FALSE(r.dumps.empty());
}

TEST_CASE("datum serialization") {
  Word w = W("abAB");
  std::string js = datum_to_json(collect(w, 1, 0, true).front(), w);
  CHECK(js.find("\"sigma\"") != std::string::npos);
  CHECK(js.find("abAB") != std::string::npos);
}

}  // TEST_SUITE
