#pragma once

#include <cstdint>
#include <vector>

#include "surftrace/words.hpp"

namespace surftrace {

enum class IntervalKind : uint8_t { W, R, Rinv };

// One matrix-entry interval. For W intervals `pos` is the letter position in w; for R and Rinv
// intervals it is the letter position t in R_g (an Rinv interval carries the inverse of R's
// letter t) and `copy` is the tensor slot (0..k-1 for R, 0..l-1 for Rinv).
struct Interval {
  IntervalKind kind;
  int gen;
  int sign;
  int pos;
  int copy;
};

// A family of k (or l) R-side intervals: all copies sharing a letter.
struct IntervalFamily {
  IntervalKind kind;  // R or Rinv
  int gen;
  int sign;
  friend bool operator==(const IntervalFamily& a, const IntervalFamily& b) {
    return a.kind == b.kind && a.gen == b.gen && a.sign == b.sign;
  }
};

// pi_t maps 0-ends of (dom_r copies, dom_rinv copies) to 1-ends of (cod_r, cod_rinv).
struct PiWiring {
  IntervalFamily dom_r, dom_rinv, cod_r, cod_rinv;
  friend bool operator==(const PiWiring& a, const PiWiring& b) {
    return a.dom_r == b.dom_r && a.dom_rinv == b.dom_rinv && a.cod_r == b.cod_r &&
           a.cod_rinv == b.cod_rinv;
  }
};

// The eight maps pi_1..pi_8 for g = 2, written out letter by letter.
const std::vector<PiWiring>& pi_wiring_table_g2();
// Cyclic rule valid for every g: pi_t joins 0-ends of R(t+1), Rinv(t) to 1-ends of R(t), Rinv(t+1).
std::vector<PiWiring> pi_wiring_generic(int g);

// Interval/endpoint bookkeeping for a triple (w, k, l). Endpoint e = 2*interval + end.
struct MatchLayout {
  int g = 0, k = 0, l = 0;
  Word w;
  std::vector<Interval> intervals;
  std::vector<int> p;                      // p_f
  std::vector<int> m;                      // k + l + p_f
  std::vector<std::vector<int>> plus;      // per f, block order: R, Rinv, w occurrences
  std::vector<std::vector<int>> minus;
  std::vector<std::vector<int>> pi_dom;    // per t, endpoint of each domain slot
  std::vector<std::vector<int>> pi_cod;    // per t, endpoint of each codomain slot
  std::vector<std::pair<int, int>> w_links;  // w-intermediate connectors (1-end, next 0-end)

  int num_intervals() const { return static_cast<int>(intervals.size()); }
  int num_endpoints() const { return 2 * num_intervals(); }
  int num_pis() const { return 4 * g; }
  static int endpoint(int interval, int end) { return 2 * interval + end; }

  // Index of the R interval at letter t, copy c (and likewise for Rinv).
  int r_interval(int t, int c) const;
  int rinv_interval(int t, int c) const;
};

// The g = 2 layout always uses the transcribed table; other genera use the generic rule.
MatchLayout make_layout(const Word& w, int k, int l);

}  // namespace surftrace
