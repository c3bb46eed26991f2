#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "surftrace/exactnum.hpp"
#include "surftrace/layout.hpp"
#include "surftrace/repdata.hpp"
#include "surftrace/symgroup.hpp"
#include "surftrace/words.hpp"

namespace surftrace {

struct MatchingDatum {
  int g = 2;
  int k = 0;
  int l = 0;
  std::vector<Permutation> sigma;  // per generator, degree k + l + p_f
  std::vector<Permutation> tau;
  std::vector<Permutation> pis;    // 4g permutations of degree k + l
};

struct MatchOptions {
  int threads = 1;
  bool unsafe = false;               // lifts the cost guard
  bool allow_general_genus = false;  // g != 2 uses the generic pi wiring
};

inline constexpr double kMatchCostGuard = 1e8;

// Size of the enumeration space: prod_f (m_f!)^2 ((k+l)!)^{4g}, or prod_f m_f! (k! l!)^{4g} for MATCH*.
double match_cost(const Word& w, int k, int l, bool star);

// True when s maps no index of [0,k) into [k,k+l) and no index of [k,k+l) into [0,k).
bool passes_forbidden(const Permutation& s, int k, int l);

// Visits MATCH(w,k,l) (or MATCH*) lexicographically in sigma, then tau, then pi. Returns the count.
uint64_t enumerate_match(const Word& w, int k, int l, bool star,
                         const std::function<void(const MatchingDatum&)>& visit,
                         const MatchOptions& opts = {});

// Number of type-I cycles of the graph built from the datum.
int count_N_exponent(const MatchingDatum& d, const Word& w);
int count_N_exponent(const MatchingDatum& d, const MatchLayout& layout);

// Integer counts of matching data split by the Wg classes of sigma_f tau_f^{-1}, the pi tuple and
// the type-I cycle count. Independent of the label, so one tally serves every label of size (k,l).
struct MatchTally {
  int g = 2, k = 0, l = 0;
  bool star = false;
  std::vector<int> m;                   // k + l + p_f
  std::vector<Permutation> pi_choices;  // allowed pi_t, in index order
  int num_pi_tuples = 0;
  int cmax = 0;
  std::vector<int> class_radix;         // number of Wg classes of S_{m_f}
  // counts[cls][pi_tuple * (cmax+1) + c]; empty vector when the class tuple never occurs
  std::vector<std::vector<int64_t>> counts;
  uint64_t total = 0;
  int max_chi = kDegNegInf;             // max chi(Sigma) over the data
};

const MatchTally& match_tally(const Word& w, int k, int l, bool star, const MatchOptions& opts = {});

struct JResult {
  RatFuncN j;
  RatFuncN dj;
  uint64_t match_count = 0;
  int max_chi = kDegNegInf;
};

// The integral of tr(w(x)) s_label(R_g(x)) over U(n)^{2g} via the combinatorial formula.
// star_only restricts the sum to MATCH*; that value is a separate quantity, not the integral.
JResult j_n(const Word& w, const MixedLabel& label, bool star_only, const MatchOptions& opts = {});
JResult j_from_tally(const MatchTally& tally, const MixedLabel& label);

// zeta_trunc(2g-2; n0)^{-1} sum_{|mu|+|nu| <= max_boxes} D_{[mu,nu]}(n0) J(n0). Heuristic.
Rat assemble_expected_trace(const Word& w, int max_boxes, long n0, const MatchOptions& opts = {});

}  // namespace surftrace
