#pragma once

#include <vector>

#include "surftrace/exactnum.hpp"
#include "surftrace/repdata.hpp"
#include "surftrace/words.hpp"

// Fixed-n evaluators that share no code path with the rational-function pipeline: the Weingarten
// function comes from inverting the Gram matrix of permutation operators, characters are expanded
// into power sums, and index loops are counted directly on the trace words.
namespace surftrace::crosscheck {

// Wg_{n0,m}(s) for every s in S_m, indexed by Permutation::rank(). Needs n0 >= m.
std::vector<Rat> weingarten_gram(int m, long n0);

// Integral over U(n0)^r of tr(words[0]) tr(words[1]) ...
Rat multitrace_integral(int r, const std::vector<Word>& words, long n0);

// Integral of tr(w(x)) s_label(R_g(x)) at n0. Supports [mu, 0], [0, nu] and [(1),(1)].
Rat j_oracle(const Word& w, const MixedLabel& label, long n0);

}  // namespace surftrace::crosscheck
