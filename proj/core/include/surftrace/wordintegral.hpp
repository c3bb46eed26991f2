#pragma once

#include "surftrace/exactnum.hpp"
#include "surftrace/words.hpp"

namespace surftrace {

struct WordIntegralResult {
  RatFuncN value;       // integral of tr(w(x)) over U(n)^r
  RatFuncN normalized;  // value / n
  int degree = kDegNegInf;
};

inline constexpr int kMaxWordIntegralLength = 12;

// Exact for every integer n >= max_f p_f.
WordIntegralResult haar_word_integral(int r, const Word& w);
RatFuncN normalized_trace(int r, const Word& w);

}  // namespace surftrace
