#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "surftrace/repdata.hpp"
#include "surftrace/words.hpp"

namespace surftrace {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Philox4x32-10 counter-based generator. Key = seed, counter = (block counter, stream).
class Philox4x32 {
 public:
  Philox4x32(uint64_t seed, uint64_t stream);
  std::array<uint32_t, 4> next_block();
  double uniform();  // in (0, 1)
  double normal();   // Box-Muller

 private:
  std::array<uint32_t, 2> key_;
  std::array<uint32_t, 4> ctr_;
  std::array<uint32_t, 4> buf_{};
  int used_ = 4;
  double spare_ = 0;
  bool has_spare_ = false;
};

struct HaarSampler {
  uint64_t seed = 0;
  int n = 1;
  Philox4x32 rng;
  HaarSampler(uint64_t seed_, int n_, uint64_t stream = 0) : seed(seed_), n(n_), rng(seed_, stream) {}
};

// Ginibre matrix, QR, phases of diag(R) moved into Q.
CMatrix haar_sample(int n, HaarSampler& sampler);

struct McEstimate {
  cplx mean;
  double std_error = 0;
  uint64_t samples = 0;
};

inline constexpr int kMcMaxN = 256;
inline constexpr uint64_t kMcMaxSamples = 10'000'000;
inline constexpr uint64_t kMcBlock = 1024;  // samples per RNG stream

CMatrix eval_word(const Word& w, const std::vector<CMatrix>& x, int n);

McEstimate mc_word_trace(int r, const Word& w, int n, uint64_t samples, uint64_t seed, int threads = 1);

// Character of the mixed irrep [mu, nu] at U. Weyl determinant ratio when the spectrum is well
// separated, otherwise the branching rule for the shifted Schur polynomial.
cplx mixed_character(const MixedLabel& label, const CMatrix& U);
cplx mixed_character_eigen(const MixedLabel& label, const std::vector<cplx>& eig);

// Estimates the integral of tr(w(x)) s_label(R_g(x)), the same quantity as j_n.
McEstimate mc_j(const Word& w, const MixedLabel& label, int n, uint64_t samples, uint64_t seed, int threads = 1);

}  // namespace surftrace
