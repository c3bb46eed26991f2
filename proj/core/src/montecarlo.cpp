#include "surftrace/montecarlo.hpp"

#include <cmath>
#include <map>
#include <thread>

#include "surftrace/errors.hpp"

namespace surftrace {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

struct Kahan {
  double sum = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

struct BlockSums {
  Kahan re, im, sq;
  uint64_t count = 0;
  void add(cplx x) {
    re.add(x.real());
    im.add(x.imag());
    sq.add(std::norm(x));
    ++count;
  }
};

void check_mc(int n, uint64_t samples) {
  if (n < 1 || n > kMcMaxN) throw GuardError("Monte Carlo dimension must be in [1, 256]");
  if (samples < 2 || samples > kMcMaxSamples) throw GuardError("Monte Carlo samples must be in [2, 1e7]");
}

// Blocks of kMcBlock samples each draw from their own stream; merging in block order keeps the
// result independent of the thread count.
template <class F>
McEstimate run_blocks(uint64_t samples, uint64_t seed, int threads, const F& one_sample) {
  const uint64_t nblocks = (samples + kMcBlock - 1) / kMcBlock;
  std::vector<BlockSums> sums(nblocks);
  auto do_block = [&](uint64_t b) {
    Philox4x32 rng(seed, b);
    uint64_t count = std::min(kMcBlock, samples - b * kMcBlock);
    for (uint64_t i = 0; i < count; ++i) sums[b].add(one_sample(rng));
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    for (uint64_t b = 0; b < nblocks; ++b) do_block(b);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (uint64_t b = t; b < nblocks; b += threads) do_block(b);
      });
    for (auto& th : pool) th.join();
  }
  Kahan re, im, sq;
  for (const auto& s : sums) {
    re.add(s.re.sum);
    im.add(s.im.sum);
    sq.add(s.sq.sum);
  }
  const double N = static_cast<double>(samples);
  McEstimate est;
  est.samples = samples;
  est.mean = cplx(re.sum / N, im.sum / N);
  double var = (sq.sum / N - std::norm(est.mean)) * N / (N - 1);
  est.std_error = std::sqrt(std::max(var, 0.0) / N);
  return est;
}

CMatrix sample_with(int n, Philox4x32& rng) {
  CMatrix G(n, n);
  const double s = std::sqrt(0.5);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double a = rng.normal();
      double b = rng.normal();
      G(i, j) = cplx(a * s, b * s);
    }
  Eigen::HouseholderQR<CMatrix> qr(G);
  CMatrix Q = qr.householderQ();
  const CMatrix& R = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    cplx d = R(j, j);
    double m = std::abs(d);
    Q.col(j) *= (m > 0 ? d / m : cplx(1, 0));
  }
  return Q;
}

cplx log_det(const CMatrix& A, bool& ok) {
  Eigen::PartialPivLU<CMatrix> lu(A);
  cplx acc(0, 0);
  const auto& M = lu.matrixLU();
  for (int i = 0; i < A.rows(); ++i) {
    cplx d = M(i, i);
    if (std::abs(d) == 0) {
      ok = false;
      return acc;
    }
    acc += std::log(d);
  }
  if (lu.permutationP().determinant() < 0) acc += cplx(0, M_PI);
  ok = true;
  return acc;
}

// s_lambda(z) for a partition lambda with n parts (zeros allowed), by branching z_n, z_{n-1}, ...
cplx schur_branching(const std::vector<int>& lambda, const std::vector<cplx>& z) {
  std::map<std::vector<int>, cplx> cur{{lambda, cplx(1, 0)}};
  for (int i = static_cast<int>(z.size()); i >= 1; --i) {
    std::map<std::vector<int>, cplx> nxt;
    std::vector<cplx> zp;
    for (const auto& [kappa, coef] : cur) {
      int total = 0;
      for (int x : kappa) total += x;
      std::vector<int> inner(i - 1);
      auto rec = [&](auto&& self, int j, int sz) -> void {
        if (j == i - 1) {
          int e = total - sz;
          nxt[inner] += coef * std::pow(z[i - 1], e);
          return;
        }
        for (int v = kappa[j + 1]; v <= kappa[j]; ++v) {
          inner[j] = v;
          self(self, j + 1, sz + v);
        }
      };
      rec(rec, 0, 0);
    }
    cur = std::move(nxt);
  }
  cplx out(0, 0);
  for (const auto& kv : cur) out += kv.second;
  return out;
}

}  // namespace

Philox4x32::Philox4x32(uint64_t seed, uint64_t stream)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
      ctr_{0, 0, static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)} {}

std::array<uint32_t, 4> Philox4x32::next_block() {
  std::array<uint32_t, 4> c = ctr_;
  std::array<uint32_t, 2> k = key_;
  for (int round = 0; round < 10; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kPhiloxW0;
    k[1] += kPhiloxW1;
  }
  if (++ctr_[0] == 0) ++ctr_[1];
  return c;
}

double Philox4x32::uniform() {
  if (used_ + 2 > 4) {
    buf_ = next_block();
    used_ = 0;
  }
  uint64_t bits = (static_cast<uint64_t>(buf_[used_]) << 32) | buf_[used_ + 1];
  used_ += 2;
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double Philox4x32::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

CMatrix haar_sample(int n, HaarSampler& sampler) {
  if (n < 1) throw DomainError("n must be positive");
  return sample_with(n, sampler.rng);
}

CMatrix eval_word(const Word& w, const std::vector<CMatrix>& x, int n) {
  CMatrix M = CMatrix::Identity(n, n);
  for (const auto& let : w.letters()) {
    if (let.sign > 0) M = M * x[let.gen];
    else M = M * x[let.gen].adjoint();
  }
  return M;
}

McEstimate mc_word_trace(int r, const Word& w, int n, uint64_t samples, uint64_t seed, int threads) {
  check_mc(n, samples);
  for (const auto& x : w.letters())
    if (x.gen >= r) throw DomainError("word uses a generator beyond r");
  return run_blocks(samples, seed, threads, [&](Philox4x32& rng) {
    std::vector<CMatrix> x;
    for (int f = 0; f < r; ++f) x.push_back(sample_with(n, rng));
    return eval_word(w, x, n).trace();
  });
}

cplx mixed_character_eigen(const MixedLabel& label, const std::vector<cplx>& z) {
  const int n = static_cast<int>(z.size());
  if (n < label.rows()) throw DomainError("n is smaller than rows(mu)+rows(nu)");
  Signature sig = signature_of(label, n);
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) min_gap = std::min(min_gap, std::abs(z[i] - z[j]));
  if (min_gap > 1e-3) {
    CMatrix A(n, n), V(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        A(i, j) = std::pow(z[j], static_cast<int>(sig[i] + n - 1 - i));
        V(i, j) = std::pow(z[j], n - 1 - i);
      }
    bool oka = false, okv = false;
    cplx la = log_det(A, oka), lv = log_det(V, okv);
    if (oka && okv) return std::exp(la - lv);
  }
  // det^{-shift} s_{sig + shift}(z), shift making every part non-negative
  int shift = static_cast<int>(-sig.back());
  std::vector<int> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = static_cast<int>(sig[i]) + shift;
  cplx det(1, 0);
  for (const auto& x : z) det *= x;
  return schur_branching(lam, z) * std::pow(det, -shift);
}

cplx mixed_character(const MixedLabel& label, const CMatrix& U) {
  if (label.k() + label.l() == 0) return cplx(1, 0);
  Eigen::ComplexEigenSolver<CMatrix> es(U, false);
  if (es.info() != Eigen::Success) throw DomainError("eigenvalue computation failed");
  std::vector<cplx> z(es.eigenvalues().data(), es.eigenvalues().data() + U.rows());
  return mixed_character_eigen(label, z);
}

McEstimate mc_j(const Word& w, const MixedLabel& label, int n, uint64_t samples, uint64_t seed, int threads) {
  check_mc(n, samples);
  label.validate();
  if (n < label.rows()) throw DomainError("n is smaller than rows(mu)+rows(nu)");
  const int g = w.genus();
  const Word rel = relator(g);
  return run_blocks(samples, seed, threads, [&](Philox4x32& rng) {
    std::vector<CMatrix> x;
    for (int f = 0; f < 2 * g; ++f) x.push_back(sample_with(n, rng));
    cplx tw = eval_word(w, x, n).trace();
    if (label.k() + label.l() == 0) return tw;
    return tw * mixed_character(label, eval_word(rel, x, n));
  });
}

}  // namespace surftrace
