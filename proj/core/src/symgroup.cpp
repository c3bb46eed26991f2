#include "surftrace/symgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <cctype>
#include <sstream>

#include "surftrace/errors.hpp"

namespace surftrace {

void check_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw DomainError("partition parts must be positive: " + partition_to_string(p));
    if (i > 0 && p[i] > p[i - 1])
      throw DomainError("partition must be weakly decreasing: " + partition_to_string(p));
  }
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

namespace {
void partitions_rec(int left, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(left, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw DomainError("partitions_of: negative size");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, cur, out);
  return out;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt centralizer_order(const Partition& ct) {
  std::map<int, int> mult;
  for (int c : ct) mult[c]++;
  BigInt z = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= len;
    z *= factorial(m);
  }
  return z;
}

BigInt class_size(const Partition& ct) { return factorial(partition_size(ct)) / centralizer_order(ct); }

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(int m) : img_(m) {
  if (m < 0 || m > 255) throw DomainError("permutation degree out of range");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<uint8_t> images0) : img_(std::move(images0)) {}

Permutation Permutation::from_images(const std::vector<int>& images1) {
  int m = static_cast<int>(images1.size());
  std::vector<bool> seen(m, false);
  std::vector<uint8_t> img(m);
  for (int i = 0; i < m; ++i) {
    int v = images1[i] - 1;
    if (v < 0 || v >= m || seen[v]) throw DomainError("images do not form a permutation");
    seen[v] = true;
    img[i] = static_cast<uint8_t>(v);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles1) {
  Permutation p(m);
  std::vector<bool> used(m, false);
  for (const auto& cyc : cycles1) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || a >= m || used[a]) throw DomainError("invalid cycle notation");
      used[a] = true;
      p.img_[a] = static_cast<uint8_t>(b);
    }
  }
  return p;
}

Permutation Permutation::parse_cycles(int m, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  bool open = false;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw DomainError("nested '(' in cycle notation");
      open = true;
      cur.clear();
    } else if (ch == ')') {
      if (!open) throw DomainError("unbalanced ')' in cycle notation");
      flush();
      if (!cur.empty()) cycles.push_back(cur);
      open = false;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      num += ch;
    } else if (ch == ' ' || ch == ',') {
      flush();
    } else {
      throw DomainError(std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (open) throw DomainError("unterminated cycle");
  return from_cycles(m, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<uint8_t> inv(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<uint8_t>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  int m = degree(), c = 0;
  uint64_t seen = 0;  // degree <= 64 in every caller; fall back otherwise
  if (m > 64) return static_cast<int>(cycle_type().size());
  for (int i = 0; i < m; ++i) {
    if (seen >> i & 1u) continue;
    ++c;
    for (int j = i; !(seen >> j & 1u); j = img_[j]) seen |= uint64_t{1} << j;
  }
  return c;
}

Partition Permutation::cycle_type() const {
  int m = degree();
  std::vector<bool> seen(m, false);
  Partition ct;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

std::string Permutation::cycle_notation() const {
  int m = degree();
  std::vector<bool> seen(m, false);
  std::string s;
  for (int i = 0; i < m; ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      s += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degree mismatch in product");
  std::vector<uint8_t> r(a.img_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = a.img_[b.img_[i]];
  return Permutation(std::move(r));
}

uint64_t Permutation::rank() const {
  int m = degree();
  uint64_t r = 0;
  uint32_t used = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = __builtin_popcount(~used & ((1u << img_[i]) - 1u));
    r = r * static_cast<uint64_t>(m - i) + static_cast<uint64_t>(smaller);
    used |= 1u << img_[i];
  }
  return r;
}

Permutation Permutation::unrank(int m, uint64_t r) {
  std::vector<int> digits(m);
  for (int i = m - 1; i >= 0; --i) {
    uint64_t base = static_cast<uint64_t>(m - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> avail(m);
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<uint8_t> img(m);
  for (int i = 0; i < m; ++i) {
    img[i] = static_cast<uint8_t>(avail[digits[i]]);
    avail.erase(avail.begin() + digits[i]);
  }
  return Permutation(std::move(img));
}

size_t PermutationHash::operator()(const Permutation& p) const {
  size_t h = 1469598103934665603ull;
  for (uint8_t v : p.images()) h = (h ^ v) * 1099511628211ull;
  return h;
}

std::vector<Permutation> enumerate_sym(int m) {
  if (m < 0 || m > kMaxSymDegree)
    throw DomainError("enumerate_sym: degree " + std::to_string(m) + " outside [0,9]");
  std::vector<uint8_t> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> enumerate_block_subgroup(int m, int offset, const std::vector<int>& blocks) {
  std::vector<Permutation> out{Permutation(m)};
  int start = offset;
  for (int b : blocks) {
    if (start + b > m) throw DomainError("block subgroup exceeds degree");
    std::vector<Permutation> next;
    for (const auto& local : enumerate_sym(b)) {
      for (const auto& base : out) {
        std::vector<uint8_t> img = base.images();
        for (int i = 0; i < b; ++i) img[start + i] = static_cast<uint8_t>(start + local(i));
        next.emplace_back(std::move(img));
      }
    }
    out = std::move(next);
    start += b;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_young_product(int k, int l) {
  return enumerate_block_subgroup(k + l, 0, {k, l});
}

bool in_young_product(const Permutation& s, int k, int l) {
  if (s.degree() != k + l) throw DomainError("in_young_product: degree mismatch");
  for (int i = 0; i < k + l; ++i)
    if ((i < k) != (s(i) < k)) return false;
  return true;
}

int transposition_norm(const Permutation& s) { return s.degree() - s.cycle_count(); }

int coset_norm(const Permutation& s, int k, int l) {
  if (k < 0 || l < 0 || s.degree() != k + l) throw DomainError("coset_norm: degree mismatch");
  int best = s.degree();
  for (const auto& s0 : enumerate_young_product(k, l)) {
    best = std::min(best, transposition_norm(s0.inverse() * s));
    if (best == 0) break;
  }
  return best;
}

long dim_irrep(const Partition& lambda) {
  check_partition(lambda);
  int k = partition_size(lambda);
  BigInt hooks = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - j - 1;
      int leg = 0;
      for (size_t r = i + 1; r < lambda.size() && lambda[r] > j; ++r) ++leg;
      hooks *= arm + leg + 1;
    }
  BigInt d = factorial(k) / hooks;
  return d.get_si();
}

namespace {

std::mutex g_char_mu;
std::map<std::pair<Partition, Partition>, long> g_char_memo;

// Murnaghan-Nakayama on beta-sets; rho sorted decreasingly.
long mn_character(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard<std::mutex> lock(g_char_mu);
    auto it = g_char_memo.find({lambda, rho});
    if (it != g_char_memo.end()) return it->second;
  }
  int r = rho.front();
  Partition rest(rho.begin() + 1, rho.end());
  int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
  long total = 0;
  for (int i = 0; i < L; ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition mu;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    long sub = mn_character(mu, rest);
    total += (between % 2 ? -sub : sub);
  }
  std::lock_guard<std::mutex> lock(g_char_mu);
  g_char_memo.emplace(std::make_pair(lambda, rho), total);
  return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& cycle_type) {
  check_partition(lambda);
  Partition rho = cycle_type;
  std::sort(rho.rbegin(), rho.rend());
  check_partition(rho);
  if (partition_size(lambda) != partition_size(rho))
    throw DomainError("character: size mismatch between " + partition_to_string(lambda) + " and " +
                      partition_to_string(rho));
  return mn_character(lambda, rho);
}

Rat central_idempotent_coeff(const Partition& lambda, const Permutation& s) {
  int k = partition_size(lambda);
  if (s.degree() != k) throw DomainError("central_idempotent_coeff: size mismatch");
  Rat c(BigInt(dim_irrep(lambda) * character(lambda, s.cycle_type())), factorial(k));
  c.canonicalize();
  return c;
}

}  // namespace surftrace
