#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "surftrace/exactnum.hpp"

namespace surftrace {

// Weakly decreasing list of positive parts. The empty partition is the empty diagram.
using Partition = std::vector<int>;
using YoungDiagram = Partition;

void check_partition(const Partition& p);  // DomainError if not weakly decreasing positive
int partition_size(const Partition& p);
std::string partition_to_string(const Partition& p);  // "[2,1]"
// All partitions of k, in reverse lexicographic order: (k), (k-1,1), ...
std::vector<Partition> partitions_of(int k);
// Size of the conjugacy class of S_k with the given cycle type.
BigInt class_size(const Partition& cycle_type);
// z_rho = k! / class_size.
BigInt centralizer_order(const Partition& cycle_type);
BigInt factorial(int k);

// Permutation of {0,...,m-1}; printed and parsed one-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int m);  // identity
  explicit Permutation(std::vector<uint8_t> images0);
  static Permutation from_images(const std::vector<int>& images1);  // one-based, validated
  // One-based cycles, e.g. {{1,2}} in S_3.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles1);
  // Parses "()" / "(1 2)(3 4)" / "(1,2)".
  static Permutation parse_cycles(int m, const std::string& text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<uint8_t>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  Partition cycle_type() const;
  std::string cycle_notation() const;  // "()" for the identity, fixed points omitted

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

  // Position in the lexicographic enumeration of S_m.
  uint64_t rank() const;
  static Permutation unrank(int m, uint64_t r);

 private:
  std::vector<uint8_t> img_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const;
};

inline constexpr int kMaxSymDegree = 9;

// All m! permutations in lexicographic order of their image lists. m in [0,9].
std::vector<Permutation> enumerate_sym(int m);
// Elements of S_k x S'_l inside S_{k+l} (second factor on positions k..k+l-1), lexicographic.
std::vector<Permutation> enumerate_young_product(int k, int l);
// Young subgroup of S_{offset+|blocks|...}: permutations of degree m preserving the consecutive
// blocks whose sizes are `blocks`, starting at `offset`; other points fixed.
std::vector<Permutation> enumerate_block_subgroup(int m, int offset, const std::vector<int>& blocks);

bool in_young_product(const Permutation& s, int k, int l);

int transposition_norm(const Permutation& s);
int coset_norm(const Permutation& s, int k, int l);

long dim_irrep(const Partition& lambda);
long character(const Partition& lambda, const Partition& cycle_type);
inline long character(const Partition& lambda, const Permutation& s) {
  return character(lambda, s.cycle_type());
}
Rat central_idempotent_coeff(const Partition& lambda, const Permutation& s);

}  // namespace surftrace
