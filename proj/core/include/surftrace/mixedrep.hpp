#pragma once

#include "surftrace/exactnum.hpp"
#include "surftrace/repdata.hpp"
#include "surftrace/weingarten.hpp"

namespace surftrace {

struct ThetaData {
  MixedLabel label;
  Rat norm_sq;
  GroupAlgElem z;
};

Rat theta_norm_sq(const MixedLabel& label);
GroupAlgElem p_mu_tensor_nu(const MixedLabel& label);
// (1/|theta|^2) p (sum_{S_mu x S_nu} s) p Wg_{n,k+l}, multiplied left to right. Cached.
const GroupAlgElem& z_theta(const MixedLabel& label);
ThetaData theta_data(const MixedLabel& label);

// Young subgroup S_mu x S_nu inside S_{k+l}, row blocks in increasing order.
std::vector<Permutation> young_subgroup(const MixedLabel& label);

}  // namespace surftrace
