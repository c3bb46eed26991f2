#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surftrace/symgroup.hpp"

namespace surftrace::cli {

struct RunConfig {
  int g = 2;
  int r = 0;  // 0: use 2g
  std::string word;
  std::string mu, nu;
  std::vector<long> n_list;
  long n = 8;
  int k = 1, l = 0;
  int s = 2;
  int max_boxes = 0;
  uint64_t seed = 1;
  uint64_t samples = 100000;
  std::string format = "json";
  std::string perm;
  std::string dump_dir;
  bool star = false;
  bool unsafe = false;
  bool reproducible = false;
  bool summary_only = false;
  bool general_genus = false;
  int threads = 0;  // 0: SURFTRACE_THREADS or hardware concurrency
};

Partition parse_partition(const std::string& text);

// Exit codes: 0 success, 1 error, 2 guard refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surftrace::cli
