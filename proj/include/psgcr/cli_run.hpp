// Subcommand dispatch behind the command-line front end. A RunConfig is a
// fully parsed invocation; run() resolves every referenced name before any
// computation starts, dispatches, and writes records to the output stream.
// Mathematical negatives (Failure, BoundExhausted, false verdicts) exit 0;
// only I/O, parse and precondition failures exit nonzero.
#pragma once

#include <ostream>
#include <string>

#include "psgcr/jcr.hpp"
#include "psgcr/product_thm.hpp"
#include "psgcr/ramsey.hpp"

namespace psgcr {

struct RunConfig {
  std::string subcommand; // check|cr|dagger|ddagger|ramsey|counterexample|product
  bool machine = false;
  int workers = 0; // 0 = PSGCR_PARALLEL or 1

  std::string instance_path;

  // check
  std::string notion; // thick|syndetic|ps|cps|ipr|iprstar
  std::string set_name;
  int b = 3;
  int g_max = 3;
  int h_max = 3;
  int r = 3;
  int t_bound = 3;

  // cr / dagger / ddagger; L and pool name declarations in the instance file
  int k = 1;
  std::string L_name;
  std::string pool_name;
  int m_max = kDefaultMMax;
  int r_max = kDefaultRMax;

  // ramsey
  int fu_s = 1;
  int fu_k = 1;
  int fu_r_max = kFuDefaultRMax;
  std::string certificate_path;

  // counterexample
  int T = 4;

  // product: factor files, component sets, colon-separated name pairs
  // left:right for --L and --pool
  std::string left_path;
  std::string right_path;
  std::string A_name;
  std::string B_name;
  std::string product_L; // "LA:LB", L = LA x LB
  std::string product_pool; // "PL:PR", members paired positionally
  long long theta_cap = (long long)kDefaultUniverseCap;
};

// exit status: 0 = computed verdict, 1 = domain or I/O error
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace psgcr
