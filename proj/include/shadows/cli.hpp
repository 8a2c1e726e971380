#pragma once

#include <string>
#include <vector>

#include "shadows/coset_count.hpp"

namespace shadows {

/// Cross-check sweep: recursion vs enumeration oracle for shadows, and
/// nonemptiness vs labeled-walk counts, over all x with ell(x) <= max_x_len,
/// all J, all y with ell(y) <= max_y_len, faces in {vertex, alcove}.
/// Also checks the sum rule sum_z |IxI ^ (I_P)^y z I| = q^ell(x).
struct VerifyReport {
  bool ok = true;
  long long shadow_checks = 0;
  long long count_checks = 0;
  long long sum_rule_checks = 0;
  std::vector<std::string> mismatches;
};

VerifyReport verify_sweep(const RootSystem& rs, Int max_x_len, Int max_y_len, Int cap);

/// All elements with ell(x) <= bound, grouped by increasing length,
/// deterministic order.
std::vector<AffineWeylElement> length_ball(const RootSystem& rs, Int bound);

/// Entry point behind the `shadows` binary; args exclude the program name.
/// Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
int run_cli(std::vector<std::string> args);

}  // namespace shadows
