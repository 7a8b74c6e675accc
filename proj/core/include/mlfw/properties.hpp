#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mlfw {

struct PropertyTally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Random +, -, *, / cases on p-adic approximations of random rationals.
/// Each case checks that the result agrees with the exact rational result,
/// and that recomputing from inputs carrying five more digits gives at least
/// as much precision and, capped back, the identical value.
PropertyTally padic_soundness_cases(const std::vector<std::uint32_t>& primes, int precision, std::size_t cases,
                                    std::uint64_t seed);

/// Random principal units u, v and elements x of pZ_p: exp(log u) = u,
/// log(exp x) = x, log(uv) = log u + log v, and log at precision N + 5
/// capped back to the reported precision reproduces log at precision N.
PropertyTally padic_log_exp_cases(const std::vector<std::uint32_t>& primes, int precision, std::size_t cases,
                                  std::uint64_t seed);

struct MatrixLogTally {
  bool log_identity_zero = false;
  bool nilpotent_exact = false;
  std::size_t round_trip_failures = 0;
};

/// log(I) = 0, log [[1,p],[0,1]] = [[0,p],[0,0]] exactly, and
/// exp(log(I + pR)) = I + pR to at least N - 2 digits for random 3x3 R.
MatrixLogTally padic_matrix_cases(std::uint32_t p, int precision, std::size_t cases, std::uint64_t seed);

}  // namespace mlfw
