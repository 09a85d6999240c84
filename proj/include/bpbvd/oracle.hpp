#pragma once

#include <cstddef>
#include <stdexcept>

#include "bpbvd/problem.hpp"

namespace bpbvd {

constexpr std::size_t kDefaultOracleCap = 14;

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cap from BPBVD_ORACLE_CAP, falling back to kDefaultOracleCap.
std::size_t oracle_cap_from_env();

/// Exhaustive search by increasing subset size; among the smallest solutions the
/// lexicographically first is returned. Throws OracleCapExceeded when the graph has
/// more than `cap` vertices.
SolveResult brute_force(const Instance& inst, std::size_t cap = kDefaultOracleCap);

/// Same answer as `brute_force`, with each subset size scanned in parallel batches.
SolveResult brute_force_parallel(const Instance& inst, std::size_t cap = kDefaultOracleCap);

}  // namespace bpbvd
