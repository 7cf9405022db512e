#pragma once

#include <cstdint>
#include <string>

#include "sdiv/matrix_core.hpp"

namespace sdiv {

// Full-rank (or rank-limited) random state from a normalized Wishart
// construction G G^dag / Tr; deterministic per seed.
DensityMatrix random_state(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed,
                           const NumericPolicy& policy = NumericPolicy::defaults());

// Parse a state spec:
//   diag:w1,w2,...        diagonal state (weights normalized)
//   pure:theta[,phi]      qubit pure state cos(t/2)|0> + e^{i phi} sin(t/2)|1>
//   random:dim[:rank]     seeded random state
//   file:path or *.json   load from the JSON state format
DensityMatrix generate_state(const std::string& spec, std::uint64_t seed,
                             const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace sdiv
