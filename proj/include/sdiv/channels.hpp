#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "sdiv/matrix_core.hpp"
#include "sdiv/policy.hpp"

namespace sdiv {

// CPTP map given as a Kraus family; completeness sum K^dag K = I is validated
// at construction.
class KrausChannel {
 public:
  KrausChannel(std::vector<CMat> kraus,
               const NumericPolicy& policy = NumericPolicy::defaults());

  Eigen::Index d_in() const { return d_in_; }
  Eigen::Index d_out() const { return d_out_; }
  const std::vector<CMat>& kraus() const { return kraus_; }

  static KrausChannel identity(Eigen::Index dim);
  // N(.) = Tr(.) tau.
  static KrausChannel trace_and_replace(const DensityMatrix& tau);
  static KrausChannel dephasing(Eigen::Index dim);

 private:
  std::vector<CMat> kraus_;
  Eigen::Index d_in_, d_out_;
};

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

// Random channel from a Gaussian block isometry; deterministic per seed.
KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, int kraus_count,
                            std::uint64_t seed);

nlohmann::json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const nlohmann::json& j);

}  // namespace sdiv
