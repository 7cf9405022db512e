#include "sdiv/channels.hpp"

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

namespace sdiv {

KrausChannel::KrausChannel(std::vector<CMat> kraus, const NumericPolicy& policy)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("KrausChannel: empty Kraus family");
  d_out_ = kraus_.front().rows();
  d_in_ = kraus_.front().cols();
  CMat completeness = CMat::Zero(d_in_, d_in_);
  for (const auto& k : kraus_) {
    if (k.rows() != d_out_ || k.cols() != d_in_)
      throw ValidationError("KrausChannel: inconsistent Kraus operator shapes");
    completeness += k.adjoint() * k;
  }
  const double defect =
      (completeness - CMat::Identity(d_in_, d_in_)).cwiseAbs().maxCoeff();
  if (defect > policy.hermitian_tol) {
    std::ostringstream os;
    os << "KrausChannel: completeness violated, max residual " << defect;
    throw ValidationError(os.str());
  }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
  return KrausChannel({CMat::Identity(dim, dim)});
}

KrausChannel KrausChannel::trace_and_replace(const DensityMatrix& tau) {
  // Kraus form of Tr(.) tau: sqrt(tau) |i><j| over an output basis times
  // input basis bras.
  const Eigen::Index d_out = tau.dim();
  const CMat sqrt_tau = fractional_power(tau, 0.5);
  std::vector<CMat> kraus;
  for (Eigen::Index i = 0; i < d_out; ++i) {
    for (Eigen::Index j = 0; j < d_out; ++j) {
      CMat k = CMat::Zero(d_out, d_out);
      k.col(j) = sqrt_tau.col(i);
      kraus.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(kraus));
}

KrausChannel KrausChannel::dephasing(Eigen::Index dim) {
  std::vector<CMat> kraus;
  for (Eigen::Index i = 0; i < dim; ++i) {
    CMat k = CMat::Zero(dim, dim);
    k(i, i) = 1.0;
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus));
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.d_in()) {
    std::ostringstream os;
    os << "apply: state dim " << rho.dim() << " does not match channel input "
       << channel.d_in();
    throw ValidationError(os.str());
  }
  CMat out = CMat::Zero(channel.d_out(), channel.d_out());
  for (const auto& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(out, rho.policy());
}

KrausChannel random_channel(Eigen::Index d_in, Eigen::Index d_out, int kraus_count,
                            std::uint64_t seed) {
  if (kraus_count < 1) throw DomainError("random_channel: kraus_count must be >= 1");
  if (kraus_count * d_out < d_in) {
    std::ostringstream os;
    os << "random_channel: no isometry from dim " << d_in << " into " << kraus_count
       << " blocks of dim " << d_out;
    throw ValidationError(os.str());
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(kraus_count * d_out, d_in);
  for (Eigen::Index r = 0; r < g.rows(); ++r)
    for (Eigen::Index c = 0; c < g.cols(); ++c)
      g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  // Orthonormalize columns: thin QR gives the Stinespring isometry.
  Eigen::HouseholderQR<CMat> qr(g);
  const CMat iso =
      qr.householderQ() * CMat::Identity(g.rows(), d_in);
  std::vector<CMat> kraus;
  for (int b = 0; b < kraus_count; ++b)
    kraus.push_back(iso.block(b * d_out, 0, d_out, d_in));
  return KrausChannel(std::move(kraus));
}

nlohmann::json channel_to_json(const KrausChannel& channel) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& k : channel.kraus()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < k.cols(); ++c) row.push_back({k(r, c).real(), k(r, c).imag()});
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  return {{"d_in", channel.d_in()}, {"d_out", channel.d_out()}, {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const nlohmann::json& j) {
  const Eigen::Index d_in = j.at("d_in").get<Eigen::Index>();
  const Eigen::Index d_out = j.at("d_out").get<Eigen::Index>();
  std::vector<CMat> kraus;
  for (const auto& rows : j.at("kraus")) {
    CMat k(d_out, d_in);
    if (static_cast<Eigen::Index>(rows.size()) != d_out)
      throw ValidationError("channel_from_json: row count does not match d_out");
    for (Eigen::Index r = 0; r < d_out; ++r) {
      const auto& row = rows.at(r);
      if (static_cast<Eigen::Index>(row.size()) != d_in)
        throw ValidationError("channel_from_json: column count does not match d_in");
      for (Eigen::Index c = 0; c < d_in; ++c)
        k(r, c) = std::complex<double>(row.at(c).at(0).get<double>(),
                                       row.at(c).at(1).get<double>());
    }
    kraus.push_back(std::move(k));
  }
  return KrausChannel(std::move(kraus));
}

}  // namespace sdiv
