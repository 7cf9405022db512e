#include "sdiv/states.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <vector>

namespace sdiv {

DensityMatrix random_state(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed,
                           const NumericPolicy& policy) {
  if (dim < 1) throw DomainError("random_state: dim must be >= 1");
  if (rank < 1 || rank > dim) throw DomainError("random_state: rank must lie in [1, dim]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(dim, rank);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < rank; ++c)
      g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  CMat w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix(w, policy);
}

namespace {

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw DomainError("generate_state: malformed number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("generate_state: empty value list");
  return out;
}

}  // namespace

DensityMatrix generate_state(const std::string& spec, std::uint64_t seed,
                             const NumericPolicy& policy) {
  auto ends_with = [](const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (spec.rfind("diag:", 0) == 0) {
    const auto w = parse_doubles(spec.substr(5));
    double sum = 0.0;
    for (double x : w) {
      if (x < 0.0) throw DomainError("generate_state: negative diagonal weight");
      sum += x;
    }
    if (sum <= 0.0) throw DomainError("generate_state: zero diagonal weights");
    CMat m = CMat::Zero(w.size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) m(i, i) = w[i] / sum;
    return DensityMatrix(m, policy);
  }
  if (spec.rfind("pure:", 0) == 0) {
    const auto angles = parse_doubles(spec.substr(5));
    if (angles.size() > 2) throw DomainError("generate_state: pure spec takes theta[,phi]");
    const double theta = angles[0];
    const double phi = angles.size() > 1 ? angles[1] : 0.0;
    CVec psi(2);
    psi << std::cos(theta / 2.0),
        std::polar(std::sin(theta / 2.0), phi);
    return DensityMatrix(psi * psi.adjoint(), policy);
  }
  if (spec.rfind("random:", 0) == 0) {
    const std::string body = spec.substr(7);
    const auto colon = body.find(':');
    const Eigen::Index dim = std::stol(body.substr(0, colon));
    const Eigen::Index rank =
        colon == std::string::npos ? dim : std::stol(body.substr(colon + 1));
    return random_state(dim, rank, seed, policy);
  }
  std::string path;
  if (spec.rfind("file:", 0) == 0)
    path = spec.substr(5);
  else if (ends_with(spec, ".json"))
    path = spec;
  else
    throw DomainError("generate_state: unrecognized spec '" + spec + "'");
  std::ifstream in(path);
  if (!in) throw ValidationError("generate_state: cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return state_from_json(j, policy);
}

}  // namespace sdiv
