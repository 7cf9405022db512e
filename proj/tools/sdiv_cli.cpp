// Command-line front end: state generation/IO, divergence queries, one-shot
// solves, exponent traces and figure-data emission.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sdiv/asymptotics.hpp"
#include "sdiv/channels.hpp"
#include "sdiv/divergences.hpp"
#include "sdiv/oneshot.hpp"
#include "sdiv/oracles.hpp"
#include "sdiv/states.hpp"

using nlohmann::json;

namespace {

// 12 significant digits in result records; +inf serialized as "inf".
json num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return json(std::strtod(buf, nullptr));
}

json num(const sdiv::ExtendedReal& v) {
  if (v.is_infinite()) return json("inf");
  return num(v.value());
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw sdiv::ValidationError("cannot open output file '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw sdiv::ValidationError("cannot rename temp file onto '" + path + "'");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_atomic(out_path, content);
}

void emit_json(const std::string& out_path, const json& j) {
  emit(out_path, j.dump(2) + "\n");
}

std::vector<double> parse_grid(const std::string& spec) {
  // lo:hi:step
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
    throw sdiv::DomainError("grid spec must be lo:hi:step with step > 0, got '" + spec + "'");
  std::vector<double> grid;
  for (double x = lo; x <= hi + 1e-12; x += step) grid.push_back(x);
  return grid;
}

std::vector<double> diag_weights(const sdiv::DensityMatrix& rho) {
  std::vector<double> w;
  for (Eigen::Index i = 0; i < rho.dim(); ++i)
    w.push_back(std::max(0.0, rho.matrix()(i, i).real()));
  double off = 0.0;
  for (Eigen::Index r = 0; r < rho.dim(); ++r)
    for (Eigen::Index c = 0; c < rho.dim(); ++c)
      if (r != c) off = std::max(off, std::abs(rho.matrix()(r, c)));
  if (off > 1e-12)
    throw sdiv::DomainError("classical mode requires diagonal states");
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-shot s-hypothesis-testing errors and the xi_s divergence family"};
  app.require_subcommand(1);

  const sdiv::NumericPolicy policy = sdiv::NumericPolicy::from_env();

  std::string rho_spec, sigma_spec, state_spec, out_path, kind, mode = "quantum";
  std::string r_grid_spec, s_grid_spec, n_list_spec;
  double s_param = 1.0, c_param = 1.0, eps = 0.1, p_prior = 0.5, alpha_order = 0.5, r_param = 0.1;
  std::uint64_t seed = 0;
  int n_max = 4;

  auto add_states = [&](CLI::App* cmd) {
    cmd->add_option("--rho", rho_spec, "state spec for rho")->required();
    cmd->add_option("--sigma", sigma_spec, "state spec for sigma")->required();
    cmd->add_option("--seed", seed, "RNG seed for generated states");
    cmd->add_option("--out", out_path, "output path (stdout if omitted)");
  };

  auto* validate = app.add_subcommand("validate", "validate a state file or spec");
  validate->add_option("--state", state_spec, "state spec")->required();
  validate->add_option("--seed", seed);
  validate->add_option("--out", out_path);

  auto* divergence = app.add_subcommand("divergence", "scalar divergence queries");
  add_states(divergence);
  divergence->add_option("--kind", kind,
                         "q_alpha|petz|umegaki|d_min|chernoff|xi_s|hoeffding|fixed_point|lipschitz")
      ->required();
  divergence->add_option("--alpha", alpha_order, "order for q_alpha/petz");
  divergence->add_option("--s", s_param);
  divergence->add_option("--r", r_param, "rate for hoeffding");
  divergence->add_option("--c", c_param, "cutoff for lipschitz");

  auto* oneshot = app.add_subcommand("oneshot", "one-shot error probabilities");
  add_states(oneshot);
  oneshot->add_option("--kind", kind, "beta_eps|q_s|q_min|p_err|p_err_s")->required();
  oneshot->add_option("--s", s_param);
  oneshot->add_option("--C", c_param);
  oneshot->add_option("--eps", eps);
  oneshot->add_option("--p", p_prior);

  auto* boundary = app.add_subcommand("boundary", "emit the Neyman-Pearson boundary as CSV");
  add_states(boundary);

  auto* trace = app.add_subcommand("trace", "exponent trace CSV");
  add_states(trace);
  trace->add_option("--mode", mode, "quantum|classical");
  trace->add_option("--s", s_param);
  trace->add_option("--C", c_param);
  trace->add_option("--n-max", n_max, "quantum mode: largest tensor power");
  trace->add_option("--n-list", n_list_spec, "classical mode: comma-separated n values");

  auto* fig1 = app.add_subcommand("fig1", "Hoeffding-bound curve CSV");
  add_states(fig1);
  fig1->add_option("--s", s_param);
  fig1->add_option("--r-grid", r_grid_spec, "lo:hi:step")->required();

  auto* fig2 = app.add_subcommand("fig2", "xi_s curve CSV");
  add_states(fig2);
  fig2->add_option("--s-grid", s_grid_spec, "lo:hi:step")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const sdiv::DensityMatrix rho = sdiv::generate_state(state_spec, seed, policy);
      json rec{{"command", "validate"},
               {"state", state_spec},
               {"ok", true},
               {"dim", rho.dim()},
               {"rank", rho.rank()},
               {"trace", num(rho.matrix().trace().real())}};
      emit_json(out_path, rec);
      return 0;
    }

    const sdiv::DensityMatrix rho = sdiv::generate_state(rho_spec, seed, policy);
    const sdiv::DensityMatrix sigma = sdiv::generate_state(sigma_spec, seed + 1, policy);
    json inputs{{"rho", rho_spec}, {"sigma", sigma_spec}, {"seed", seed}};

    if (divergence->parsed()) {
      const sdiv::RenyiProfile profile(rho, sigma);
      json rec{{"command", "divergence"}, {"kind", kind}, {"inputs", inputs}};
      if (kind == "q_alpha") {
        rec["alpha"] = alpha_order;
        rec["value"] = num(sdiv::q_alpha(profile, alpha_order));
      } else if (kind == "petz") {
        rec["alpha"] = alpha_order;
        rec["value"] = num(sdiv::petz_renyi(profile, alpha_order));
      } else if (kind == "umegaki") {
        rec["value"] = num(sdiv::umegaki(profile));
      } else if (kind == "d_min") {
        rec["value"] = num(sdiv::d_min(profile));
      } else if (kind == "chernoff") {
        rec["value"] = num(sdiv::chernoff(profile));
      } else if (kind == "xi_s") {
        rec["s"] = s_param;
        rec["value"] = num(sdiv::xi_s(profile, s_param));
      } else if (kind == "hoeffding") {
        rec["r"] = r_param;
        rec["value"] = num(sdiv::hoeffding_b(profile, r_param));
      } else if (kind == "fixed_point") {
        rec["s"] = s_param;
        rec["value"] = num(sdiv::solve_fixed_point(profile, s_param));
      } else if (kind == "lipschitz") {
        rec["c"] = c_param;
        rec["value"] = num(sdiv::lipschitz_constant(profile, c_param));
      } else {
        throw sdiv::DomainError("unknown divergence kind '" + kind + "'");
      }
      emit_json(out_path, rec);
      return 0;
    }

    if (oneshot->parsed()) {
      json rec{{"command", "oneshot"}, {"kind", kind}, {"inputs", inputs}};
      const sdiv::NPBoundary nb = sdiv::np_boundary(rho, sigma);
      if (kind == "beta_eps") {
        rec["eps"] = eps;
        rec["value"] = num(sdiv::beta_epsilon(nb, eps));
      } else if (kind == "q_s" || kind == "q_min") {
        const double s = kind == "q_min" ? 1.0 : s_param;
        const double c = kind == "q_min" ? 1.0 : c_param;
        const auto sol = sdiv::q_s_c_solution(nb, s, c);
        rec["s"] = s;
        rec["C"] = c;
        rec["value"] = num(sol.beta);
        rec["optimizer"] = {{"alpha", num(sol.optimizer.alpha)},
                            {"beta", num(sol.optimizer.beta)},
                            {"mu", std::isinf(sol.optimizer.mu) ? json("inf")
                                                                : num(sol.optimizer.mu)},
                            {"mix", num(sol.optimizer.mix)}};
      } else if (kind == "p_err") {
        rec["p"] = p_prior;
        rec["value"] = num(sdiv::p_err_bayes(nb, p_prior));
      } else if (kind == "p_err_s") {
        rec["s"] = s_param;
        rec["C"] = c_param;
        rec["value"] = num(sdiv::p_err_s_c(nb, s_param, c_param));
      } else {
        throw sdiv::DomainError("unknown oneshot kind '" + kind + "'");
      }
      emit_json(out_path, rec);
      return 0;
    }

    if (boundary->parsed()) {
      const sdiv::NPBoundary nb = sdiv::np_boundary(rho, sigma);
      std::ostringstream os;
      nb.write_csv(os);
      emit(out_path, os.str());
      return 0;
    }

    if (trace->parsed()) {
      sdiv::ExponentTrace tr;
      if (mode == "quantum") {
        tr = sdiv::quantum_exponent_trace(rho, sigma, s_param, c_param, n_max);
      } else if (mode == "classical") {
        const sdiv::ClassicalPair pair(diag_weights(rho), diag_weights(sigma));
        std::vector<long> ns;
        std::stringstream ss(n_list_spec);
        std::string item;
        while (std::getline(ss, item, ',')) ns.push_back(std::stol(item));
        if (ns.empty()) throw sdiv::DomainError("classical trace requires --n-list");
        tr = sdiv::classical_exponent_trace(pair, s_param, c_param, ns);
      } else {
        throw sdiv::DomainError("unknown trace mode '" + mode + "'");
      }
      std::ostringstream os;
      sdiv::write_trace_csv(os, tr);
      emit(out_path, os.str());
      return 0;
    }

    if (fig1->parsed()) {
      const auto data = sdiv::fig1_data(rho, sigma, s_param, parse_grid(r_grid_spec));
      std::ostringstream os;
      sdiv::write_fig1_csv(os, data);
      emit(out_path, os.str());
      std::cerr << "intersections: chernoff=" << data.chernoff_intersection
                << " xi_s=" << data.xi_s_intersection << "\n";
      return 0;
    }

    if (fig2->parsed()) {
      const auto rows = sdiv::fig2_data(rho, sigma, parse_grid(s_grid_spec));
      std::ostringstream os;
      sdiv::write_fig2_csv(os, rows);
      emit(out_path, os.str());
      return 0;
    }
  } catch (const std::exception& e) {
    const char* type = "error";
    if (dynamic_cast<const sdiv::ValidationError*>(&e)) type = "validation";
    else if (dynamic_cast<const sdiv::DomainError*>(&e)) type = "domain";
    else if (dynamic_cast<const sdiv::ResourceError*>(&e)) type = "resource";
    else if (dynamic_cast<const sdiv::DegenerateInputError*>(&e)) type = "degenerate";
    json err{{"error", {{"type", type}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 2;
}
