#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "gridsight/construct.hpp"
#include "gridsight/cover.hpp"
#include "gridsight/fourier.hpp"
#include "gridsight/geometry.hpp"
#include "gridsight/lattice.hpp"
#include "gridsight/modular.hpp"
#include "gridsight/poset.hpp"
#include "gridsight/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gridsight;

namespace {

constexpr const char* kSchemaVersion = "1";

std::vector<long long> parse_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoll(item));
  }
  return out;
}

ResidueVector make_rv(long long p, int d, const std::string& t_str) {
  std::vector<long long> t = parse_list(t_str);
  if (static_cast<int>(t.size()) != d - 1)
    throw std::invalid_argument("expected " + std::to_string(d - 1) + " coordinates in --t");
  return ResidueVector(p, d, t);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open " + out_path);
    f << j.dump(2) << "\n";
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  f << text;
}

json base_json(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Configuration load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  json j = json::parse(f);
  Configuration c;
  c.n = j.at("n").get<long long>();
  c.d = j.at("d").get<int>();
  for (const auto& cube : j.at("cubes")) c.cubes.push_back(cube.get<std::vector<long long>>());
  return c;
}

json config_to_json(const Configuration& c) {
  json j;
  j["n"] = c.n;
  j["d"] = c.d;
  j["cubes"] = c.cubes;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  if (const char* env = std::getenv("GRIDSIGHT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif

  CLI::App app{"grid visibility toolkit: poset widths, lattice antichains, "
               "chain covers, transform checks, and geometric oracles"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI config file; command-line flags win");

  long long p = 11;
  int d = 3;
  std::string t_str = "2,3";
  std::string out_path;
  std::uint64_t seed = 8675309;

  auto add_common = [&](CLI::App* sub, bool with_t) {
    sub->add_option("--p", p, "prime modulus");
    sub->add_option("--d", d, "dimension");
    if (with_t) sub->add_option("--t", t_str, "comma-separated t_1..t_{d-1}");
    sub->add_option("--out", out_path, "output path (default stdout)");
  };

  auto* c_hp = app.add_subcommand("hp", "height, dual height, and their duality bound");
  add_common(c_hp, true);

  auto* c_width = app.add_subcommand("width", "exact poset width with certified witnesses");
  std::string signs_str;
  add_common(c_width, true);
  c_width->add_option("--signs", signs_str, "comma-separated 0/1 flips (default all plus)");

  auto* c_anti = app.add_subcommand("antichain", "lattice-built antichain for the best family member");
  add_common(c_anti, true);

  auto* c_lll = app.add_subcommand("lll", "exact LLL reduction of the parallelotope lattice");
  add_common(c_lll, true);

  auto* c_cover = app.add_subcommand("cover", "chain covers: multiples walk or primitive additive step");
  std::string cover_kind = "toy";
  add_common(c_cover, true);
  c_cover->add_option("--kind", cover_kind, "toy | primitive")
      ->check(CLI::IsMember({"toy", "primitive"}));

  auto* c_fourier = app.add_subcommand("fourier-check", "transform identities and bounds at one (p, d, t)");
  int conv_k = 2;
  add_common(c_fourier, true);
  c_fourier->add_option("--k", conv_k, "self-convolution power");

  auto* c_sim = app.add_subcommand("simulate", "visibility oracles on a configuration file");
  std::string config_path;
  int rays = 64;
  double theta = 45.0;
  c_sim->add_option("--file", config_path, "configuration JSON {n, d, cubes}")->required();
  c_sim->add_option("--rays", rays, "sampling budget per cube");
  c_sim->add_option("--seed", seed, "sampling seed");
  c_sim->add_option("--theta", theta, "shallow-angle threshold (reported only)");
  c_sim->add_option("--out", out_path, "output path (default stdout)");

  auto* c_construct = app.add_subcommand("construct", "lower-bound configuration from stride-6 families");
  add_common(c_construct, false);

  auto* c_scaling = app.add_subcommand("scaling", "predicted-count scaling over a prime grid");
  std::string primes_str = "11,17,23,31,41,53";
  std::string mode = "model";
  std::string csv_path, svg_path;
  c_scaling->add_option("--primes", primes_str, "comma-separated primes");
  c_scaling->add_option("--d", d, "dimension");
  c_scaling->add_option("--mode", mode, "model | geometric")
      ->check(CLI::IsMember({"model", "geometric"}));
  c_scaling->add_option("--rays", rays, "sampling budget (geometric mode)");
  c_scaling->add_option("--seed", seed, "sampling seed");
  c_scaling->add_option("--csv", csv_path, "CSV output path");
  c_scaling->add_option("--svg", svg_path, "SVG output path");
  c_scaling->add_option("--out", out_path, "JSON summary path (default stdout)");

  auto* c_verify = app.add_subcommand("verify-all", "run the invariant suite and print a pass/fail table");
  long long max_p = 13;
  bool full = false;
  std::size_t samples = 60;
  c_verify->add_option("--max-p", max_p, "prime cap for the desk-scale sweeps");
  c_verify->add_flag("--full", full, "full acceptance scale (slow)");
  c_verify->add_option("--samples", samples, "sampled-sweep budget at desk scale");
  c_verify->add_option("--seed", seed, "suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_hp) {
      ResidueVector rv = make_rv(p, d, t_str);
      DualityReport r = check_height_duality(rv);
      json j = base_json("hp");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      j["hp"] = r.hp;
      j["witness"] = r.hp_witness;
      j["hp_star"] = r.hp_star;
      j["hp_star_witness"] = r.hp_star_witness;
      j["duality_bound"] = r.bound;
      j["duality_holds"] = r.holds;
      emit(j, out_path);
      return r.holds ? 0 : 1;
    }

    if (*c_width) {
      ResidueVector rv = make_rv(p, d, t_str);
      std::vector<bool> signs(d - 1, false);
      if (!signs_str.empty()) {
        auto raw = parse_list(signs_str);
        if (static_cast<int>(raw.size()) != d - 1)
          throw std::invalid_argument("--signs needs d-1 entries");
        for (int i = 0; i < d - 1; ++i) signs[i] = raw[i] != 0;
      }
      Poset P = build_s_poset(rv, signs);
      WidthResult w = width_exact(P);
      json j = base_json("width");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      j["signs"] = signs;
      j["width"] = w.width;
      std::vector<long long> heights;
      for (std::size_t idx : w.antichain.members) heights.push_back(P.elements[idx].k_index);
      std::sort(heights.begin(), heights.end());
      j["antichain_heights"] = heights;
      j["chain_cover_size"] = w.cover.chains.size();
      emit(j, out_path);
      return 0;
    }

    if (*c_anti) {
      ResidueVector rv = make_rv(p, d, t_str);
      LatticeAntichain la = antichain_from_lattice(rv);
      json j = base_json("antichain");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      j["signs"] = la.signs;
      j["size"] = la.antichain.members.size();
      std::vector<long long> heights;
      for (std::size_t idx : la.antichain.members)
        heights.push_back(la.poset.elements[idx].k_index);
      std::sort(heights.begin(), heights.end());
      j["heights"] = heights;
      j["normal_uniform"] = la.normal_uniform;
      emit(j, out_path);
      return 0;
    }

    if (*c_lll) {
      ResidueVector rv = make_rv(p, d, t_str);
      IntegerLattice L = parallelotope_lattice(rv);
      ReducedBasis R = lll_reduce(L);
      json j = base_json("lll");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      auto rows = [](const std::vector<std::vector<BigInt>>& b) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : b) {
          std::vector<std::string> row;
          for (const auto& c : v) row.push_back(c.str());
          out.push_back(row);
        }
        return out;
      };
      j["basis"] = rows(L.basis);
      j["reduced"] = rows(R.vectors);
      j["covolume"] = covolume(L).str();
      j["is_reduced"] = is_lll_reduced(R.vectors);
      emit(j, out_path);
      return 0;
    }

    if (*c_cover) {
      ResidueVector rv = make_rv(p, d, t_str);
      CoverReport r = cover_kind == "toy" ? toy_chain_cover(rv) : primitive_chain_cover(rv);
      json j = base_json("cover");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      j["kind"] = cover_kind;
      j["poset_size"] = r.poset.size();
      j["chains"] = r.cover.chains.size();
      j["bound"] = r.bound;
      j["width"] = r.width;
      j["generator"] = r.generator;
      emit(j, out_path);
      return 0;
    }

    if (*c_fourier) {
      ResidueVector rv = make_rv(p, d, t_str);
      GdkReport r = g_dk_checks(rv, conv_k);
      BoundReport box = box_indicator_bound_check(p, d, std::min<long long>(r.side, p));
      json j = base_json("fourier-check");
      j["p"] = p;
      j["d"] = d;
      j["t"] = rv.t;
      j["k"] = conv_k;
      j["hp"] = r.hp;
      j["side"] = r.side;
      j["zero_value"] = r.zero_value;
      j["zero_expected"] = r.zero_expected;
      j["zero_rel_err"] = r.zero_rel_err;
      j["freq_bound_holds"] = r.freq_bound.holds;
      j["freq_bound_worst_slack"] = r.freq_bound.worst_slack;
      j["support_pairing"] = r.support_pairing;
      j["support_ok"] = r.support_ok;
      j["box_bound_holds"] = box.holds;
      emit(j, out_path);
      return r.freq_bound.holds && r.support_ok && box.holds ? 0 : 1;
    }

    if (*c_sim) {
      Configuration c = load_config_file(config_path);
      std::vector<std::size_t> sampled = visible_sampled(c, rays, seed);
      json j = base_json("simulate");
      j["n"] = c.n;
      j["d"] = c.d;
      j["cubes"] = c.cubes.size();
      j["theta_deg"] = theta;
      j["rays"] = rays;
      j["seed"] = seed;
      j["sampled_visible"] = sampled.size();
      j["sampled_indices"] = sampled;
      if (c.d == 2 && c.n <= 64) {
        std::vector<std::size_t> exact = visible_2d_exact(c);
        j["exact_visible"] = exact.size();
        j["exact_indices"] = exact;
      }
      emit(j, out_path);
      return 0;
    }

    if (*c_construct) {
      ConstructionResult r = build_lower_bound_config(p, d);
      json j = base_json("construct");
      j["p"] = p;
      j["d"] = d;
      j["predicted_count"] = r.predicted_count;
      j["collisions"] = r.collisions;
      json fams = json::array();
      for (const FamilyPlan& f : r.families) {
        json jf;
        jf["t"] = f.base.t;
        jf["signs"] = f.signs;
        jf["t_signed"] = f.t_signed;
        jf["width"] = f.width;
        jf["heights"] = f.heights;
        jf["lattice_won"] = f.lattice_won;
        fams.push_back(jf);
      }
      j["families"] = fams;
      j["configuration"] = config_to_json(r.config);
      emit(j, out_path);
      return 0;
    }

    if (*c_scaling) {
      std::vector<long long> primes = parse_list(primes_str);
      ScalingResult r = scaling_experiment(primes, d, mode == "geometric", rays, seed);
      if (!csv_path.empty()) write_text(csv_path, scaling_csv(r));
      if (!svg_path.empty()) write_text(svg_path, scaling_svg(r));
      json j = base_json("scaling");
      j["d"] = d;
      j["mode"] = mode;
      json rows = json::array();
      for (const ScalingRow& row : r.rows) {
        json jr;
        jr["p"] = row.p;
        jr["families"] = row.families;
        jr["predicted"] = row.predicted;
        if (row.sampled >= 0) jr["sampled"] = row.sampled;
        rows.push_back(jr);
      }
      j["rows"] = rows;
      if (r.has_slope) {
        j["slope"] = r.slope;
        j["intercept"] = r.intercept;
      }
      emit(j, out_path);
      return 0;
    }

    if (*c_verify) {
      VerifySettings s;
      s.full = full;
      s.max_p = max_p;
      s.samples = samples;
      s.seed = seed;
      s.rays = rays;
      std::vector<CheckResult> results = run_all_checks(s);
      bool all = true;
      for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail
                  << ")\n";
        all = all && r.pass;
      }
      std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
