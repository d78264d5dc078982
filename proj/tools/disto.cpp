// disto: distortion certificates, Cayley-ball word metrics, rotation
// numbers, curve growth rates and the spread functional, as reproducible
// batch runs. Every command is deterministic: identical invocations
// produce byte-identical output.
//
// Exit codes: 0 ok, 2 certificate verification failure, 3 length overflow,
// 4 Cayley ball exceeded its node cap (partial stats are still written),
// 5 unknown registry name. Structured error names go to stderr.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "disto/birkhoff.hpp"
#include "disto/cayley.hpp"
#include "disto/certificates.hpp"
#include "disto/curves.hpp"
#include "disto/growth.hpp"
#include "disto/io.hpp"
#include "disto/models/calegari.hpp"
#include "disto/models/heis.hpp"
#include "disto/models/mess.hpp"
#include "disto/models/psl2.hpp"
#include "disto/rotation.hpp"

namespace {

constexpr int kExitVerification = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitBallTooLarge = 4;
constexpr int kExitUnknownName = 5;

struct Output {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Output(const std::string& path) {
    if (path != "-") {
      file = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file) throw std::runtime_error("cannot open output file '" + path + "'");
      os = file.get();
    }
  }
  std::ostream& stream() { return *os; }
};

disto::Vec2 parse_point(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b;
  std::getline(ss, a, ',');
  std::getline(ss, b, ',');
  return {std::stod(a), b.empty() ? 0.0 : std::stod(b)};
}

nlohmann::ordered_json power_json(const disto::BigInt& p) {
  if (p >= std::numeric_limits<std::int64_t>::min() &&
      p <= std::numeric_limits<std::int64_t>::max())
    return p.convert_to<std::int64_t>();
  return p.str();
}

template <class Oracle>
int run_distortion(const Oracle& oracle, const std::function<disto::Certificate(int)>& gen,
                   int n_max, bool tamper, const std::string& format, Output& out) {
  auto cert_gen = [&](int n) {
    disto::Certificate c = gen(n);
    if (tamper && n == n_max && !c.word.tokens.empty()) c.word.tokens.front().sgn *= -1;
    return c;
  };

  std::vector<int> indices;
  for (int n = 1; n <= n_max; ++n) indices.push_back(n);
  auto series = disto::distortion_series(oracle, cert_gen, indices);

  if (format == "csv") {
    disto::CsvWriter csv(out.stream());
    csv.header({"power", "tokens", "ratio", "envelope"});
    for (const auto& row : series)
      csv.row({disto::CsvWriter::cell(row.power), disto::CsvWriter::cell(row.tokens),
               disto::CsvWriter::cell(row.ratio), disto::CsvWriter::cell(row.envelope)});
    return 0;
  }

  nlohmann::ordered_json doc;
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (int n : indices) {
    disto::Certificate c = cert_gen(n);
    c.verified = disto::verify_certificate(oracle, c);
    certs.push_back(disto::certificate_json(c));
  }
  doc["certificates"] = std::move(certs);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : series)
    rows.push_back({{"power", power_json(row.power)},
                    {"tokens", row.tokens},
                    {"ratio", row.ratio},
                    {"envelope", row.envelope}});
  doc["series"] = std::move(rows);
  out.stream() << doc.dump(2) << "\n";
  return 0;
}

template <class Oracle>
int run_cayley(const Oracle& oracle, int radius, std::size_t node_cap, int threads,
               const std::string& target, Output& out) {
  disto::CsvWriter csv(out.stream());
  try {
    auto ball = disto::cayley_ball(oracle, radius, node_cap, threads);
    if (!target.empty()) {
      csv.header({"target", "length"});
      auto it = ball.lengths.find(target);
      csv.row({target, it == ball.lengths.end() ? "unknown" : std::to_string(it->second)});
      return 0;
    }
    csv.header({"radius", "count", "total"});
    for (std::size_t r = 0; r < ball.cumulative_sizes.size(); ++r) {
      std::size_t prev = r == 0 ? 0 : ball.cumulative_sizes[r - 1];
      csv.row({disto::CsvWriter::cell(r), disto::CsvWriter::cell(ball.cumulative_sizes[r] - prev),
               disto::CsvWriter::cell(ball.cumulative_sizes[r])});
    }
    return 0;
  } catch (const disto::BallTooLarge& e) {
    csv.header({"radius", "count", "total"});
    for (std::size_t r = 0; r < e.cumulative_sizes.size(); ++r) {
      std::size_t prev = r == 0 ? 0 : e.cumulative_sizes[r - 1];
      csv.row({disto::CsvWriter::cell(r), disto::CsvWriter::cell(e.cumulative_sizes[r] - prev),
               disto::CsvWriter::cell(e.cumulative_sizes[r])});
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitBallTooLarge;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distortion certificates and surface-dynamics invariants"};
  app.require_subcommand(1);

  std::string out_path = "-";
  app.add_option("--out", out_path, "output path ('-' = stdout)")->capture_default_str();

  // distortion
  auto* cmd_dist = app.add_subcommand("distortion", "verified certificates and |f^n|/n envelope");
  std::string dist_group;
  int dist_nmax = 6;
  bool dist_tamper = false;
  std::string dist_format = "json";
  cmd_dist->add_option("group", dist_group, "mess | heis | psl2sqrt2")->required();
  cmd_dist->add_option("--n-max", dist_nmax, "largest certificate index")->capture_default_str();
  cmd_dist->add_option("--format", dist_format, "json | csv")->capture_default_str();
  cmd_dist->add_flag("--tamper", dist_tamper, "flip one token of the last certificate (self-check)");

  // cayley
  auto* cmd_cay = app.add_subcommand("cayley", "Cayley ball statistics / exact word length");
  std::string cay_group, cay_target;
  int cay_radius = 4, cay_threads = 1;
  std::size_t cay_cap = 1000000;
  cmd_cay->add_option("group", cay_group, "mess | heis | psl2sqrt2")->required();
  cmd_cay->add_option("--radius", cay_radius)->capture_default_str();
  cmd_cay->add_option("--node-cap", cay_cap)->capture_default_str();
  cmd_cay->add_option("--threads", cay_threads, "parallel frontier expansion; output bytes unchanged")
      ->capture_default_str();
  cmd_cay->add_option("--target", cay_target, "canonical key to query");

  // rotation
  auto* cmd_rot = app.add_subcommand("rotation", "orbit-average rotation vector of a lift");
  std::string rot_lift, rot_x = "0,0";
  int rot_n = 1000;
  double rot_tol = 1e-3;
  cmd_rot->add_option("--lift", rot_lift, "registry spec, e.g. shear or rigid:0.4")->required();
  cmd_rot->add_option("--x", rot_x, "base point 'x,y'")->capture_default_str();
  cmd_rot->add_option("--n", rot_n)->capture_default_str();
  cmd_rot->add_option("--tol", rot_tol)->capture_default_str();

  // egr
  auto* cmd_egr = app.add_subcommand("egr", "exponential growth rate of a curve under iteration");
  std::string egr_map, egr_curve = "e1";
  int egr_nmax = 12;
  double egr_maxseg = 1e-2, egr_cap = 1e12;
  cmd_egr->add_option("--map", egr_map, "registry spec, e.g. matA")->required();
  cmd_egr->add_option("--curve", egr_curve, "e1 | e2 | diag")->capture_default_str();
  cmd_egr->add_option("--n-max", egr_nmax)->capture_default_str();
  cmd_egr->add_option("--max-seg", egr_maxseg)->capture_default_str();
  cmd_egr->add_option("--length-cap", egr_cap)->capture_default_str();

  // spread
  auto* cmd_spr = app.add_subcommand("spread", "crossing-count envelope L(f^n a)/n");
  std::string spr_map, spr_arc = "vertical";
  int spr_nmax = 40;
  double spr_maxseg = 1e-2;
  cmd_spr->add_option("--map", spr_map, "registry spec, e.g. shear")->required();
  cmd_spr->add_option("--arc", spr_arc, "vertical")->capture_default_str();
  cmd_spr->add_option("--n-max", spr_nmax)->capture_default_str();
  cmd_spr->add_option("--max-seg", spr_maxseg)->capture_default_str();

  // calegari
  auto* cmd_cal = app.add_subcommand("calegari", "plane Heisenberg action checks");
  double cal_alpha = 1.4142135623730951;
  int cal_n = 10000;
  cmd_cal->add_option("--alpha", cal_alpha, "quotient modulus")->capture_default_str();
  cmd_cal->add_option("--n", cal_n, "orbit length for the fiber rotation estimate")
      ->capture_default_str();

  // psl2-embed
  auto* cmd_psl = app.add_subcommand("psl2-embed", "product embedding psi(g) = (g, gbar)");
  int psl_n = 3;
  cmd_psl->add_option("--n", psl_n, "largest certificate index")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    Output out(out_path);

    if (*cmd_dist) {
      if (dist_group == "mess")
        return run_distortion(disto::MessOracle{}, disto::mess_certificate, dist_nmax,
                              dist_tamper, dist_format, out);
      if (dist_group == "heis")
        return run_distortion(disto::HeisOracle{}, disto::heisenberg_certificate, dist_nmax,
                              dist_tamper, dist_format, out);
      if (dist_group == "psl2sqrt2")
        return run_distortion(disto::Psl2Oracle{}, disto::psl2_certificate, dist_nmax,
                              dist_tamper, dist_format, out);
      std::cerr << "error: UnknownRegistryName: group '" << dist_group << "'\n";
      return kExitUnknownName;
    }

    if (*cmd_cay) {
      if (cay_group == "mess")
        return run_cayley(disto::MessOracle{}, cay_radius, cay_cap, cay_threads, cay_target, out);
      if (cay_group == "heis")
        return run_cayley(disto::HeisOracle{}, cay_radius, cay_cap, cay_threads, cay_target, out);
      if (cay_group == "psl2sqrt2")
        return run_cayley(disto::Psl2Oracle{}, cay_radius, cay_cap, cay_threads, cay_target, out);
      std::cerr << "error: UnknownRegistryName: group '" << cay_group << "'\n";
      return kExitUnknownName;
    }

    if (*cmd_rot) {
      auto lift = disto::make_lift(rot_lift);
      auto report = disto::rotation_vector(lift, parse_point(rot_x), rot_n, rot_tol);
      disto::CsvWriter csv(out.stream());
      csv.header({"n", "rho_x", "rho_y", "variation", "converged"});
      csv.row({disto::CsvWriter::cell(report.n_used), disto::CsvWriter::cell(report.estimate.x),
               disto::CsvWriter::cell(report.estimate.y),
               disto::CsvWriter::cell(report.window_variation),
               disto::CsvWriter::cell(report.converged)});
      return 0;
    }

    if (*cmd_egr) {
      auto rows = disto::egr(disto::make_lift(egr_map), disto::make_curve(egr_curve), egr_nmax,
                             egr_maxseg, egr_cap);
      disto::CsvWriter csv(out.stream());
      csv.header({"n", "length", "value", "envelope"});
      for (const auto& r : rows)
        csv.row({disto::CsvWriter::cell(r.n), disto::CsvWriter::cell(r.measure),
                 disto::CsvWriter::cell(r.value), disto::CsvWriter::cell(r.envelope)});
      return 0;
    }

    if (*cmd_spr) {
      auto rows = disto::spread(disto::make_lift(spr_map), disto::make_arc(spr_arc), spr_nmax,
                                spr_maxseg);
      disto::CsvWriter csv(out.stream());
      csv.header({"n", "L", "ratio", "envelope"});
      for (const auto& r : rows)
        csv.row({disto::CsvWriter::cell(r.n), disto::CsvWriter::cell(r.measure),
                 disto::CsvWriter::cell(r.value), disto::CsvWriter::cell(r.envelope)});
      return 0;
    }

    if (*cmd_cal) {
      auto action = disto::calegari_action(cal_alpha);
      const bool comm = disto::commutator_equals_F(action);
      const bool quot = disto::quotient_compatible(action);
      auto lift = disto::fiber_rotation_lift(action);
      const double est = disto::rotation_number_circle(lift, 0.0, cal_n);
      nlohmann::ordered_json doc;
      doc["alpha"] = cal_alpha;
      doc["commutator_equals_F"] = comm;
      doc["quotient_compatible"] = quot;
      doc["fiber_rotation"] = {{"n", cal_n}, {"estimate", est}, {"expected", 1.0 / cal_alpha}};
      out.stream() << doc.dump(2) << "\n";
      return comm && quot ? 0 : kExitVerification;
    }

    if (*cmd_psl) {
      const disto::PMat2 b(disto::psl2_B());
      const auto psi_b = disto::psl2_product_embedding(b);
      const bool b_fixed = psi_b.gbar == b;

      const disto::PMat2 a(disto::psl2_A());
      bool hom_ok = true;
      for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}, std::pair{a * b, b}}) {
        hom_ok = hom_ok && psl2_product_embedding(u * v) ==
                               psl2_product_embedding(u) * psl2_product_embedding(v);
      }

      nlohmann::ordered_json doc;
      doc["psiB_equals_BB"] = b_fixed;
      doc["homomorphism_samples_ok"] = hom_ok;
      nlohmann::ordered_json exps = nlohmann::ordered_json::array();
      for (int n = 1; n <= psl_n; ++n)
        exps.push_back({{"n", n}, {"m", power_json(disto::psl2_exponent(n))}});
      doc["exponents"] = std::move(exps);
      out.stream() << doc.dump(2) << "\n";
      return b_fixed && hom_ok ? 0 : kExitVerification;
    }
  } catch (const disto::UnverifiedCertificate& e) {
    std::cerr << "error: UnverifiedCertificate: " << e.what() << "\n";
    return kExitVerification;
  } catch (const disto::LengthOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const disto::UnknownRegistryName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownName;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
