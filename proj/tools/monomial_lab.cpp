// monomial-lab: enumeration, census, bounds, inequality checks, and
// convergence probes over weighted multi-index families.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monolab/bounds.hpp"
#include "monolab/checks.hpp"
#include "monolab/constants.hpp"
#include "monolab/index_sets.hpp"
#include "monolab/sup_norm.hpp"

namespace {

using nlohmann::json;
using namespace monolab;

constexpr const char* kSchema = "monomial-lab/1";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_r(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfinity;
  const double r = std::stod(text);
  if (!(r >= 1.0)) throw CLI::ValidationError("--r", "r must be >= 1 or inf");
  return r;
}

WeightSequence parse_weights(const std::string& text) {
  if (text == "primes") return WeightSequence::primes();
  if (text.rfind("klog:", 0) == 0)
    return WeightSequence::klog(std::stod(text.substr(5)));
  if (text == "klog") return WeightSequence::klog(1.0);
  throw CLI::ValidationError("--weights", "expected primes or klog:<theta>");
}

Family parse_family(const std::string& text) {
  if (text == "jx") return Family::Jx;
  if (text == "jxm") return Family::Jxm;
  if (text == "jminus") return Family::Jminus;
  if (text == "jplus") return Family::Jplus;
  throw CLI::ValidationError("--family", "expected jx|jxm|jminus|jplus");
}

SparsePolynomial load_poly(const std::string& path) {
  json v;
  if (path == "-") {
    std::cin >> v;
  } else {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--poly", "cannot open " + path);
    in >> v;
  }
  return polynomial_from_json(v);
}

MultiIndex parse_index(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) entries.push_back(std::stoi(part));
  return MultiIndex(std::move(entries));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(std::stod(part));
  return out;
}

void emit(const json& payload, const std::string& out_path) {
  json wrapped = payload;
  wrapped["schema"] = kSchema;
  if (out_path.empty()) {
    std::cout << wrapped.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << wrapped.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

json big(const BigInt& v) { return v.str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit multi-index combinatorics and inequality checks"};
  app.require_subcommand(1);

  std::string weights_text = "primes";
  std::string out_path;
  std::uint64_t cap = kDefaultEnumCap;
  app.add_option("--out", out_path, "output file (default stdout)");

  double x = 0.0, y = 0.0, r_value = 2.0, theta = 1.0, base = 2.0;
  int m = 2, n = 4, n_max = 10, seeds = 50, dim = 16, m_max = 8;
  std::uint64_t seed = 0;
  std::string r_text = "2", poly_path, u_text = "n:0", index_text,
              variant_text = "logc", table_text, jmn_text, list_text;
  double c_param = constants::kPrimesSizeLemmaC;
  int powers = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--weights", weights_text, "primes or klog:<theta>");
    cmd->add_option("--cap", cap, "enumeration cap");
  };

  auto* cmd_enum = app.add_subcommand("enum", "list a weighted family");
  add_common(cmd_enum);
  std::string family_text = "jx";
  cmd_enum->add_option("--family", family_text)->required();
  cmd_enum->add_option("--x", x)->required();
  cmd_enum->add_option("--y", y);
  cmd_enum->add_option("--m", m);

  auto* cmd_census = app.add_subcommand("census", "count a weighted family");
  add_common(cmd_census);
  cmd_census->add_option("--family", family_text)->required();
  cmd_census->add_option("--x", x)->required();
  cmd_census->add_option("--y", y);
  cmd_census->add_option("--m", m);
  cmd_census->add_option("--c", c_param, "slack constant for the prime bound");

  auto* cmd_dec = app.add_subcommand("decompose", "split an index at the cutoff");
  add_common(cmd_dec);
  cmd_dec->add_option("--x", x)->required();
  cmd_dec->add_option("--y", y)->required();
  cmd_dec->add_option("--index", index_text, "comma-separated entries")
      ->required();

  auto* cmd_bound = app.add_subcommand("bound", "evaluate an explicit bound");
  add_common(cmd_bound);
  std::string bound_name;
  cmd_bound->add_option("name", bound_name,
                        "cmr|chi|kq-master|recommended-y|h-max|polynomial|"
                        "bohr|sigma-m")
      ->required();
  cmd_bound->add_option("--m", m);
  cmd_bound->add_option("--n", n);
  cmd_bound->add_option("--m-max", m_max);
  cmd_bound->add_option("--r", r_text);
  cmd_bound->add_option("--x", x);
  cmd_bound->add_option("--y", y);
  cmd_bound->add_option("--theta", theta);
  cmd_bound->add_option("--c", c_param);
  double j_star = 1.0, h_c = 2.0;
  cmd_bound->add_option("--j-star", j_star);
  cmd_bound->add_option("--h-c", h_c, "base constant C of h");
  cmd_bound->add_option("--variant", variant_text, "printed|logc");
  cmd_bound->add_option("--table", table_text,
                        "comma-separated x values; CSV sweep");

  auto* cmd_check = app.add_subcommand("check", "verify an inequality");
  add_common(cmd_check);
  std::string check_name;
  cmd_check->add_option("name", check_name,
                        "cauchy|mixed|thm-monomial|reduced-inclusion|"
                        "kq-partition")
      ->required();
  cmd_check->add_option("--poly", poly_path, "polynomial JSON, - for stdin");
  cmd_check->add_option("--r", r_text);
  cmd_check->add_option("--n", n);
  cmd_check->add_option("--x", x);
  cmd_check->add_option("--y", y);
  cmd_check->add_option("--m", m);
  cmd_check->add_option("--u", u_text, "sequence point, e.g. n:-0.75:b=1.2");
  cmd_check->add_option("--dim", dim, "truncation dimension for --u");
  double margin = 1e-10;
  cmd_check->add_option("--margin", margin, "relative agreement tolerance");

  auto* cmd_sidon = app.add_subcommand("sidon", "certified lower bound");
  add_common(cmd_sidon);
  cmd_sidon->add_option("--jmn", jmn_text, "m,n: full degree-m family");
  cmd_sidon->add_option("--powers", powers, "one-variable powers z^j, j < n");
  cmd_sidon->add_option("--poly", poly_path, "support of a polynomial file");
  cmd_sidon->add_option("--r", r_text);
  cmd_sidon->add_option("--seeds", seeds);

  auto* cmd_probe = app.add_subcommand("probe", "emit trend data");
  add_common(cmd_probe);
  std::string probe_name;
  cmd_probe->add_option("name", probe_name, "blocks|bohr-trend|kq-envelope")
      ->required();
  cmd_probe->add_option("--u", u_text);
  cmd_probe->add_option("--base", base);
  cmd_probe->add_option("--nmax", n_max);
  cmd_probe->add_option("--r", r_text);
  cmd_probe->add_option("--theta", theta);
  cmd_probe->add_option("--c", c_param);
  cmd_probe->add_option("--list", list_text,
                        "comma-separated x (kq-envelope) or n (bohr-trend)");
  cmd_probe->add_option("--seed", seed);

  try {
    app.parse(argc, argv);

    const WeightSequence seq = parse_weights(weights_text);
    const double r = parse_r(r_text);

    if (*cmd_enum || *cmd_census) {
      WeightedFamilySpec spec{seq, parse_family(family_text), x,
                              y > 0 ? std::optional<double>(y) : std::nullopt,
                              std::optional<int>(m)};
      if (spec.family == Family::Jx || spec.family == Family::Jminus)
        spec.m.reset();
      if (*cmd_enum) {
        json indices = json::array();
        for_each_index(
            spec, [&](const MultiIndex& j) { indices.push_back(to_json(j)); },
            cap);
        emit({{"indices", indices}, {"count", indices.size()}}, out_path);
      } else {
        const FamilyCensus census_result = census(spec, c_param, cap);
        json by_degree = json::object();
        for (const auto& [deg, count] : census_result.by_degree)
          by_degree[std::to_string(deg)] = big(count);
        json payload = {{"cardinality", big(census_result.cardinality)},
                        {"by_degree", by_degree}};
        if (census_result.analytic_bound)
          payload["analytic_bound"] = *census_result.analytic_bound;
        if (census_result.bound_satisfied)
          payload["bound_satisfied"] = *census_result.bound_satisfied;
        emit(payload, out_path);
      }
      return 0;
    }

    if (*cmd_dec) {
      const KqSplit split = kq_decompose(seq, x, y, parse_index(index_text));
      emit({{"prefix", to_json(split.prefix)},
            {"suffix", to_json(split.suffix)},
            {"suffix_degree", split.suffix_degree}},
           out_path);
      return 0;
    }

    if (*cmd_bound) {
      auto evaluate_bound = [&](double xv) -> BoundReport {
        if (bound_name == "cmr")
          return {"cmr", {{"m", double(m)}, {"r", r}}, {}, constant_cmr(m, r)};
        if (bound_name == "chi")
          return {"chi_upper",
                  {{"m", double(m)}, {"r", r}, {"j_star", j_star}},
                  {},
                  chi_upper(m, r, j_star)};
        if (bound_name == "kq-master")
          return kq_master_bound(seq, xv, y, r,
                                 seq.is_primes()
                                     ? std::optional<double>(c_param)
                                     : std::nullopt);
        if (bound_name == "recommended-y") return recommended_y(xv, theta);
        if (bound_name == "h-max") {
          const auto [mm, h] = h_maximizer(
              xv, y, h_c,
              variant_text == "printed" ? HVariant::AsPrinted : HVariant::LogC);
          return {"h_max",
                  {{"x", xv}, {"y", y}, {"C", h_c}},
                  {{"M", mm}},
                  h};
        }
        if (bound_name == "polynomial") return polynomial_bound(m, r, xv);
        if (bound_name == "bohr") {
          const auto sizes = full_family_log_reduced_sizes(n, m_max);
          return bohr_lower_bound(n, r, sizes);
        }
        if (bound_name == "sigma-m")
          return {"sigma_m", {{"m", double(m)}, {"r", r}}, {}, sigma_m(m, r)};
        throw CLI::ValidationError("name", "unknown bound " + bound_name);
      };

      if (!table_text.empty()) {
        std::string csv = "x,value\n";
        for (double xv : parse_list(table_text))
          csv += fmt17(xv) + "," + fmt17(evaluate_bound(xv).value) + "\n";
        emit_text(csv, out_path);
      } else {
        emit(evaluate_bound(x).to_json(), out_path);
      }
      return 0;
    }

    if (*cmd_check) {
      const BallSpec ball = BallSpec::lr(r, n);
      if (check_name == "cauchy" || check_name == "mixed" ||
          check_name == "thm-monomial") {
        const SparsePolynomial p = load_poly(poly_path);
        CheckReport report;
        if (check_name == "cauchy") {
          report = cauchy_bound_check(p, ball);
        } else if (check_name == "mixed") {
          report = mixed_norm_check(p, ball);
        } else {
          const SequencePoint point = SequencePoint::parse(u_text);
          std::vector<Complex> u;
          static const WeightSequence primes = WeightSequence::primes();
          for (int k = 1; k <= dim; ++k)
            u.emplace_back(point.modulus(k, &primes), 0.0);
          std::vector<MultiIndex> J;
          for (const auto& [j, c] : p.terms()) J.push_back(j);
          report = thm_monomial_check(p, ball, J, u);
        }
        emit(report.to_json(), out_path);
        return report.applicable && !report.passed ? 1 : 0;
      }
      if (check_name == "reduced-inclusion") {
        const bool ok = verify_reduced_inclusion(
            seq, x, m, y > 0 ? std::optional<double>(y) : std::nullopt, cap);
        emit({{"name", "reduced_inclusion"}, {"passed", ok}}, out_path);
        return ok ? 0 : 1;
      }
      if (check_name == "kq-partition") {
        SparsePolynomial ones;
        if (!poly_path.empty()) {
          ones = load_poly(poly_path);
        } else {
          WeightedFamilySpec spec{seq, Family::Jx, x, std::nullopt,
                                  std::nullopt};
          for_each_index(
              spec, [&](const MultiIndex& j) { ones.set(j, 1.0); }, cap);
        }
        const SequencePoint point = SequencePoint::parse(u_text);
        const KqSumResult sums = kq_sum(ones, point, seq, x, y, cap);
        const double scale = std::max(
            {std::abs(sums.direct), std::abs(sums.decomposed), 1.0});
        const bool ok =
            std::abs(sums.direct - sums.decomposed) <= margin * scale;
        emit({{"name", "kq_partition"},
              {"direct", sums.direct},
              {"decomposed", sums.decomposed},
              {"passed", ok}},
             out_path);
        if (!ok) return 1;
        return 0;
      }
      throw CLI::ValidationError("name", "unknown check " + check_name);
    }

    if (*cmd_sidon) {
      std::vector<MultiIndex> J;
      if (!jmn_text.empty()) {
        const auto parts = parse_list(jmn_text);
        if (parts.size() != 2)
          throw CLI::ValidationError("--jmn", "expected m,n");
        J = enumerate_jmn(int(parts[0]), int(parts[1]), cap);
      } else if (powers > 0) {
        for (int d = 0; d < powers; ++d)
          J.emplace_back(std::vector<int>(size_t(d), 1));
      } else if (!poly_path.empty()) {
        for (const auto& [j, c] : load_poly(poly_path).terms()) J.push_back(j);
      } else {
        throw CLI::ValidationError("sidon", "need --jmn, --powers, or --poly");
      }
      int n_cover = 1;
      for (const auto& j : J) n_cover = std::max(n_cover, j.max_entry());
      const double value =
          sidon_lower_bound(J, BallSpec::lr(r, n_cover), seeds);
      emit({{"family_size", J.size()}, {"lower_bound", value}}, out_path);
      return 0;
    }

    if (*cmd_probe) {
      if (probe_name == "blocks") {
        SparsePolynomial ones;
        WeightedFamilySpec spec{seq, Family::Jx, std::pow(base, n_max + 1),
                                std::nullopt, std::nullopt};
        for_each_index(
            spec, [&](const MultiIndex& j) { ones.set(j, 1.0); }, cap);
        const BlockSums sums = block_partial_sums(
            ones, SequencePoint::parse(u_text), seq, base, n_max, cap);
        std::string csv = "N,block_sum,cumulative\n";
        for (std::size_t i = 0; i < sums.block_sums.size(); ++i)
          csv += std::to_string(i) + "," + fmt17(sums.block_sums[i]) + "," +
                 fmt17(sums.cumulative[i]) + "\n";
        emit_text(csv, out_path);
        return 0;
      }
      if (probe_name == "bohr-trend") {
        std::string csv = "n,bohr_lower\n";
        for (double nv : parse_list(list_text.empty() ? "16,64,256,1024"
                                                      : list_text)) {
          const auto sizes = full_family_log_reduced_sizes(int(nv), m_max);
          csv += fmt17(nv) + "," +
                 fmt17(bohr_lower_bound(int(nv), r, sizes).value) + "\n";
        }
        emit_text(csv, out_path);
        return 0;
      }
      if (probe_name == "kq-envelope") {
        std::string csv = "x,sqrt_logx_loglogx,log_envelope\n";
        for (double xv :
             parse_list(list_text.empty() ? "1e2,1e3,1e4,1e5,1e6" : list_text)) {
          const double yv =
              y > 0 ? y : recommended_y(xv, seq.is_primes() ? 1.0 : seq.theta())
                              .value;
          const BoundReport report = kq_master_bound(
              seq, xv, yv, r,
              seq.is_primes() ? std::optional<double>(c_param) : std::nullopt);
          const double abscissa =
              std::sqrt(std::log(xv) * std::log(std::log(xv)));
          csv += fmt17(xv) + "," + fmt17(abscissa) + "," +
                 fmt17(std::log(
                     report.intermediates.at("envelope_over_x_sigma"))) +
                 "\n";
        }
        emit_text(csv, out_path);
        return 0;
      }
      throw CLI::ValidationError("name", "unknown probe " + probe_name);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
