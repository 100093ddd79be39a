// ratio-bounds: command-line front end for the bounds library.
//
//   ratio-bounds ratio    --family pcf-u --n 1 --x 0 --depth 0 --format json
//   ratio-bounds mills    --x 0 --depth 1
//   ratio-bounds validate --family laguerre-neg --samples 500 --seed 42
//
// Exit status: 0 on success, 1 when an oracle value falls outside its
// enclosure, 2 on invalid input or a region/validity failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratio_bounds/families.hpp"
#include "ratio_bounds/oracle.hpp"

namespace {

using ratio_bounds::Enclosure;
using ratio_bounds::Params;
using nlohmann::ordered_json;
namespace fam = ratio_bounds::families;
namespace orc = ratio_bounds::oracle;

struct Config {
  std::string command;
  std::string family;
  std::optional<double> n, alpha, m, nu;
  std::optional<double> x, x_from, x_to, x_step;
  std::optional<int> depth;
  double rel_tol = ratio_bounds::kDefaultRelTol;
  std::string format = "csv";
  std::uint64_t seed = 1;
  int samples = 100;
  bool with_oracle = false;
  std::string output;
};

struct Row {
  std::string family;
  Params params;
  double x = 0;
  std::optional<int> depth;
  std::optional<double> lower, upper, width, oracle;
  std::optional<bool> contained;
  std::string provenance;
  ordered_json extra;  // command-specific JSON fields
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json jnum(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string render_csv(const std::vector<Row>& rows) {
  std::ostringstream os;
  os << "family,n,alpha,m,nu,x,depth,lower,upper,oracle,contained,provenance\n";
  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  for (const auto& r : rows) {
    os << csv_field(r.family) << ',' << opt(r.params.n) << ',' << opt(r.params.alpha) << ','
       << opt(r.params.m) << ',' << opt(r.params.nu) << ',' << num(r.x) << ','
       << (r.depth ? std::to_string(*r.depth) : "") << ',' << opt(r.lower) << ','
       << opt(r.upper) << ',' << opt(r.oracle) << ','
       << (r.contained ? (*r.contained ? "true" : "false") : "") << ','
       << csv_field(r.provenance) << '\n';
  }
  return os.str();
}

ordered_json row_json(const Row& r) {
  ordered_json params = ordered_json::object();
  if (r.params.n) params["n"] = *r.params.n;
  if (r.params.alpha) params["alpha"] = *r.params.alpha;
  if (r.params.m) params["m"] = *r.params.m;
  if (r.params.nu) params["nu"] = *r.params.nu;
  ordered_json j;
  j["family"] = r.family;
  j["params"] = params;
  j["x"] = r.x;
  j["depth"] = r.depth ? ordered_json(*r.depth) : ordered_json(nullptr);
  j["lower"] = jnum(r.lower);
  j["upper"] = jnum(r.upper);
  if (r.width) j["width"] = jnum(r.width);
  j["oracle"] = jnum(r.oracle);
  j["contained"] = r.contained ? ordered_json(*r.contained) : ordered_json(nullptr);
  j["provenance"] = r.provenance;
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

// A single row is printed as an object, several as an array.
std::string render_json(const std::vector<Row>& rows) {
  if (rows.size() == 1) return row_json(rows.front()).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ratio_bounds::DomainError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw ratio_bounds::DomainError("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

void emit(const Config& cfg, const std::vector<Row>& rows) {
  const std::string text = cfg.format == "json" ? render_json(rows) : render_csv(rows);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_atomically(cfg.output, text);
  }
}

Params params_of(const Config& cfg) { return Params{cfg.n, cfg.alpha, cfg.m, cfg.nu}; }

std::vector<double> x_values(const Config& cfg) {
  if (cfg.x) return {*cfg.x};
  if (!cfg.x_from || !cfg.x_to || !cfg.x_step) {
    throw ratio_bounds::DomainError("give --x, or --x-from, --x-to and --x-step");
  }
  if (!(*cfg.x_step > 0) || *cfg.x_to < *cfg.x_from) {
    throw ratio_bounds::DomainError("x range is empty: need x-from <= x-to and x-step > 0");
  }
  std::vector<double> xs;
  const auto count = static_cast<long>(std::floor((*cfg.x_to - *cfg.x_from) / *cfg.x_step + 1e-9));
  if (count > 1000000) throw ratio_bounds::DomainError("x range has more than 10^6 points");
  for (long i = 0; i <= count; ++i) xs.push_back(*cfg.x_from + static_cast<double>(i) * *cfg.x_step);
  return xs;
}

void require_family(const Config& cfg) {
  if (cfg.family.empty()) throw ratio_bounds::DomainError(cfg.command + ": --family is required");
}

// Oracle value and containment for a row, at relative slack 1e-12.
void attach_oracle(Row& row, const orc::OracleValue& v) {
  row.oracle = v.value;
  row.contained = Enclosure<double>{row.lower.value_or(0.0),
                                    row.upper.value_or(std::numeric_limits<double>::infinity())}
                      .contains(v.value, 1e-12);
}

Row enclosure_row(const std::string& family, const Params& p, double x, int depth,
                  const Enclosure<double>& e) {
  Row r;
  r.family = family;
  r.params = p;
  r.x = x;
  r.depth = depth;
  r.lower = e.lower;
  r.upper = e.upper;
  r.width = e.width();
  r.provenance = e.provenance;
  return r;
}

// Families whose depth selects a level and which report one enclosure there.
bool is_levelled(const std::string& family) {
  return family == "hermite-real" || family == "laguerre-real";
}

int default_depth(const Config& cfg) {
  return cfg.depth.value_or(is_levelled(cfg.family) ? 0 : ratio_bounds::kDefaultRefinementDepth);
}

int count_failures(const std::vector<Row>& rows) {
  int bad = 0;
  for (const auto& r : rows) bad += r.contained && !*r.contained;
  return bad;
}

int finish(const Config& cfg, const std::vector<Row>& rows) {
  emit(cfg, rows);
  return count_failures(rows) ? 1 : 0;
}

int cmd_ratio(const Config& cfg) {
  require_family(cfg);
  const Params p = params_of(cfg);
  const bool levelled = is_levelled(cfg.family);
  const int depth = default_depth(cfg);
  std::vector<Row> rows;
  for (double x : x_values(cfg)) {
    const auto seq = fam::ratio_enclosure(cfg.family, p, x, depth, cfg.rel_tol);
    std::optional<orc::OracleValue> ov;
    if (cfg.with_oracle) ov = orc::oracle_ratio(cfg.family, p, x);
    for (std::size_t k = 0; k < seq.enclosures.size(); ++k) {
      Row r = enclosure_row(cfg.family, p, x, levelled ? depth : static_cast<int>(k),
                            seq.enclosures[k]);
      r.extra["target"] = seq.enclosures[k].target;
      if (ov) attach_oracle(r, *ov);
      rows.push_back(std::move(r));
    }
  }
  return finish(cfg, rows);
}

int cmd_logderiv(const Config& cfg) {
  const std::string family = cfg.family.empty() ? "pcf-u" : cfg.family;
  if (family != "pcf-u") throw ratio_bounds::DomainError("logderiv: only pcf-u is supported");
  const Params p = params_of(cfg);
  const double n = ratio_bounds::require_param(p.n, "n", family);
  std::vector<Row> rows;
  for (double x : x_values(cfg)) {
    const auto e = fam::pcf_logderiv_bounds(n, x);
    Row r = enclosure_row(family, p, x, 0, e);
    r.depth.reset();
    r.extra["target"] = "-U'(n,x)/U(n,x)";
    if (cfg.with_oracle) attach_oracle(r, orc::oracle_logderiv(family, p, x));
    rows.push_back(std::move(r));
  }
  return finish(cfg, rows);
}

int cmd_mills(const Config& cfg) {
  const int depth = cfg.depth.value_or(5);
  std::vector<Row> rows;
  for (double x : x_values(cfg)) {
    const auto seq = fam::mills_bounds(x, depth);
    std::optional<orc::OracleValue> ov;
    if (cfg.with_oracle) ov = orc::oracle_mills(x);
    for (std::size_t k = 0; k < seq.enclosures.size(); ++k) {
      Row r = enclosure_row("mills", Params{}, x, static_cast<int>(k) + 1, seq.enclosures[k]);
      if (ov) attach_oracle(r, *ov);
      rows.push_back(std::move(r));
    }
  }
  return finish(cfg, rows);
}

int cmd_turan(const Config& cfg) {
  require_family(cfg);
  const Params p = params_of(cfg);
  const auto xs = x_values(cfg);
  const auto& f = fam::family(cfg.family);
  std::vector<Row> rows;
  fam::TuranOracle oracle = [](const std::string& id, const Params& q, double x) {
    return std::optional<double>(orc::oracle_turan(id, q, x).value);
  };
  for (std::size_t which = 0; which < f.turan.size(); ++which) {
    const auto rep = fam::turan_check(cfg.family, p, xs, oracle, which);
    for (const auto& s : rep.samples) {
      Row r = enclosure_row(cfg.family, p, s.x, 0, s.pointwise);
      r.depth.reset();
      r.width.reset();
      r.oracle = s.oracle;
      r.contained = s.verdict;
      r.provenance = rep.id + ": " + rep.quantity;
      r.extra["uniform"] = {jnum(rep.uniform.lo), jnum(rep.uniform.hi)};
      ordered_json chain = ordered_json::array();
      for (const auto& l : s.chain) chain.push_back({{"inequality", l.text}, {"holds", l.holds}});
      r.extra["chain"] = chain;
      rows.push_back(std::move(r));
    }
  }
  return finish(cfg, rows);
}

int cmd_zeros(const Config& cfg) {
  const std::string family = cfg.family.empty() ? "hermite" : cfg.family;
  fam::ZeroFamily zf;
  if (family == "hermite") {
    zf = fam::ZeroFamily::Hermite;
  } else if (family == "laguerre") {
    zf = fam::ZeroFamily::Laguerre;
    if (!cfg.alpha) throw ratio_bounds::DomainError("zeros: laguerre needs --alpha");
  } else {
    throw ratio_bounds::DomainError("zeros: family must be hermite or laguerre");
  }
  const double nd = ratio_bounds::require_param(cfg.n, "n", family);
  if (!ratio_bounds::is_integer(nd)) throw ratio_bounds::DomainError("zeros: n must be an integer");
  const int n = static_cast<int>(nd);
  const int max_level = zf == fam::ZeroFamily::Hermite ? 3 : 2;
  std::vector<int> levels;
  if (cfg.depth) {
    levels.push_back(*cfg.depth);
  } else {
    for (int k = 0; k <= max_level && k < n; ++k) levels.push_back(k);
  }
  const auto zero = orc::oracle_largest_zero(family, n, cfg.alpha.value_or(0.0));
  std::vector<Row> rows;
  for (int level : levels) {
    const auto rep = fam::largest_zero_upper_bound(zf, n, cfg.alpha, level);
    Row r;
    r.family = family;
    r.params = zf == fam::ZeroFamily::Hermite ? Params::with_n(n) : Params::n_alpha(n, *cfg.alpha);
    r.x = rep.bound;
    r.depth = level;
    r.upper = rep.bound;
    r.oracle = zero.value;
    if (rep.condition_satisfied) r.contained = zero.value < rep.bound;
    r.provenance = rep.condition_text + (rep.condition_satisfied ? " (holds)" : " (fails)");
    r.extra["condition_satisfied"] = rep.condition_satisfied;
    r.extra["condition_value"] = jnum(rep.condition_value);
    if (rep.printed_candidate) {
      r.extra["printed_candidate"] = *rep.printed_candidate;
      r.extra["printed_candidate_in_region"] = *rep.printed_candidate_in_region;
    }
    rows.push_back(std::move(r));
  }
  return finish(cfg, rows);
}

Row evaluate_point(const std::string& family, const fam::Sample& s, double rel_tol) {
  const auto seq = fam::ratio_enclosure(family, s.params, s.x, s.depth, rel_tol);
  Row r = enclosure_row(family, s.params, s.x, s.depth, seq.last());
  attach_oracle(r, orc::oracle_ratio(family, s.params, s.x));
  return r;
}

int cmd_validate(const Config& cfg) {
  require_family(cfg);
  if (cfg.samples < 1) throw ratio_bounds::DomainError("validate: --samples must be >= 1");
  const auto& f = fam::family(cfg.family);
  std::mt19937_64 rng(cfg.seed);
  std::vector<Row> rows;
  for (int i = 0; i < cfg.samples; ++i) {
    const auto s = f.sample(rng);
    rows.push_back(evaluate_point(cfg.family, s, cfg.rel_tol));
  }
  const int bad = count_failures(rows);
  if (!cfg.output.empty()) emit(cfg, rows);
  std::cout << (cfg.samples - bad) << "/" << cfg.samples << " contained\n";
  for (const auto& r : rows) {
    if (r.contained && !*r.contained) {
      std::cerr << "not contained: " << r.params.describe() << ", x=" << num(r.x)
                << ", depth=" << *r.depth << ": [" << num(*r.lower) << ", " << num(*r.upper)
                << "] vs " << num(*r.oracle) << "\n";
    }
  }
  return bad ? 1 : 0;
}

int cmd_sweep(const Config& cfg) {
  require_family(cfg);
  const Params p = params_of(cfg);
  const int depth = default_depth(cfg);
  std::vector<Row> rows;
  for (double x : x_values(cfg)) {
    rows.push_back(evaluate_point(cfg.family, fam::Sample{p, x, depth}, cfg.rel_tol));
  }
  return finish(cfg, rows);
}

int run(const Config& cfg) {
  if (cfg.command == "ratio") return cmd_ratio(cfg);
  if (cfg.command == "logderiv") return cmd_logderiv(cfg);
  if (cfg.command == "mills") return cmd_mills(cfg);
  if (cfg.command == "turan") return cmd_turan(cfg);
  if (cfg.command == "zeros") return cmd_zeros(cfg);
  if (cfg.command == "validate") return cmd_validate(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  throw ratio_bounds::DomainError("unknown command '" + cfg.command + "'");
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--family", cfg.family, "family name");
  sub->add_option("--n", cfg.n, "index n");
  sub->add_option("--alpha", cfg.alpha, "parameter alpha");
  sub->add_option("--m", cfg.m, "order m");
  sub->add_option("--nu", cfg.nu, "degree nu (laguerre-neg)");
  sub->add_option("--x", cfg.x, "argument x");
  sub->add_option("--x-from", cfg.x_from, "first x of a range");
  sub->add_option("--x-to", cfg.x_to, "last x of a range");
  sub->add_option("--x-step", cfg.x_step, "step of a range");
  sub->add_option("--depth", cfg.depth, "refinement depth (level for zero and real-axis bounds)");
  sub->add_option("--rel-tol", cfg.rel_tol, "relative width at which refinement stops");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", cfg.output, "write the table to this file");
  sub->add_flag("--oracle", cfg.with_oracle, "attach oracle values and containment");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified bounds for ratios of special functions"};
  app.require_subcommand(1);
  Config cfg;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"ratio", "enclosure sequence for y_n/y_{n-1}"},
      {"logderiv", "bracket for -U'(n,x)/U(n,x)"},
      {"mills", "continued-fraction bounds for the Mills ratio"},
      {"turan", "Turán-type report, checked against the oracle"},
      {"zeros", "upper bounds on the largest zero of H_n or L_n^alpha"},
      {"validate", "random points in the validity region, bounds vs oracle"},
      {"sweep", "bounds and oracle on an x grid"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    if (std::string(name) == "validate") {
      sub->add_option("--seed", cfg.seed, "sampling seed");
      sub->add_option("--samples", cfg.samples, "number of samples");
    }
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run(cfg);
  } catch (const ratio_bounds::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
