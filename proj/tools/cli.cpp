#include "kunneth/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "kunneth/cache.hpp"

namespace kunneth::cli {

namespace {

bool is_file_factor(const std::string& f) { return f.rfind("file:", 0) == 0; }

void validate_factor(const std::string& f) {
  if (f == "r1" || f == "s1") return;
  if (!is_file_factor(f)) throw ConfigError("unknown factor '" + f + "' (expected r1, s1 or file:<path>)");
  std::string path = f.substr(5);
  if (!std::filesystem::exists(path)) throw ConfigError("module file not found: " + path);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::shared_ptr<const RightModule> make_module(const std::string& factor, std::shared_ptr<const Operad> ass, int k) {
  if (factor == "r1") return module_from_operad(ass);
  if (factor == "s1") return circle_module(ass);
  std::string path = factor.substr(5);
  std::shared_ptr<const RightModule> m;
  try {
    m = load_module(path, ass);
  } catch (const LoadError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (m->max_arity() < k)
    throw TruncationError(path + " covers arities up to " + std::to_string(m->max_arity()) + ", need " +
                          std::to_string(k));
  return m;
}

/// Largest arity a file module in the config declares, so the built-in Ass covers it.
int file_arity(const RunConfig& config) {
  int n = 0;
  for (const auto& f : {config.left, config.right})
    if (is_file_factor(f)) {
      auto j = read_json_file(f.substr(5));
      if (j.contains("max_arity") && j["max_arity"].is_number_integer()) n = std::max(n, j["max_arity"].get<int>());
    }
  return n;
}

DiagFactor make_factor(const RunConfig& config, const std::string& name, std::shared_ptr<const Operad> ass, int k) {
  auto m = make_module(name, ass, k);
  bool free = config.resolution == "auto" && name == "r1";
  return {m, free ? Resolution::Free : Resolution::Bar};
}

std::shared_ptr<const TableCache> make_cache(const RunConfig& config) {
  if (config.cache_dir.empty()) return nullptr;
  return std::make_shared<TableCache>(config.cache_dir);
}

nlohmann::json scalar_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

std::vector<std::string> class_labels(int k) {
  std::vector<std::string> out;
  for (const auto& sigma : class_representatives(k)) out.push_back(cycle_type_label(cycle_type(sigma)));
  return out;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

}  // namespace

std::pair<int, int> parse_points(const std::string& s) {
  auto parse_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size() || v < 0) throw ConfigError("bad point count '" + s + "'");
    return v;
  };
  auto dash = s.find('-');
  if (dash == std::string::npos) {
    int k = parse_int(s);
    return {k, k};
  }
  int a = parse_int(s.substr(0, dash)), b = parse_int(s.substr(dash + 1));
  if (a > b) throw ConfigError("empty point range '" + s + "'");
  return {a, b};
}

void apply_config_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "left") config.left = value.get<std::string>();
      else if (key == "right") config.right = value.get<std::string>();
      else if (key == "points") {
        auto [a, b] = value.is_number_integer() ? std::pair{value.get<int>(), value.get<int>()}
                                                : parse_points(value.get<std::string>());
        config.points_first = a;
        config.points_last = b;
      } else if (key == "max_degree") config.max_degree = value.get<int>();
      else if (key == "characters") config.characters = value.get<bool>();
      else if (key == "format") config.format = value.get<std::string>();
      else if (key == "cache_dir") config.cache_dir = value.get<std::string>();
      else if (key == "threads") config.threads = value.get<int>();
      else if (key == "resolution") config.resolution = value.get<std::string>();
      else throw ConfigError("unknown config field '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

void validate(const RunConfig& config) {
  validate_factor(config.left);
  validate_factor(config.right);
  if (config.points_first < 0 || config.points_first > config.points_last) throw ConfigError("bad point range");
  if (config.max_degree && *config.max_degree < 0) throw ConfigError("max_degree must be >= 0");
  if (config.format != "table" && config.format != "json" && config.format != "csv")
    throw ConfigError("format must be table, json or csv");
  if (config.resolution != "auto" && config.resolution != "bar")
    throw ConfigError("resolution must be auto or bar");
  if (config.threads < 1) throw ConfigError("threads must be >= 1");
}

int default_max_degree(const RunConfig& config, int k) {
  if (k == 0) return 0;
  int d = k - 1;
  for (const auto& f : {config.left, config.right})
    if (f != "r1") ++d;
  return d;
}

std::vector<E2Result> run_e2(const RunConfig& config) {
  validate(config);
  int arity = std::max({config.points_last, 2, file_arity(config)});
  auto ass = std::make_shared<const AssOperad>(arity);
  auto ger = std::make_shared<const GerOperad>(arity, make_cache(config));
  std::vector<E2Result> results;
  for (int k = config.points_first; k <= config.points_last; ++k) {
    int d = config.max_degree.value_or(default_max_degree(config, k));
    Diagonal diag(make_factor(config, config.left, ass, k), make_factor(config, config.right, ass, k), ger);
    DiagComplex complex(diag, k, e2_bounds(d), true, config.threads);
    E2Result r;
    try {
      r.e2 = e2_page(complex, d);
    } catch (const std::out_of_range& e) {
      throw TruncationError(e.what());
    }
    r.e2.left = config.left;
    r.e2.right = config.right;
    r.betti = betti(r.e2);
    r.characters = config.characters;
    if (config.characters) add_characters(r.betti, complex, d);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_table(const RunConfig& config, const std::vector<E2Result>& results) {
  std::ostringstream os;
  for (std::size_t n = 0; n < results.size(); ++n) {
    const E2Result& r = results[n];
    const int d_max = r.e2.d_max;
    if (n) os << "\n";
    os << "factors: " << config.left << " x " << config.right << "  k = " << r.e2.k << "\n";
    os << "truncation: p_max = " << r.e2.p_max << ", d_max = " << d_max << "\n";
    std::size_t width = 3;
    for (const auto& [pq, dim] : r.e2.entries) width = std::max(width, std::to_string(dim).size() + 1);
    os << "E2 (rows q, columns p):\n" << std::setw(5) << "q\\p";
    for (int p = 0; p <= d_max; ++p) os << std::setw(static_cast<int>(width)) << p;
    os << "\n";
    for (int q = 0; q <= d_max; ++q) {
      os << std::setw(5) << q;
      for (int p = 0; p + q <= d_max; ++p) os << std::setw(static_cast<int>(width)) << r.e2.entries.at({p, q});
      os << "\n";
    }
    os << "betti:";
    for (auto b : r.betti.betti) os << " " << b;
    os << "\n";
    if (r.characters) {
      os << "characters (cycle type: degrees 0.." << d_max << "):\n";
      for (const auto& cls : class_labels(r.e2.k)) {
        os << "  " << cls << ":";
        for (int d = 0; d <= d_max; ++d) {
          auto it = r.betti.characters.find({d, cls});
          os << " " << (it == r.betti.characters.end() ? Scalar(0) : it->second).get_str();
        }
        os << "\n";
      }
    }
    if (r.betti.collapse_assumed) os << "collapse at E2 over Q assumed\n";
  }
  return os.str();
}

nlohmann::json to_json(const RunConfig& config, const E2Result& r) {
  nlohmann::json j;
  j["factors"] = {config.left, config.right};
  j["k"] = r.e2.k;
  j["e2"] = nlohmann::json::array();
  for (const auto& [pq, dim] : r.e2.entries) j["e2"].push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
  j["betti"] = nlohmann::json::array();
  for (std::size_t d = 0; d < r.betti.betti.size(); ++d) j["betti"].push_back({{"d", d}, {"dim", r.betti.betti[d]}});
  if (r.characters) {
    j["characters"] = nlohmann::json::array();
    for (int d = 0; d <= r.e2.d_max; ++d)
      for (const auto& cls : class_labels(r.e2.k)) {
        auto it = r.betti.characters.find({d, cls});
        Scalar v = it == r.betti.characters.end() ? Scalar(0) : it->second;
        j["characters"].push_back({{"d", d}, {"class", cls}, {"value", scalar_json(v)}});
      }
  }
  j["truncation"] = {{"p_max", r.e2.p_max}, {"d_max", r.e2.d_max}};
  j["collapse_assumed"] = r.betti.collapse_assumed;
  return j;
}

std::string format_json(const RunConfig& config, const std::vector<E2Result>& results) {
  nlohmann::json j;
  if (config.points_first == config.points_last && results.size() == 1) {
    j = to_json(config, results.front());
  } else {
    j = nlohmann::json::array();
    for (const auto& r : results) j.push_back(to_json(config, r));
  }
  return j.dump(2) + "\n";
}

std::string format_csv(const std::vector<E2Result>& results) {
  std::ostringstream os;
  os << "k,kind,p,q,d,class,value\n";
  for (const auto& r : results) {
    const int k = r.e2.k;
    for (const auto& [pq, dim] : r.e2.entries)
      os << k << ",e2," << pq.first << "," << pq.second << ",,," << dim << "\n";
    for (std::size_t d = 0; d < r.betti.betti.size(); ++d) os << k << ",betti,,," << d << ",," << r.betti.betti[d] << "\n";
    if (r.characters)
      for (int d = 0; d <= r.e2.d_max; ++d)
        for (const auto& cls : class_labels(k)) {
          auto it = r.betti.characters.find({d, cls});
          Scalar v = it == r.betti.characters.end() ? Scalar(0) : it->second;
          os << k << ",character,,," << d << "," << csv_field(cls) << "," << v.get_str() << "\n";
        }
  }
  return os.str();
}

namespace {

struct Flags {
  std::string left, right, points, format, cache_dir, config, resolution;
  int max_degree = 0, threads = 1;
  bool characters = false;
};

void add_run_options(CLI::App& sub, Flags& f) {
  sub.add_option("--left", f.left, "left factor: r1, s1 or file:<module.json>");
  sub.add_option("--right", f.right, "right factor: r1, s1 or file:<module.json>");
  sub.add_option("--points", f.points, "number of points k, or a range a-b");
  sub.add_option("--max-degree", f.max_degree, "top total degree d_max");
  sub.add_flag("--characters", f.characters, "also emit Sigma_k characters");
  sub.add_option("--format", f.format, "table, json or csv");
  sub.add_option("--cache-dir", f.cache_dir, "directory for cached composition tables (default $KUNNETH_CACHE_DIR)");
  sub.add_option("--threads", f.threads, "worker threads");
  sub.add_option("--resolution", f.resolution, "auto (free factors resolve themselves) or bar");
  sub.add_option("--config", f.config, "JSON file with the same field names");
}

RunConfig build_config(const CLI::App& sub, const Flags& f) {
  RunConfig c;
  if (const char* env = std::getenv("KUNNETH_CACHE_DIR")) c.cache_dir = env;
  c.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (sub.count("--config")) apply_config_json(c, read_json_file(f.config));
  if (sub.count("--left")) c.left = f.left;
  if (sub.count("--right")) c.right = f.right;
  if (sub.count("--points")) std::tie(c.points_first, c.points_last) = parse_points(f.points);
  if (sub.count("--max-degree")) c.max_degree = f.max_degree;
  if (sub.count("--characters")) c.characters = f.characters;
  if (sub.count("--format")) c.format = f.format;
  if (sub.count("--cache-dir")) c.cache_dir = f.cache_dir;
  if (sub.count("--threads")) c.threads = f.threads;
  if (sub.count("--resolution")) c.resolution = f.resolution;
  validate(c);
  return c;
}

int cmd_check(const std::string& kind, const std::string& target, int bound, std::ostream& out) {
  AxiomReport report;
  std::string what;
  if (kind == "operad") {
    if (target == "ass") {
      report = check_operad_axioms(AssOperad(bound), bound);
    } else if (target == "ger") {
      report = check_operad_axioms(GerOperad(bound), bound);
    } else if (is_file_factor(target)) {
      std::string path = target.substr(5);
      try {
        auto o = operad_from_json(read_json_file(path));
        report = check_operad_axioms(*o, std::min(bound, o->max_arity()));
      } catch (const LoadError& e) {
        report.violations.push_back(e.what());
      }
    } else {
      throw ConfigError("unknown operad '" + target + "' (expected ass, ger or file:<path>)");
    }
  } else if (kind == "module") {
    validate_factor(target);
    RunConfig c;
    c.left = target;
    int arity = std::max({bound, 2, file_arity(c)});
    auto ass = std::make_shared<const AssOperad>(arity);
    try {
      auto m = make_module(target, ass, 0);
      report = check_module_axioms(*m, std::min(bound, m->max_arity()));
    } catch (const ConfigError& e) {
      report.violations.push_back(e.what());
    }
  } else {
    throw ConfigError("check expects 'operad' or 'module', got '" + kind + "'");
  }
  if (report.ok()) {
    out << "ok: " << kind << " " << target << " satisfies the axioms up to arity " << bound << "\n";
    return kOk;
  }
  for (const auto& v : report.violations) out << "violation: " << v << "\n";
  out << "fail: " << report.violations.size() << " violation(s)\n";
  return kValidation;
}

int cmd_bar_dims(const RunConfig& config, int levels, bool normalized, std::ostream& out) {
  int arity = std::max({config.points_last, 2, file_arity(config)});
  auto ass = std::make_shared<const AssOperad>(arity);
  auto ger = std::make_shared<const GerOperad>(arity, make_cache(config));
  struct Row {
    int k, p;
    std::size_t left, right, diag;
  };
  std::vector<Row> rows;
  for (int k = config.points_first; k <= config.points_last; ++k) {
    int d = config.max_degree.value_or(default_max_degree(config, k));
    auto l = make_factor(config, config.left, ass, k);
    auto r = make_factor(config, config.right, ass, k);
    Diagonal diag(l, r, ger);
    int top = levels >= 0 ? levels : d + 1;
    for (int p = 0; p <= top; ++p)
      rows.push_back({k, p, BarLevel(*l.module, p, k, normalized, d).size(),
                      BarLevel(*r.module, p, k, normalized, d).size(), diag_level_count(diag, p, k, normalized, d)});
  }
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"k", r.k}, {"p", r.p}, {"bar_left", r.left}, {"bar_right", r.right}, {"diag", r.diag}});
    out << j.dump(2) << "\n";
  } else if (config.format == "csv") {
    out << "k,p,bar_left,bar_right,diag\n";
    for (const auto& r : rows) out << r.k << "," << r.p << "," << r.left << "," << r.right << "," << r.diag << "\n";
  } else {
    out << std::setw(4) << "k" << std::setw(4) << "p" << std::setw(14) << "bar_left" << std::setw(14) << "bar_right"
        << std::setw(14) << "diag" << "\n";
    for (const auto& r : rows)
      out << std::setw(4) << r.k << std::setw(4) << r.p << std::setw(14) << r.left << std::setw(14) << r.right
          << std::setw(14) << r.diag << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact E2 pages of the operadic Kunneth spectral sequence for configuration spaces"};
  app.name("kunneth");
  app.require_subcommand(1);

  Flags e2_flags;
  auto* e2 = app.add_subcommand("e2", "E2 page, Betti numbers and characters of Conf_k(M x N)");
  add_run_options(*e2, e2_flags);

  std::string kind, target;
  int bound = 4;
  auto* check = app.add_subcommand("check", "verify operad or module axioms");
  check->add_option("kind", kind, "operad or module")->required();
  check->add_option("target", target, "ass, ger, r1, s1 or file:<path>")->required();
  check->add_option("--arity", bound, "largest arity checked");

  Flags bar_flags;
  int levels = -1;
  bool unnormalized = false;
  auto* bar = app.add_subcommand("bar-dims", "dimensions of bar and diagonal levels");
  add_run_options(*bar, bar_flags);
  bar->add_option("--levels", levels, "largest level p (default d_max + 1)");
  bar->add_flag("--unnormalized", unnormalized, "count degenerate words too");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*e2) {
      RunConfig config = build_config(*e2, e2_flags);
      auto results = run_e2(config);
      if (config.format == "json") out << format_json(config, results);
      else if (config.format == "csv") out << format_csv(results);
      else out << format_table(config, results);
      return kOk;
    }
    if (*check) return cmd_check(kind, target, bound, out);
    if (*bar) return cmd_bar_dims(build_config(*bar, bar_flags), levels, !unnormalized, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const TruncationError& e) {
    err << "error: truncation exceeded: " << e.what() << "\n";
    return kTruncation;
  } catch (const NotAComplex& e) {
    err << "error: inconsistent complex: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}

}  // namespace kunneth::cli
