#include "kmw_cli/cli.hpp"

#include "kmw/kmw.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

namespace kmw::cli {

namespace {

using nlohmann::json;

enum class OutputFormat { Json, Table, Csv };

struct CliConfig {
  OutputFormat output = OutputFormat::Json;
  std::string cache_dir;
  bool no_cache = false;
  bool cache_readonly = false;
  bool verify_cache_hits = false;
  int threads = 1;
};

// Rows rendered for table and csv output.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n;") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void render(const json& doc, const Rows& rows, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      out << doc.dump(2) << "\n";
      return;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < rows.header.size(); ++i) out << (i ? "," : "") << csv_field(rows.header[i]);
      out << "\n";
      for (const auto& row : rows.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
      return;
    case OutputFormat::Table: {
      std::vector<std::size_t> width(rows.header.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = rows.header[i].size();
      for (const auto& row : rows.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "");
          if (i + 1 < cells.size()) {
            out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
          } else {
            out << cells[i];
          }
        }
        out << "\n";
      };
      line(rows.header);
      for (const auto& row : rows.rows) line(row);
      return;
    }
  }
}

json envelope(const std::string& command, const CartanPtr& data) {
  return {{"schema_version", 1}, {"command", command}, {"type", data->label()}};
}

json rational_array(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::unique_ptr<CharacterCache> make_cache(const CliConfig& cfg) {
  CacheOptions options;
  if (!cfg.no_cache) {
    options.directory = cfg.cache_dir.empty() ? CharacterCache::default_directory()
                                                : std::filesystem::path(cfg.cache_dir);
  }
  options.read_only = cfg.cache_readonly;
  options.verify_hits = cfg.verify_cache_hits;
  return std::make_unique<CharacterCache>(options);
}

int cmd_cartan(const CartanPtr& data, const CliConfig& cfg, std::ostream& out) {
  json doc = envelope("cartan", data);
  doc["rank"] = data->rank();
  doc["cartan_matrix"] = data->cartan_matrix();
  doc["marks"] = data->marks();
  doc["comarks"] = data->comarks();
  doc["symmetrizers"] = rational_array(data->symmetrizers());
  doc["dual_coxeter"] = data->dual_coxeter();
  doc["dim_finite"] = data->dim_finite();
  doc["highest_root"] = data->highest_root();
  doc["finite_positive_roots"] = data->finite_positive_roots().size();

  Rows rows{{"node", "cartan_row", "mark", "comark", "symmetrizer"}, {}};
  for (int i = 0; i < data->size(); ++i) {
    rows.rows.push_back({std::to_string(i), join(data->cartan_matrix()[i]), std::to_string(data->marks()[i]),
                         std::to_string(data->comarks()[i]), to_string(data->symmetrizers()[i])});
  }
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

int cmd_vertices(const CartanPtr& data, const std::string& lam_text, const CliConfig& cfg, std::ostream& out) {
  const Weight lam = parse_weight(data, lam_text);
  const DominantPolyhedron poly = build_polyhedron(lam);
  json doc = envelope("vertices", data);
  doc["lambda"] = to_string(lam);
  doc["normalized_shift"] = to_string(poly.normalized_shift);
  doc["ray"] = to_string(poly.ray);
  json verts = json::array();
  Rows rows{{"J", "vertex"}, {}};
  for (const auto& [j, v] : poly.vertices) {
    verts.push_back({{"J", j.to_string()}, {"vertex", to_string(v)}});
    rows.rows.push_back({"{" + j.to_string() + "}", to_string(v)});
  }
  doc["vertices"] = std::move(verts);
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

int cmd_maximal(const CartanPtr& data, const std::string& lam_text, const CliConfig& cfg, std::ostream& out) {
  const Weight lam = parse_weight(data, lam_text);
  json doc = envelope("maximal", data);
  doc["lambda"] = to_string(lam);
  json list = json::array();
  Rows rows{{"weight", "coords", "grade"}, {}};
  for (const auto& w : delta_maximal_dominant(lam)) {
    const RootCoords rc = to_root_coords(lam - w);
    IntCoords c;
    for (const auto& x : rc.coords) c.push_back(static_cast<int>(to_int64(x)));
    list.push_back({{"weight", to_string(w)}, {"coords", c}, {"grade", c[0]}});
    rows.rows.push_back({to_string(w), to_string(c), std::to_string(c[0])});
  }
  doc["weights"] = std::move(list);
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

int cmd_char(const CartanPtr& data, const std::string& lam_text, int depth, const CliConfig& cfg,
             std::ostream& out) {
  const Weight lam = parse_weight(data, lam_text);
  auto cache = make_cache(cfg);
  const auto chr = cache->get(lam, depth);
  json doc = envelope("char", data);
  doc["lambda"] = to_string(lam);
  doc["depth"] = depth;
  json entries = json::array();
  Rows rows{{"coords", "weight", "grade", "multiplicity"}, {}};
  for (const auto& c : chr->sorted_keys()) {
    const Weight mu = lam - from_root_coords(data, c);
    const std::string m = chr->mult_at(c).get_str();
    entries.push_back({{"coords", c}, {"weight", to_string(mu)}, {"grade", c[0]}, {"multiplicity", m}});
    rows.rows.push_back({to_string(c), to_string(mu), std::to_string(c[0]), m});
  }
  doc["entries"] = std::move(entries);
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

int cmd_tensor(const CartanPtr& data, const std::string& lhs, const std::string& rhs, int depth,
               const CliConfig& cfg, std::ostream& out) {
  const Weight lam = parse_weight(data, lhs);
  const Weight mu = parse_weight(data, rhs);
  auto cache = make_cache(cfg);
  const Decomposition dec = tensor_decompose(lam, mu, depth, cache.get());
  json doc = envelope("tensor", data);
  doc["lhs"] = to_string(lam);
  doc["rhs"] = to_string(mu);
  doc["depth"] = depth;
  json comps = json::array();
  Rows rows{{"nu", "coords", "grade", "multiplicity", "delta_maximal"}, {}};
  for (const auto& comp : dec.components()) {
    const bool maximal = dec.is_delta_maximal_component(comp.nu);
    comps.push_back({{"nu", to_string(comp.nu)},
                     {"coords", comp.coords},
                     {"grade", comp.grade},
                     {"multiplicity", comp.mult.get_str()},
                     {"delta_maximal", maximal}});
    rows.rows.push_back({to_string(comp.nu), to_string(comp.coords), std::to_string(comp.grade), comp.mult.get_str(),
                         maximal ? "yes" : "no"});
  }
  doc["components"] = std::move(comps);
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

int cmd_gko(const CartanPtr& data, const std::string& lhs, const std::string& rhs, const std::string& nu_text,
            const CliConfig& cfg, std::ostream& out) {
  const Weight lam = parse_weight(data, lhs);
  const Weight mu = parse_weight(data, rhs);
  const Weight nu = parse_weight(data, nu_text);
  const GkoReport report = gko_report(lam, mu, nu);
  json doc = envelope("gko", data);
  doc["lhs"] = to_string(lam);
  doc["rhs"] = to_string(mu);
  doc["nu"] = to_string(nu);
  doc["central_charge"] = to_string(report.central_charge);
  doc["l0"] = to_string(report.l0);
  doc["rule"] = std::string(to_string(report.rule));
  Rows rows{{"quantity", "value"},
            {{"central_charge", to_string(report.central_charge)},
             {"l0", to_string(report.l0)},
             {"rule", std::string(to_string(report.rule))}}};
  render(doc, rows, cfg.output, out);
  return kExitPass;
}

IntCoords parse_coords(const std::string& text) {
  IntCoords c;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad coordinate '" + token + "' in '" + text + "'");
    }
  }
  return c;
}

int cmd_verify(const AffineType& type, std::optional<int> depth, std::optional<int> saturation, bool delta_strings,
               bool no_timing, const std::string& corrupt, const CliConfig& cfg, std::ostream& out) {
  auto cache = make_cache(cfg);
  VerifyOptions options;
  options.threads = cfg.threads;
  options.cache = cache.get();
  if (!corrupt.empty()) options.corrupt_component = parse_coords(corrupt);
  const int d = depth.value_or(default_depth(type));

  Report report = saturation     ? verify_saturated(type, *saturation, d, options)
                  : delta_strings ? verify_delta_strings(type, d, options)
                                  : verify_conjecture(type, d, options);
  switch (cfg.output) {
    case OutputFormat::Json: out << report.to_json(!no_timing).dump(2) << "\n"; break;
    case OutputFormat::Table: out << report.to_table(); break;
    case OutputFormat::Csv: out << report.to_csv(); break;
  }
  return report.passed() ? kExitPass : kExitFail;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Internal:
    case ErrorCode::Cache:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight combinatorics for untwisted affine Kac-Moody algebras", "kmw"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kmw 0.1.0");

  CliConfig cfg;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"table", OutputFormat::Table}, {"csv", OutputFormat::Csv}};
  app.add_option("-o,--output", cfg.output, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--cache-dir", cfg.cache_dir, "Character cache directory (overrides KMW_CACHE_DIR)");
  app.add_flag("--no-cache", cfg.no_cache, "Keep characters in memory only");
  app.add_flag("--cache-readonly", cfg.cache_readonly, "Read cached characters but never write");
  app.add_flag("--verify-cache-hits", cfg.verify_cache_hits, "Recompute disk hits and compare");
  app.add_option("-j,--threads", cfg.threads, "Worker threads for verify")->check(CLI::PositiveNumber);

  std::string type_text, lam_text, lhs_text, rhs_text, nu_text, corrupt;
  int depth = 0;
  std::optional<int> verify_depth, saturation;
  bool delta_strings = false, no_timing = false;

  auto add_type = [&](CLI::App* sub) { sub->add_option("type", type_text, "Affine type, e.g. A1~")->required(); };

  auto* cartan = app.add_subcommand("cartan", "Print Cartan data");
  add_type(cartan);

  auto* vertices = app.add_subcommand("vertices", "Vertices of the dominant weight polyhedron");
  add_type(vertices);
  vertices->add_option("--lambda", lam_text, "Regular dominant weight m0,...,ml;c")->required();

  auto* maximal = app.add_subcommand("maximal", "Delta-maximal dominant weights of V(lambda)");
  add_type(maximal);
  maximal->add_option("--lambda", lam_text, "Dominant weight m0,...,ml;c")->required();

  auto* chr = app.add_subcommand("char", "Truncated character of V(lambda)");
  add_type(chr);
  chr->add_option("--lambda", lam_text, "Dominant weight m0,...,ml;c")->required();
  chr->add_option("--depth", depth, "Truncation depth")->required()->check(CLI::NonNegativeNumber);

  auto* tensor = app.add_subcommand("tensor", "Decompose V(lhs) (x) V(rhs)");
  add_type(tensor);
  tensor->add_option("--lhs", lhs_text, "Dominant weight")->required();
  tensor->add_option("--rhs", rhs_text, "Dominant weight")->required();
  tensor->add_option("--depth", depth, "Truncation depth")->required()->check(CLI::NonNegativeNumber);

  auto* gko = app.add_subcommand("gko", "Central charge and L0 scalar of the coset construction");
  add_type(gko);
  gko->add_option("--lhs", lhs_text, "Dominant weight")->required();
  gko->add_option("--rhs", rhs_text, "Dominant weight")->required();
  gko->add_option("--nu", nu_text, "Component weight")->required();

  auto* verify = app.add_subcommand("verify", "Check the rho (x) rho statements in a window");
  add_type(verify);
  verify->add_option("--depth", verify_depth, "Truncation depth (default 2 for rank <= 2, else 1)")
      ->check(CLI::NonNegativeNumber);
  auto* sat = verify->add_option("--saturation", saturation, "Check V(d lambda) in V(d rho) (x) V(d rho)")
                  ->check(CLI::PositiveNumber);
  verify->add_flag("--delta-strings", delta_strings, "Check delta-strings of delta-maximal components")
      ->excludes(sat);
  verify->add_flag("--no-timing", no_timing, "Omit timing fields from JSON");
  verify->add_option("--corrupt", corrupt, "Zero the component at these root coordinates (fault injection)")
      ->group("");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "kmw: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const AffineType type = AffineType::parse(type_text);
    const CartanPtr data = cartan_data(type);
    if (cartan->parsed()) return cmd_cartan(data, cfg, out);
    if (vertices->parsed()) return cmd_vertices(data, lam_text, cfg, out);
    if (maximal->parsed()) return cmd_maximal(data, lam_text, cfg, out);
    if (chr->parsed()) return cmd_char(data, lam_text, depth, cfg, out);
    if (tensor->parsed()) return cmd_tensor(data, lhs_text, rhs_text, depth, cfg, out);
    if (gko->parsed()) return cmd_gko(data, lhs_text, rhs_text, nu_text, cfg, out);
    return cmd_verify(type, verify_depth, saturation, delta_strings, no_timing, corrupt, cfg, out);
  } catch (const Error& e) {
    err << "kmw: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "kmw: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kmw::cli
