#include "sepsym_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepsym/collections.hpp"
#include "sepsym/combi.hpp"
#include "sepsym/cubillage.hpp"
#include "sepsym/errors.hpp"
#include "sepsym/io.hpp"
#include "sepsym/svg.hpp"

namespace sepsym::cli {

namespace {

// Everything a command needs; one instance per invocation.
struct RunConfig {
  std::string command;
  int n = 0;
  std::string relation = "weak";
  int k = 0;
  std::string domain = "full";
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::optional<int> scale_limit;
  std::string in;
  std::string out;
  std::string svg;
  std::string format = "json";
  bool symmetrize = false;
  bool expand_odd = false;
  bool symmetric = false;
  bool ndiam = false;
  std::string validate;
};

// Raised for a failed post-condition on something we are about to write.
class OutputCheckError : public Error {
 public:
  using Error::Error;
};

Relation relation_of(const RunConfig& cfg) {
  if (cfg.relation == "k") {
    if (cfg.k < 1) throw BadInputError("--relation k needs --k >= 1");
    return Relation::k_separated(cfg.k);
  }
  return Relation::parse(cfg.relation);
}

int scale_limit_of(const RunConfig& cfg) {
  if (cfg.scale_limit) return *cfg.scale_limit;
  if (const char* env = std::getenv("SEPSYM_SCALE_LIMIT"); env != nullptr && *env != '\0') {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw BadInputError(std::string("SEPSYM_SCALE_LIMIT is not an integer: ") + env);
    }
  }
  return 0;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw BadInputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadInputError("cannot write " + path);
  f << text;
}

void ensure_collection(const SymCollection& c) {
  if (auto bad = c.check()) throw OutputCheckError("collection fails its own check: " + *bad);
}

void ensure_combi(const FtqCombi& k) {
  if (auto d = validate_ftq_combi(k)) throw OutputCheckError("combi fails validation: " + d->kind + ": " + d->detail);
}

void ensure_cubillage(const Cubillage& q) {
  if (auto d = validate_cubillage(q)) {
    throw OutputCheckError("cubillage fails validation: " + d->kind + ": " + d->detail);
  }
}

std::string svg_of(const FtqCombi& k) {
  ensure_combi(k);
  return export_svg(k);
}

int cmd_purity(const RunConfig& cfg, std::ostream& out) {
  const Relation r = relation_of(cfg);
  const Domain d = Domain::parse(cfg.domain);
  const PurityReport rep = purity_report(cfg.n, r, d, {cfg.threads, scale_limit_of(cfg)});
  // No closed form is known for k >= 3, so the report carries no target.
  const bool ok = (r.kind == RelationKind::k_separated && !rep.target) || rep.matches_target();
  write_text(cfg.out, dump(to_json(rep)), out);
  if (!cfg.out.empty()) out << "sizes " << to_json(rep).at("sizes").dump() << (ok ? " ok\n" : " FAIL\n");
  return ok ? kOk : kViolation;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Relation r = relation_of(cfg);
  const Domain d = Domain::parse(cfg.domain);
  json list = json::array();
  const PurityReport rep = enumerate_maximal_symmetric(cfg.n, r, d, {cfg.threads, scale_limit_of(cfg)},
                                                       [&](const SymCollection& c) {
                                                         ensure_collection(c);
                                                         json members = json::array();
                                                         for (const auto& a : c.members()) members.push_back(to_json(a));
                                                         list.push_back(std::move(members));
                                                       });
  json doc = {{"report", to_json(rep)}, {"collections", std::move(list)}};
  write_text(cfg.out, dump(doc), out);
  if (!cfg.out.empty()) out << rep.count << " maximal collections\n";
  return kOk;
}

int cmd_complete(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Relation r = relation_of(cfg);
  if (cfg.in.empty() && cfg.n <= 0) throw BadInputError("complete needs --n or --in");
  const SymCollection seed =
      cfg.in.empty() ? SymCollection(cfg.n, r)
                     : collection_from_json(read_json_file(cfg.in),
                                            cfg.n > 0 ? std::optional<int>(cfg.n) : std::nullopt, r);
  CompletionOptions opts;
  opts.domain = Domain::parse(cfg.domain);
  opts.seed = cfg.seed;
  const SymCollection c = greedy_symmetric_completion(seed, opts);
  ensure_collection(c);
  write_text(cfg.out, dump(to_json(c)), out);
  (cfg.out.empty() ? err : out) << "size " << c.size() << "\n";
  return kOk;
}

int cmd_tile(const RunConfig& cfg, std::ostream& out) {
  if (cfg.in.empty()) throw BadInputError("tile needs --in with a collection file");
  const json j = read_json_file(cfg.in);
  const SymCollection w =
      collection_from_json(j, cfg.n > 0 ? std::optional<int>(cfg.n) : std::nullopt, Relation::weak());
  FtqCombi k = reconstruct_ftq_combi(w.members(), make_zonogon_config(w.n(), cfg.symmetrize || cfg.expand_odd));
  ensure_combi(k);
  if (cfg.symmetrize || cfg.expand_odd) {
    if (!is_symmetric_combi(k)) k = reflect_symmetrize(k);
    k.symmetric = is_symmetric_combi(k);
    ensure_combi(k);
  }
  json doc = to_json(k);
  doc["vertices"] = k.vertex_set().size();
  FtqCombi shown = k;
  if (cfg.expand_odd) {
    const OddExpansion e = expand_combi_odd(k);
    ensure_combi(e.combi);
    ensure_collection(e.collection);
    doc = to_json(e.combi);
    doc["vertices"] = e.combi.vertex_set().size();
    doc["collection"] = to_json(e.collection);
    json added = json::array();
    for (const auto& a : e.added) added.push_back(to_json(a));
    doc["added"] = std::move(added);
    shown = e.combi;
  }
  if (cfg.format == "svg") {
    write_text(cfg.out, svg_of(shown), out);
  } else {
    write_text(cfg.out, dump(doc), out);
  }
  if (!cfg.svg.empty()) write_text(cfg.svg, svg_of(shown), out);
  return kOk;
}

int cmd_validate_cubillage(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Cubillage q;
  try {
    const json j = read_json_file(cfg.validate);
    q = cubillage_from_json(j.contains("cubillage") ? j.at("cubillage") : j);
  } catch (const Error& e) {
    err << "invalid cubillage file: " << e.what() << "\n";
    return kViolation;
  }
  json rep = {{"n", q.config.n}, {"cubes", q.cubes.size()}};
  if (auto d = validate_cubillage(q)) {
    rep["valid"] = false;
    rep["diagnostic"] = to_json(*d);
    err << d->kind << ": " << d->detail << "\n";
    out << dump(rep);
    return kViolation;
  }
  rep["valid"] = true;
  rep["spectrum"] = spectrum(q).size();
  rep["symmetric"] = is_symmetric_cubillage(q);
  out << dump(rep);
  return kOk;
}

int cmd_cubillage(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.validate.empty()) return cmd_validate_cubillage(cfg, out, err);
  if (cfg.n <= 0) throw BadInputError("cubillage needs --n");
  Cubillage q;
  if (cfg.symmetric || cfg.ndiam) {
    q = build_symmetric_cubillage(cfg.n, scale_limit_of(cfg));
  } else {
    const auto v = greedy_completion(cfg.n, Relation::chord(), {}, cfg.seed);
    q = reconstruct_from_spectrum(v, make_zonotope_config(cfg.n, false));
  }
  ensure_cubillage(q);
  const auto spectrum_sets = spectrum(q);
  json doc = {{"cubillage", to_json(q)},
              {"cubes", q.cubes.size()},
              {"spectrum", spectrum_sets.size()},
              {"symmetric", is_symmetric_cubillage(q)},
              {"levels", json::object()}};
  for (const auto& [h, count] : level_profile(spectrum_sets)) doc["levels"][std::to_string(h)] = count;

  std::optional<FtqCombi> shown;
  if (cfg.ndiam) {
    const Membrane m = build_Ndiam(q);
    if (auto d = check_membrane(m, q.config)) throw OutputCheckError("membrane check: " + d->kind + ": " + d->detail);
    FtqCombi k = membrane_to_combi(m, q.config);
    ensure_combi(k);
    doc["ndiam"] = to_json(m);
    doc["ndiam_vertices"] = k.vertex_set().size();
    doc["ndiam_symmetric"] = k.symmetric;
    shown = std::move(k);
  }
  if (cfg.format == "svg") {
    if (!shown) throw BadInputError("--format svg needs --ndiam");
    write_text(cfg.out, svg_of(*shown), out);
  } else {
    write_text(cfg.out, dump(doc), out);
  }
  if (!cfg.svg.empty()) {
    if (!shown) throw BadInputError("--svg needs --ndiam");
    write_text(cfg.svg, svg_of(*shown), out);
  }
  if (!cfg.out.empty()) out << q.cubes.size() << " cubes, spectrum " << spectrum_sets.size() << "\n";
  return kOk;
}

// Front side of the zonotope as a membrane; its projection is a combi on
// the interval sets.
FtqCombi front_side_combi(const Cubillage& q) {
  Membrane m;
  m.kind = MembraneKind::weak;
  for (const auto& f : boundary_sides(q.config.n).first) {
    m.items.push_back(HalfFacet{f, false});
    m.items.push_back(HalfFacet{f, true});
  }
  return membrane_to_combi(m, q.config);
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  if (cfg.in.empty()) throw BadInputError("export needs --in");
  const json j = read_json_file(cfg.in);
  const json& body = j.contains("cubillage") ? j.at("cubillage") : j;
  if (body.contains("cubes")) {
    const Cubillage q = cubillage_from_json(body);
    ensure_cubillage(q);
    if (cfg.format == "json") {
      write_text(cfg.out, dump(to_json(q)), out);
      return kOk;
    }
    const bool diamond = q.config.n % 2 == 0 && q.config.n >= 2 && is_symmetric_cubillage(q);
    FtqCombi k = diamond ? membrane_to_combi(build_Ndiam(q), q.config) : front_side_combi(q);
    write_text(cfg.out, svg_of(k), out);
    return kOk;
  }
  if (body.contains("tiles")) {
    const FtqCombi k = combi_from_json(body);
    ensure_combi(k);
    write_text(cfg.out, cfg.format == "json" ? dump(to_json(k)) : svg_of(k), out);
    return kOk;
  }
  const SymCollection c = collection_from_json(body, cfg.n > 0 ? std::optional<int>(cfg.n) : std::nullopt);
  if (cfg.format == "json") {
    ensure_collection(c);
    write_text(cfg.out, dump(to_json(c)), out);
    return kOk;
  }
  const FtqCombi k = reconstruct_ftq_combi(c.members(), make_zonogon_config(c.n(), false));
  write_text(cfg.out, svg_of(k), out);
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_relation) {
  sub->add_option("--n", cfg.n, "number of colors");
  if (with_relation) {
    sub->add_option("--relation", cfg.relation, "strong | weak | chord | k")->capture_default_str();
    sub->add_option("--k", cfg.k, "k for --relation k");
    sub->add_option("--domain", cfg.domain, "full | middle | lambda:k | levels:a,b,...")->capture_default_str();
  }
  sub->add_option("--seed", cfg.seed, "seed for randomized candidate orders");
  sub->add_option("--threads", cfg.threads, "worker threads for enumeration")->capture_default_str();
  sub->add_option("--scale-limit", cfg.scale_limit, "largest n for exhaustive work (env SEPSYM_SCALE_LIMIT)");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "json | svg")
      ->check(CLI::IsMember({"json", "svg"}))
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Symmetric separated set-systems, combies and cubillages"};
  app.require_subcommand(1);

  auto* purity = app.add_subcommand("purity", "enumerate maximal symmetric collections and report their sizes");
  add_common(purity, cfg, true);
  auto* enumerate = app.add_subcommand("enumerate", "list every maximal symmetric collection");
  add_common(enumerate, cfg, true);
  auto* complete = app.add_subcommand("complete", "greedily extend a symmetric seed collection to a maximal one");
  add_common(complete, cfg, true);
  complete->add_option("--in", cfg.in, "seed collection file (default empty)");
  auto* tile = app.add_subcommand("tile", "reconstruct the ftq-combi of a maximal weak collection");
  add_common(tile, cfg, false);
  tile->add_option("--in", cfg.in, "collection file")->required();
  tile->add_flag("--symmetrize", cfg.symmetrize, "mirror the lower half across the middle line");
  tile->add_flag("--expand-odd", cfg.expand_odd, "insert the middle color into the symmetrized combi");
  tile->add_option("--svg", cfg.svg, "also write an SVG drawing here");
  auto* cub = app.add_subcommand("cubillage", "build or validate a cubillage");
  add_common(cub, cfg, false);
  cub->add_flag("--symmetric", cfg.symmetric, "use the symmetric builder");
  cub->add_flag("--ndiam", cfg.ndiam, "extract the diamond membrane (even n)");
  cub->add_option("--validate", cfg.validate, "validate a cubillage JSON file instead of building");
  cub->add_option("--svg", cfg.svg, "write the membrane combi as SVG here");
  auto* exp = app.add_subcommand("export", "convert a collection, tiling or cubillage file");
  add_common(exp, cfg, false);
  exp->add_option("--in", cfg.in, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kViolation;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.threads < 1) cfg.threads = 1;

  try {
    if (cfg.command == "purity") return cmd_purity(cfg, out);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.command == "complete") return cmd_complete(cfg, out, err);
    if (cfg.command == "tile") return cmd_tile(cfg, out);
    if (cfg.command == "cubillage") return cmd_cubillage(cfg, out, err);
    if (cfg.command == "export") return cmd_export(cfg, out);
  } catch (const ScaleLimitError& e) {
    err << "scale limit: " << e.what() << "\n";
    return kScaleLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const json::exception& e) {
    err << "bad input: " << e.what() << "\n";
    return kViolation;
  } catch (const std::logic_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kViolation;
  }
  return kViolation;
}

}  // namespace sepsym::cli
