#include "softtop/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "softtop/cli/documents.hpp"
#include "softtop/cli/fuzz.hpp"
#include "softtop/continuity.hpp"
#include "softtop/embedding.hpp"
#include "softtop/error.hpp"
#include "softtop/oracle.hpp"
#include "softtop/product_topology.hpp"

namespace softtop::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Spaces larger than this are reported without re-running the pairwise axiom check.
constexpr std::size_t kRecheckLimit = 2048;

struct Report {
  std::ostringstream text;
  ojson json;
  int code = kExitOk;

  void fail(const std::string& anchor, const std::string& detail) {
    code = kExitCheckFailed;
    text << "FAILED [" << anchor << "]: " << detail << "\n";
    json["failures"].push_back({{"anchor", anchor}, {"detail", detail}});
  }
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

int check_topology(const std::string& path, Report& r) {
  r.json["command"] = "check-topology";
  r.json["space"] = path;
  try {
    const auto doc = parse_space(path);
    const auto& ctx = doc.space.context();
    r.json["universe"] = ctx->universe_size();
    r.json["params"] = ctx->param_size();
    r.json["open_sets"] = doc.space.opens().size();
    r.text << "space " << path << ": |U|=" << ctx->universe_size() << " |E|=" << ctx->param_size()
           << " open sets=" << doc.space.opens().size() << "\n";
    if (!doc.notices.empty()) r.json["notices"] = doc.notices;
    for (const auto& n : doc.notices) r.text << "notice: " << n << "\n";
    if (doc.space.opens().size() <= kRecheckLimit) {
      const auto verdict = verify_axioms(ctx, doc.space.opens());
      r.json["axioms"] = to_string(verdict.kind);
      r.text << "axioms: " << to_string(verdict.kind) << "\n";
      if (!verdict.ok()) r.fail("Def: soft topology", to_string(verdict.kind));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kAxiomViolation) throw;
    r.json["axioms"] = "violated";
    r.fail("Def: soft topology", e.detail());
  }
  return r.code;
}

int closure_command(const std::string& path, const std::string& name, Report& r) {
  const auto doc = parse_space(path);
  const auto f = doc.set(name);
  const auto c = closure(doc.space, f);
  const auto adherent = oracle::closure_via_adherence(doc.space, f);
  r.json["command"] = "closure";
  r.json["set"] = name;
  r.json["value"] = f.to_string();
  r.json["closure"] = c.to_string();
  r.json["closed"] = doc.space.is_closed(f);
  r.text << "closure(" << name << ") = " << c.to_string() << "\n";
  r.text << name << " is " << (doc.space.is_closed(f) ? "" : "not ") << "closed\n";
  if (c != adherent) {
    r.fail("Prop: closure is the set of adherent points",
           "adherent points give " + adherent.to_string());
  }
  return r.code;
}

int continuity_command(const std::string& map_path, std::string src, std::string dst,
                       const std::string& method, Report& r) {
  if (src.empty() || dst.empty()) {
    const auto [s, d] = mapping_references(map_path);
    if (src.empty()) src = s.string();
    if (dst.empty()) dst = d.string();
  }
  if (src.empty() || dst.empty()) {
    throw Error(ErrorCode::kParseError, "source and target spaces are required");
  }
  const auto x = parse_space(src);
  const auto y = parse_space(dst);
  const auto m = parse_mapping(map_path, x.space.context(), y.space.context());

  std::vector<ContinuityMethod> methods;
  if (method == "pointwise" || method == "all") methods.push_back(ContinuityMethod::kPointwise);
  if (method == "open" || method == "all") methods.push_back(ContinuityMethod::kOpenPreimage);
  if (method == "closed" || method == "all") methods.push_back(ContinuityMethod::kClosedPreimage);

  r.json["command"] = "continuity";
  r.json["methods"] = ojson::array();
  std::vector<bool> verdicts;
  for (auto meth : methods) {
    const auto report = is_continuous(m, x.space, y.space, meth);
    verdicts.push_back(report.verdict);
    ojson j{{"method", to_string(meth)}, {"continuous", report.verdict}};
    r.text << to_string(meth) << ": " << (report.verdict ? "continuous" : "not continuous");
    if (report.witness) {
      std::string w;
      if (report.witness->point) w = "point " + report.witness->point->to_string() + ", ";
      w += "set " + report.witness->set.to_string();
      j["witness"] = w;
      r.text << " (witness: " << w << ")";
    }
    r.text << "\n";
    r.json["methods"].push_back(std::move(j));
  }
  if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) !=
      verdicts.end()) {
    r.fail("Prop: characterizations of soft continuity", "methods disagree");
  } else if (!verdicts.front()) {
    r.fail("Def: soft continuous mapping", "mapping is not continuous");
  }
  return r.code;
}

int product_command(const std::vector<std::string>& paths, const std::string& emit, Report& r) {
  std::vector<SoftSpace> factors;
  for (const auto& p : paths) factors.push_back(parse_space(p).space);
  const auto p = product_topology(factors);
  const auto& ctx = p.product->context();
  r.json["command"] = "product";
  r.json["arity"] = p.product->arity();
  r.json["universe"] = ctx->universe_size();
  r.json["params"] = ctx->param_size();
  r.json["open_sets"] = p.space.opens().size();
  r.text << "product of " << p.product->arity() << " spaces: |U|=" << ctx->universe_size()
         << " |E|=" << ctx->param_size() << " open sets=" << p.space.opens().size() << "\n";

  const bool initial = p.space.topology() == product_topology_via_projections(p.product, factors);
  const bool nslabs = p.space.topology() == product_topology_via_nslabs(p.product, factors);
  bool projections = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    projections =
        projections && is_continuous(projection_mapping(p.product, i), p.space, factors[i]).verdict;
  }
  r.json["initial_topology_agrees"] = initial;
  r.json["nslab_base_agrees"] = nslabs;
  r.json["projections_continuous"] = projections;
  r.text << "initial topology of projections agrees: " << yes_no(initial) << "\n"
         << "n-slab base generates it: " << yes_no(nslabs) << "\n"
         << "projections continuous: " << yes_no(projections) << "\n";
  if (!initial) r.fail("Def: soft product topology", "slab subbase and projections disagree");
  if (!nslabs) r.fail("Prop: n-slabs form a base", "n-slab unions differ");
  if (!projections) r.fail("Cor: projections are continuous", "a projection is not continuous");

  if (!emit.empty()) {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw Error(ErrorCode::kParseError, "cannot write " + emit);
    out << emit_space(p.space);
    r.json["emitted"] = emit;
    r.text << "written to " << emit << "\n";
  }
  return r.code;
}

int lemma_command(const std::string& path, Report& r) {
  const auto doc = parse_lemma_config(path);
  LemmaOptions options;
  options.scope = doc.scope;
  options.throw_on_violation = false;
  const auto report = verify_embedding_lemma(doc.space.space, doc.targets, options);
  const auto& c = report.diagonal;

  r.json["command"] = "embed-lemma";
  r.json["scope"] = to_string(doc.scope);
  r.json["hypotheses"] = {
      {"continuous", report.continuous},
      {"separates_points", report.separation.separates_points},
      {"separates_points_from_closed", report.separation.separates_points_from_closed},
      {"hold", report.hypotheses}};
  r.json["certificate"] = {{"continuous", c.continuous},
                           {"injective", c.injective},
                           {"closed_into_image", c.closed_into_image},
                           {"route", to_string(c.route)},
                           {"overall", c.overall}};
  if (c.homeomorphism) r.json["certificate"]["homeomorphism"] = *c.homeomorphism;
  r.json["product_route"] = to_string(report.product_route);
  r.json["diagonal_inclusion"] = report.diagonal_inclusion;

  r.text << "hypotheses: continuous=[";
  for (std::size_t i = 0; i < report.continuous.size(); ++i) {
    r.text << (i ? "," : "") << yes_no(report.continuous[i]);
  }
  r.text << "] separates_points=" << yes_no(report.separation.separates_points)
         << " separates_points_from_closed="
         << yes_no(report.separation.separates_points_from_closed) << "\n";
  if (report.separation.points_witness) {
    const auto& [p, q] = *report.separation.points_witness;
    r.text << "  points not separated: " << p.to_string() << ", " << q.to_string() << "\n";
    r.json["hypotheses"]["points_witness"] = {p.to_string(), q.to_string()};
  }
  if (report.separation.closed_witness) {
    const auto& [cset, p] = *report.separation.closed_witness;
    r.text << "  point not separated from closed set: " << p.to_string() << ", "
           << cset.to_string() << "\n";
    r.json["hypotheses"]["closed_witness"] = {cset.to_string(), p.to_string()};
  }
  r.text << "diagonal certificate: continuous=" << yes_no(c.continuous)
         << " injective=" << yes_no(c.injective)
         << " closed_into_image=" << yes_no(c.closed_into_image) << " route=" << to_string(c.route)
         << " overall=" << yes_no(c.overall) << "\n";
  r.text << "product route: " << to_string(report.product_route) << "\n";
  r.text << "diagonal image within product of images: " << yes_no(report.diagonal_inclusion)
         << "\n";

  if (report.violation()) r.fail("Prop: soft embedding lemma", report.summary());
  if (!report.diagonal_inclusion) {
    r.fail("Prop: image of a soft diagonal mapping",
           "witness " + report.inclusion_witness->to_string());
  }
  if (c.homeomorphism && *c.homeomorphism != c.overall) {
    r.fail("Prop: characterization of soft embeddings",
           "definitional and characterization routes disagree");
  }
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite soft topology checker", "softtop"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report");

  std::string space;
  auto* check = app.add_subcommand("check-topology", "Verify the topology of a space document");
  check->add_option("space", space, "Space document")->required();
  check->add_flag("--json", json, "Machine-readable report");

  std::string set_name;
  auto* clos = app.add_subcommand("closure", "Closure of a named soft set");
  clos->add_option("space", space, "Space document")->required();
  clos->add_option("--set", set_name, "Soft set name")->required();
  clos->add_flag("--json", json, "Machine-readable report");

  std::string map_path;
  std::string src;
  std::string dst;
  std::string method = "all";
  auto* cont = app.add_subcommand("continuity", "Continuity of a soft mapping");
  cont->add_option("mapping", map_path, "Mapping document")->required();
  cont->add_option("--src", src, "Source space document");
  cont->add_option("--dst", dst, "Target space document");
  cont->add_option("--method", method, "pointwise, open, closed or all")
      ->check(CLI::IsMember({"pointwise", "open", "closed", "all"}));
  cont->add_flag("--json", json, "Machine-readable report");

  std::vector<std::string> factors;
  std::string emit;
  auto* prod = app.add_subcommand("product", "Soft product topology of spaces");
  prod->add_option("spaces", factors, "Space documents")->required();
  prod->add_option("--emit", emit, "Write the product space document");
  prod->add_flag("--json", json, "Machine-readable report");

  std::string config;
  auto* lemma = app.add_subcommand("embed-lemma", "Check the embedding lemma on a configuration");
  lemma->add_option("config", config, "Lemma configuration document")->required();
  lemma->add_flag("--json", json, "Machine-readable report");

  FuzzOptions fo;
  auto* fz = app.add_subcommand("fuzz", "Seeded randomized property checks");
  fz->add_option("--seed", fo.seed, "Seed");
  fz->add_option("--iters", fo.iterations, "Instances")->check(CLI::NonNegativeNumber);
  fz->add_option("--max-universe", fo.max_universe, "Largest universe")
      ->check(CLI::Range(1, 8));
  fz->add_option("--max-params", fo.max_params, "Largest parameter set")->check(CLI::Range(1, 4));
  fz->add_flag("--json", json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report r;
  try {
    if (*check) {
      check_topology(space, r);
    } else if (*clos) {
      closure_command(space, set_name, r);
    } else if (*cont) {
      continuity_command(map_path, src, dst, method, r);
    } else if (*prod) {
      product_command(factors, emit, r);
    } else if (*lemma) {
      lemma_command(config, r);
    } else if (*fz) {
      const auto report = fuzz(fo);
      out << (json ? report.json() : report.text());
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  r.json["status"] = r.code == kExitOk ? "pass" : "fail";
  if (json) {
    out << r.json.dump(2) << "\n";
  } else {
    out << r.text.str() << "status: " << (r.code == kExitOk ? "pass" : "fail") << "\n";
  }
  return r.code;
}

}  // namespace softtop::cli
