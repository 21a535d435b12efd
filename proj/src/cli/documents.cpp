#include "softtop/cli/documents.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "softtop/error.hpp"

namespace softtop::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParseError, field + ": " + what);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Duplicate keys are rejected rather than silently overwritten.
json parse_json(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: keys.emplace_back(); break;
      case json::parse_event_t::object_end: keys.pop_back(); break;
      case json::parse_event_t::key: {
        const auto k = parsed.get<std::string>();
        if (!keys.back().insert(k).second) parse_error(k, "duplicate name");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

const json& field(const json& doc, const std::string& name) {
  if (!doc.is_object()) parse_error(name, "document is not an object");
  auto it = doc.find(name);
  if (it == doc.end()) parse_error(name, "missing");
  return *it;
}

std::vector<std::string> string_list(const json& value, const std::string& name) {
  if (!value.is_array()) parse_error(name, "expected a list of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) parse_error(name, "expected a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_field(const json& doc, const std::string& name) {
  const auto& v = field(doc, name);
  if (!v.is_string()) parse_error(name, "expected a string");
  return v.get<std::string>();
}

bool reserved(std::string_view name) { return name == "null" || name == "absolute"; }

SpaceDocument space_from_json(const json& doc) {
  const auto universe = string_list(field(doc, "universe"), "universe");
  const auto params = string_list(field(doc, "params"), "params");
  ContextPtr ctx;
  try {
    ctx = Context::make(universe, params);
  } catch (const Error& e) {
    parse_error("universe/params", e.detail());
  }

  std::vector<std::pair<std::string, SoftSet>> named;
  if (auto it = doc.find("soft_sets"); it != doc.end()) {
    if (!it->is_object()) parse_error("soft_sets", "expected an object");
    for (const auto& [name, rows] : it->items()) {
      if (reserved(name)) parse_error("soft_sets." + name, "reserved name");
      if (!rows.is_object()) parse_error("soft_sets." + name, "expected an object");
      std::map<std::string, std::vector<std::string>> labels;
      for (const auto& [param, elems] : rows.items()) {
        labels[param] = string_list(elems, "soft_sets." + name + "." + param);
      }
      named.emplace_back(name, SoftSet::from_labels(ctx, labels));
    }
  }

  auto lookup = [&](const std::string& name, const std::string& where) {
    if (name == "null") return SoftSet::null(ctx);
    if (name == "absolute") return SoftSet::absolute(ctx);
    for (const auto& [n, s] : named) {
      if (n == name) return s;
    }
    parse_error(where, "unknown soft set '" + name + "'");
  };

  const auto& topology = field(doc, "topology");
  if (topology.is_string()) {
    const auto mode = topology.get<std::string>();
    if (mode == "discrete") return {SoftSpace(SoftTopology::discrete(ctx)), std::move(named), {}};
    if (mode == "indiscrete") return {SoftSpace(SoftTopology::indiscrete(ctx)), std::move(named), {}};
    if (mode == "generate") {
      std::vector<SoftSet> subbase;
      for (const auto& n : string_list(field(doc, "subbase"), "subbase")) {
        subbase.push_back(lookup(n, "subbase"));
      }
      auto generated = generate_from_subbase(ctx, subbase);
      std::vector<std::string> notices;
      if (generated.adjoined_null) notices.push_back("null adjoined to the subbase");
      if (generated.adjoined_absolute) notices.push_back("absolute adjoined to the subbase");
      return {SoftSpace(std::move(generated.topology)), std::move(named), std::move(notices)};
    }
    parse_error("topology", "unknown mode '" + mode + "'");
  }

  const auto names = string_list(topology, "topology");
  std::vector<SoftSet> opens;
  for (const auto& n : names) opens.push_back(lookup(n, "topology"));
  const auto verdict = verify_axioms(ctx, opens);
  if (!verdict.ok()) {
    std::string msg = to_string(verdict.kind);
    if (verdict.witness) {
      const auto [i, j] = std::minmax(verdict.witness->first, verdict.witness->second);
      msg += " for (" + names[i] + ", " + names[j] + ")";
    }
    throw Error(ErrorCode::kAxiomViolation, msg);
  }
  return {SoftSpace(SoftTopology::from_opens(ctx, std::move(opens))), std::move(named), {}};
}

fs::path relative_to(const fs::path& doc, const std::string& ref) {
  fs::path p(ref);
  return p.is_absolute() ? p : doc.parent_path() / p;
}

}  // namespace

SoftSet SpaceDocument::set(std::string_view name) const {
  const auto& ctx = space.context();
  if (name == "null") return SoftSet::null(ctx);
  if (name == "absolute") return SoftSet::absolute(ctx);
  for (const auto& [n, s] : named) {
    if (n == name) return s;
  }
  throw Error(ErrorCode::kUnknownLabel, "no soft set named '" + std::string(name) + "'");
}

SpaceDocument parse_space_text(std::string_view text) { return space_from_json(parse_json(text)); }

SpaceDocument parse_space(const fs::path& path) {
  try {
    return parse_space_text(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::string emit_space(const SoftSpace& space) {
  const auto& ctx = space.context();
  nlohmann::ordered_json doc;
  doc["universe"] = ctx->universe();
  doc["params"] = ctx->params();
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  nlohmann::ordered_json topology = nlohmann::ordered_json::array();
  std::size_t k = 0;
  for (const auto& o : space.opens()) {
    if (o.is_null()) {
      topology.push_back("null");
      continue;
    }
    if (o.is_absolute()) {
      topology.push_back("absolute");
      continue;
    }
    const auto name = "O" + std::to_string(++k);
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (std::size_t e = 0; e < ctx->param_size(); ++e) {
      auto elems = nlohmann::ordered_json::array();
      for (auto x : o.row(e)) elems.push_back(ctx->element(x));
      rows[ctx->param(e)] = std::move(elems);
    }
    sets[name] = std::move(rows);
    topology.push_back(name);
  }
  doc["soft_sets"] = std::move(sets);
  doc["topology"] = std::move(topology);
  return doc.dump(2) + "\n";
}

namespace {

SoftMapping mapping_from_json(const json& doc, const ContextPtr& src, const ContextPtr& dst) {
  auto table = [&](const std::string& name, std::size_t size, auto source_index, auto target_index) {
    const auto& obj = field(doc, name);
    if (!obj.is_object()) parse_error(name, "expected an object");
    std::vector<std::size_t> out(size);
    std::vector<bool> seen(size, false);
    for (const auto& [from, to] : obj.items()) {
      if (!to.is_string()) parse_error(name + "." + from, "expected a string");
      const auto i = source_index(from);
      out[i] = target_index(to.template get<std::string>());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (!seen[i]) parse_error(name, "not total");
    }
    return out;
  };
  auto phi = table(
      "phi", src->universe_size(), [&](const std::string& l) { return src->element_index(l); },
      [&](const std::string& l) { return dst->element_index(l); });
  auto psi = table(
      "psi", src->param_size(), [&](const std::string& l) { return src->param_index(l); },
      [&](const std::string& l) { return dst->param_index(l); });
  return SoftMapping(src, dst, std::move(phi), std::move(psi));
}

}  // namespace

SoftMapping parse_mapping_text(std::string_view text, const ContextPtr& src,
                               const ContextPtr& dst) {
  return mapping_from_json(parse_json(text), src, dst);
}

SoftMapping parse_mapping(const fs::path& path, const ContextPtr& src, const ContextPtr& dst) {
  try {
    return parse_mapping_text(read_file(path), src, dst);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::pair<fs::path, fs::path> mapping_references(const fs::path& path) {
  const auto doc = parse_json(read_file(path));
  std::pair<fs::path, fs::path> out;
  if (doc.contains("src")) out.first = relative_to(path, string_field(doc, "src"));
  if (doc.contains("dst")) out.second = relative_to(path, string_field(doc, "dst"));
  return out;
}

LemmaDocument parse_lemma_config(const fs::path& path) {
  const auto doc = parse_json(read_file(path));
  LemmaDocument out{parse_space(relative_to(path, string_field(doc, "space"))), {}, {}};
  if (doc.contains("scope")) {
    const auto scope = string_field(doc, "scope");
    if (scope == "universe_only") {
      out.scope = ImageScope::kUniverseOnly;
    } else if (scope != "universe_and_params") {
      parse_error("scope", "unknown scope '" + scope + "'");
    }
  }
  const auto& targets = field(doc, "targets");
  if (!targets.is_array() || targets.empty()) parse_error("targets", "expected a nonempty list");
  for (const auto& t : targets) {
    auto y = parse_space(relative_to(path, string_field(t, "space")));
    auto m = parse_mapping(relative_to(path, string_field(t, "mapping")), out.space.space.context(),
                           y.space.context());
    out.targets.push_back(MappedSpace{std::move(y.space), std::move(m)});
  }
  return out;
}

}  // namespace softtop::cli
