#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/continuity.hpp"
#include "softtop/embedding.hpp"
#include "softtop/mapping.hpp"
#include "softtop/topology.hpp"

namespace softtop::cli {

/// A parsed space document: the space and its named soft sets in document order.
struct SpaceDocument {
  SoftSpace space;
  std::vector<std::pair<std::string, SoftSet>> named;
  /// Set when a generating subbase lacked null and/or absolute.
  std::vector<std::string> notices;

  /// Named soft set, or null/absolute for the reserved names. Throws
  /// ErrorCode::kUnknownLabel.
  SoftSet set(std::string_view name) const;
};

// Parse failures throw softtop::Error: kParseError for malformed JSON or
// fields (the message names the field), kUnknownLabel for unresolved labels
// and kAxiomViolation, naming the two soft sets, for explicit open-set lists
// that are not a topology.

SpaceDocument parse_space(const std::filesystem::path& path);
SpaceDocument parse_space_text(std::string_view text);

/// JSON space document listing every open set by name.
std::string emit_space(const SoftSpace& space);

/// Reads phi and psi from a mapping document and resolves them against the
/// given contexts.
SoftMapping parse_mapping(const std::filesystem::path& path, const ContextPtr& src,
                          const ContextPtr& dst);
SoftMapping parse_mapping_text(std::string_view text, const ContextPtr& src, const ContextPtr& dst);

/// The "src" and "dst" references of a mapping document, resolved against
/// the document's directory; empty when absent.
std::pair<std::filesystem::path, std::filesystem::path> mapping_references(
    const std::filesystem::path& path);

/// {"space": PATH, "targets": [{"space": PATH, "mapping": PATH}, ...],
///  "scope": "universe_and_params" | "universe_only"}; paths are relative
/// to the config file.
struct LemmaDocument {
  SpaceDocument space;
  std::vector<MappedSpace> targets;
  ImageScope scope = ImageScope::kUniverseAndParams;
};

LemmaDocument parse_lemma_config(const std::filesystem::path& path);

}  // namespace softtop::cli
