#pragma once

#include <map>
#include <string>
#include <string_view>

#include "posetglue/script.hpp"

namespace posetglue {

using Labels = std::map<NodeId, std::string>;

struct PosetDocument {
  Poset poset;
  Labels labels;
};

/// Documents are JSON objects:
///   {"version": 1, "nodes": [...], "covers": [[lower, upper], ...], "labels": {...}}
/// "version" may be omitted (it defaults to 1); "labels" is optional; other
/// top-level keys are ignored so witness documents can be read as posets.
/// Throws ParseError (with line or field), CycleDetected, DuplicateNode, UnknownNode.
PosetDocument parse_poset_document(std::string_view text);
Poset parse_poset(std::string_view text);

/// Canonical text: nodes sorted, covers sorted, one cover per line.
std::string emit_poset(const Poset& p, const Labels& labels = {});

/// {"version": 1, "map": {"x": "y", ...}}; the map is checked against X and Y.
PosetMap parse_map(std::string_view text, const Poset& source, const Poset& target);
std::string emit_map(const PosetMap& f);

std::string emit_script(const ConstructionScript& s);
/// Rebuilds every recorded poset; throws ParseError on structural problems.
ConstructionScript parse_script(std::string_view text);

/// Poset documents extended with the witness of the operation that made them.
std::string emit_gluing(const GluingWitness& w);
std::string emit_split(const ChainDecomposition& cd, const SplitResult& s);
/// With produced_z the document is Z (elevate), otherwise X (retract).
std::string emit_elevation(const ElevationWitness& w, bool produced_z);

/// Graphviz text: edges point from lower to upper with rankdir=BT, nodes of
/// equal height share a rank, highlighted nodes are filled.
std::string emit_dot(const Poset& p, const NodeSet& highlight = {}, const Labels& labels = {});

}  // namespace posetglue
