#pragma once

#include <string>
#include <variant>
#include <vector>

#include "posetglue/elevation.hpp"

namespace posetglue {

struct ElevateStep {
  NodeId target;
  std::size_t count = 0;
  std::vector<NodeId> fresh_ids;
  bool operator==(const ElevateStep&) const = default;
};

struct GlueStep {
  Collection partition;
  bool operator==(const GlueStep&) const = default;
};

using StepAction = std::variant<ElevateStep, GlueStep>;

struct ConstructionStep {
  StepAction action;
  Poset after;
};

/// A forward construction from a one-node poset: each step elevates a minimal
/// node or glues a collection of minimal nodes. `tracked` embeds the source
/// poset X into the final poset K.
struct ConstructionScript {
  Poset source;
  Poset start;
  std::vector<ConstructionStep> steps;
  Poset final_poset;
  PosetMap tracked;
};

/// Executes one step. Throws whatever elevate/glue_along_collection throw.
Poset apply_step(const Poset& before, const StepAction& action);

/// Wraps X into K (adding a top whenever X has several maximal nodes), runs
/// reduce_dimension down to a point and reverses the chain into a script.
/// Fresh nodes are named after the node of K they end up as, so the final
/// poset is exactly K. Throws EmptyPoset.
ConstructionScript decompose_to_point(const Poset& x, const WrapOptions& options = {});

struct ReplayReport {
  Poset final_poset;
  std::size_t elevations = 0;
  std::size_t gluings = 0;
  std::vector<std::string> log;  // one line per step
};

/// Re-executes every step from `start`, compares each result with the
/// recorded poset and re-checks the per-step certificates: elevations are
/// saturated inclusions whose new minimal nodes replace the target, gluings
/// are height-zero and preserve dimension and minima. Finally the tracked map
/// must be a saturated embedding with saturated image.
/// Throws StepMismatch, BrokenEmbedding.
ReplayReport replay(const ConstructionScript& script);

}  // namespace posetglue
