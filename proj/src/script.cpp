#include "posetglue/script.hpp"

#include <algorithm>

namespace posetglue {

Poset apply_step(const Poset& before, const StepAction& action) {
  if (const auto* el = std::get_if<ElevateStep>(&action)) {
    return elevate(before, el->target, el->count, el->fresh_ids).z_poset;
  }
  return glue_along_collection(before, std::get<GlueStep>(action).partition).target();
}

ConstructionScript decompose_to_point(const Poset& x, const WrapOptions& options) {
  if (x.empty()) throw Error(ErrorKind::EmptyPoset, "cannot decompose the empty poset");
  WrapOptions opts = options;
  if (max_nodes(x).size() > 1) opts.single_max = true;
  const WrapResult wrapped = wrap(x, opts);
  const Poset& k = wrapped.k;

  std::vector<GExtension> exts;
  Poset f = k;
  while (dim(f) > 0) {
    auto red = reduce_dimension(f);
    for (auto& g : red.steps) exts.push_back(std::move(g));
    f = red.posets.back();
  }
  if (f.size() != 1) throw Error(ErrorKind::InvariantViolation, "reduction did not end at a single node");

  // to_k[i]: F_i -> K, the composite of the retract-free halves e and h.
  std::vector<PosetMap> to_k{identity(k)};
  for (const auto& g : exts) to_k.push_back(compose(to_k.back(), compose(g.h, g.e)));

  const NodeSet k_ids(k.nodes().begin(), k.nodes().end());
  ConstructionScript script;
  script.source = x;
  script.start = Poset::build(std::vector<NodeId>{k.id(to_k.back().at(0))}, {});

  Poset p = script.start;
  std::map<NodeId, NodeId> beta{{f.id(0), p.id(0)}};  // F_{i+1} -> P
  for (std::size_t i = exts.size(); i-- > 0;) {
    const GExtension& g = exts[i];
    const Poset& z = g.z_poset;
    const NodeId target = beta.at(g.r(g.z));

    NodeSet taken(p.nodes().begin(), p.nodes().end());
    std::map<NodeId, NodeId> gamma;  // Z -> P after elevation
    std::vector<NodeId> fresh;
    for (const auto& w : down_set(z, g.z)) {
      if (w == g.z) continue;
      const NodeId base = to_k[i](g.h(w));
      NodeSet avoid = taken;
      for (const auto& id : k_ids)
        if (id != base) avoid.insert(id);
      NodeId name = fresh_id(base, avoid);
      taken.insert(name);
      gamma.emplace(w, name);
      fresh.push_back(std::move(name));
    }
    for (const auto& v : z.nodes())
      if (!gamma.count(v)) gamma.emplace(v, beta.at(g.r(v)));

    ElevateStep el{target, fresh.size(), fresh};
    Poset elevated = apply_step(p, el);
    script.steps.push_back({el, elevated});

    Collection partition;
    for (const auto& fiber : fiber_collection(g.h)) {
      NodeSet member;
      for (const auto& v : fiber) member.insert(gamma.at(v));
      partition.push_back(std::move(member));
    }
    PosetMap glue_map = identity(elevated);
    p = elevated;
    if (!partition.empty()) {
      auto gw = glue_along_collection(elevated, partition);
      glue_map = gw.map;
      p = gw.target();
      script.steps.push_back({GlueStep{merge_overlapping(partition)}, p});
    }

    std::map<NodeId, NodeId> next_beta;
    for (const auto& v : z.nodes()) next_beta.emplace(g.h(v), glue_map(gamma.at(v)));
    beta = std::move(next_beta);
  }

  PosetMap k_to_p(k, p, beta);
  if (auto v = classify(k_to_p).isomorphism; !v) {
    throw Error(ErrorKind::InvariantViolation, "replayed poset is not isomorphic to K: " + v.reason);
  }
  script.final_poset = p;
  script.tracked = compose(k_to_p, wrapped.inclusion);
  return script;
}

namespace {

std::string step_name(std::size_t k) { return "step " + std::to_string(k + 1); }

void check_elevation_certificate(std::size_t k, const Poset& before, const Poset& after, const ElevateStep& el) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::StepMismatch, step_name(k) + ": " + why); };
  if (auto v = classify(inclusion(before, after)).saturated_embedding; !v) {
    fail("inclusion is not a saturated embedding: " + v.reason);
  }
  NodeSet expected = min_nodes(before);
  expected.erase(el.target);
  NodeSet fresh;
  for (const auto& id : after.nodes())
    if (!before.contains(id)) fresh.insert(id);
  expected.insert(fresh.begin(), fresh.end());
  if (fresh.size() != el.count) fail("elevation did not add " + std::to_string(el.count) + " nodes");
  if (expected != min_nodes(after)) fail("minimal nodes are not min(before) - target + new nodes");
  const auto ti = after.index_of(el.target);
  for (const auto& q : fresh)
    if (after.upper_covers(after.index_of(q)) != std::vector<std::size_t>{ti}) fail("'" + q + "' has another cover");
  if (dim(after) != std::max(dim(before), coheight(before, el.target) + 1)) fail("dimension changed unexpectedly");
}

void check_gluing_certificate(std::size_t k, const Poset& before, const GlueStep& gl) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::StepMismatch, step_name(k) + ": " + why); };
  auto w = glue_along_collection(before, gl.partition);
  if (!is_height_zero_gluing(w)) fail("gluing touches non-minimal nodes");
  if (auto v = verify_gluing(w); !v) fail("not a gluing: " + v.reason);
  try {
    check_dim_min_preservation(w);
  } catch (const Error& err) {
    fail(err.what());
  }
}

}  // namespace

ReplayReport replay(const ConstructionScript& script) {
  ReplayReport report;
  if (script.start.size() != 1) throw Error(ErrorKind::StepMismatch, "start is not a single node");
  Poset current = script.start;
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    const auto& step = script.steps[k];
    Poset next;
    try {
      next = apply_step(current, step.action);
    } catch (const Error& err) {
      throw Error(ErrorKind::StepMismatch, step_name(k) + ": " + err.what());
    }
    if (!(next == step.after)) throw Error(ErrorKind::StepMismatch, step_name(k) + ": result differs from the script");

    if (const auto* el = std::get_if<ElevateStep>(&step.action)) {
      check_elevation_certificate(k, current, next, *el);
      ++report.elevations;
      report.log.push_back(step_name(k) + ": elevate " + el->target + " by " + std::to_string(el->count) + " -> " +
                           std::to_string(next.size()) + " nodes, dim " + std::to_string(dim(next)));
    } else {
      check_gluing_certificate(k, current, std::get<GlueStep>(step.action));
      ++report.gluings;
      report.log.push_back(step_name(k) + ": glue " +
                           std::to_string(std::get<GlueStep>(step.action).partition.size()) + " classes -> " +
                           std::to_string(next.size()) + " nodes, dim " + std::to_string(dim(next)));
    }
    current = std::move(next);
  }
  if (!(current == script.final_poset)) throw Error(ErrorKind::StepMismatch, "final poset differs from the script");

  const PosetMap& t = script.tracked;
  if (!(t.source() == script.source) || !(t.target() == current)) {
    throw Error(ErrorKind::BrokenEmbedding, "tracked map does not go from the source to the final poset");
  }
  if (auto v = classify(t).saturated_embedding; !v) {
    throw Error(ErrorKind::BrokenEmbedding, "tracked map is not a saturated embedding: " + v.reason);
  }
  if (auto v = is_saturated_subset(current, image(t)); !v) {
    throw Error(ErrorKind::BrokenEmbedding, "image of the tracked map is not saturated: " + v.reason);
  }
  report.final_poset = std::move(current);
  return report;
}

}  // namespace posetglue
