#include "posetglue/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace posetglue {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    const auto upto = std::min<std::size_t>(err.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": malformed document");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path + key, "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

std::vector<NodeId> as_string_list(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected a list of strings");
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

void check_version(const json& obj, const std::string& path) {
  auto it = obj.find("version");
  if (it == obj.end()) return;
  if (!it->is_number_integer() || it->get<long long>() != 1) field_error(path + "version", "unsupported version");
}

PosetDocument poset_from_json(const json& obj, const std::string& path) {
  if (!obj.is_object()) field_error(path.empty() ? "document" : path.substr(0, path.size() - 1), "expected an object");
  check_version(obj, path);
  const auto nodes = as_string_list(require(obj, "nodes", path), path + "nodes");
  const json& covers = require(obj, "covers", path);
  if (!covers.is_array()) field_error(path + "covers", "expected a list of [lower, upper] pairs");
  Relation rel;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string field = path + "covers[" + std::to_string(i) + "]";
    const auto pair = as_string_list(covers[i], field);
    if (pair.size() != 2) field_error(field, "expected a [lower, upper] pair");
    rel.emplace_back(pair[0], pair[1]);
  }
  PosetDocument doc{Poset::build(nodes, rel), {}};
  if (auto it = obj.find("labels"); it != obj.end()) {
    if (!it->is_object()) field_error(path + "labels", "expected an object");
    for (const auto& [id, label] : it->items()) {
      if (!doc.poset.contains(id)) field_error(path + "labels." + id, "unknown node");
      doc.labels.emplace(id, as_string(label, path + "labels." + id));
    }
  }
  return doc;
}

std::map<NodeId, NodeId> assignment_from_json(const json& v, const std::string& field) {
  if (!v.is_object()) field_error(field, "expected an object mapping ids to ids");
  std::map<NodeId, NodeId> out;
  for (const auto& [k, val] : v.items()) out.emplace(k, as_string(val, field + "." + k));
  return out;
}

ojson poset_body(const Poset& p, const Labels& labels = {}) {
  ojson body = ojson::object();
  body["nodes"] = p.nodes();
  ojson covers = ojson::array();
  for (const auto& [lo, hi] : p.cover_pairs()) covers.push_back(ojson::array({lo, hi}));
  body["covers"] = std::move(covers);
  if (!labels.empty()) {
    ojson l = ojson::object();
    for (const auto& [id, text] : labels) l[id] = text;
    body["labels"] = std::move(l);
  }
  return body;
}

ojson versioned(ojson body) {
  ojson out = ojson::object();
  out["version"] = 1;
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

ojson map_body(const PosetMap& f) {
  ojson m = ojson::object();
  for (const auto& [k, v] : f.assignment()) m[k] = v;
  return m;
}

ojson collection_body(const Collection& c) {
  ojson out = ojson::array();
  for (const auto& member : c) out.push_back(std::vector<NodeId>(member.begin(), member.end()));
  return out;
}

bool is_flat(const ojson& v) {
  return std::all_of(v.begin(), v.end(), [](const ojson& e) { return e.is_primitive(); });
}

// Arrays of scalars stay on one line; everything else gets one entry per line.
void dump(const ojson& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, e] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ojson(k).dump() + ": ";
      dump(e, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
    } else if (is_flat(v)) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump(v[i], indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    }
  } else {
    out += v.dump();
  }
}

std::string render(const ojson& v) {
  std::string out;
  dump(v, 0, out);
  out += "\n";
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PosetDocument parse_poset_document(std::string_view text) { return poset_from_json(parse_json(text), ""); }

Poset parse_poset(std::string_view text) { return parse_poset_document(text).poset; }

std::string emit_poset(const Poset& p, const Labels& labels) { return render(versioned(poset_body(p, labels))); }

PosetMap parse_map(std::string_view text, const Poset& source, const Poset& target) {
  const json doc = parse_json(text);
  if (!doc.is_object()) field_error("document", "expected an object");
  check_version(doc, "");
  return PosetMap(source, target, assignment_from_json(require(doc, "map", ""), "map"));
}

std::string emit_map(const PosetMap& f) {
  ojson doc = ojson::object();
  doc["version"] = 1;
  doc["map"] = map_body(f);
  return render(doc);
}

std::string emit_script(const ConstructionScript& s) {
  ojson doc = ojson::object();
  doc["version"] = 1;
  doc["source"] = poset_body(s.source);
  doc["start"] = poset_body(s.start);
  ojson steps = ojson::array();
  for (const auto& step : s.steps) {
    ojson entry = ojson::object();
    if (const auto* el = std::get_if<ElevateStep>(&step.action)) {
      entry["op"] = "elevate";
      entry["target"] = el->target;
      entry["count"] = el->count;
      entry["fresh_ids"] = el->fresh_ids;
    } else {
      entry["op"] = "glue";
      entry["partition"] = collection_body(std::get<GlueStep>(step.action).partition);
    }
    entry["after"] = poset_body(step.after);
    steps.push_back(std::move(entry));
  }
  doc["steps"] = std::move(steps);
  doc["final"] = poset_body(s.final_poset);
  doc["tracked"] = map_body(s.tracked);
  return render(doc);
}

ConstructionScript parse_script(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) field_error("document", "expected an object");
  check_version(doc, "");
  ConstructionScript s;
  s.source = poset_from_json(require(doc, "source", ""), "source.").poset;
  s.start = poset_from_json(require(doc, "start", ""), "start.").poset;
  const json& steps = require(doc, "steps", "");
  if (!steps.is_array()) field_error("steps", "expected a list");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string path = "steps[" + std::to_string(i) + "].";
    const json& st = steps[i];
    if (!st.is_object()) field_error(path.substr(0, path.size() - 1), "expected an object");
    const std::string op = as_string(require(st, "op", path), path + "op");
    ConstructionStep step;
    if (op == "elevate") {
      ElevateStep el;
      el.target = as_string(require(st, "target", path), path + "target");
      const json& count = require(st, "count", path);
      if (!count.is_number_unsigned()) field_error(path + "count", "expected a non-negative integer");
      el.count = count.get<std::size_t>();
      if (auto it = st.find("fresh_ids"); it != st.end()) el.fresh_ids = as_string_list(*it, path + "fresh_ids");
      step.action = std::move(el);
    } else if (op == "glue") {
      const json& part = require(st, "partition", path);
      if (!part.is_array()) field_error(path + "partition", "expected a list of id lists");
      GlueStep gl;
      for (std::size_t j = 0; j < part.size(); ++j) {
        auto ids = as_string_list(part[j], path + "partition[" + std::to_string(j) + "]");
        gl.partition.emplace_back(ids.begin(), ids.end());
      }
      step.action = std::move(gl);
    } else {
      field_error(path + "op", "expected \"elevate\" or \"glue\"");
    }
    step.after = poset_from_json(require(st, "after", path), path + "after.").poset;
    s.steps.push_back(std::move(step));
  }
  s.final_poset = poset_from_json(require(doc, "final", ""), "final.").poset;
  s.tracked = PosetMap(s.source, s.final_poset, assignment_from_json(require(doc, "tracked", ""), "tracked"));
  return s;
}

std::string emit_gluing(const GluingWitness& w) {
  ojson doc = versioned(poset_body(w.target()));
  ojson witness = ojson::object();
  witness["source"] = poset_body(w.source());
  witness["collection"] = collection_body(w.collection);
  witness["map"] = map_body(w.map);
  doc["gluing"] = std::move(witness);
  return render(doc);
}

std::string emit_split(const ChainDecomposition& cd, const SplitResult& s) {
  ojson doc = versioned(poset_body(s.f_poset));
  ojson split = ojson::object();
  split["x"] = poset_body(cd.target());
  split["d"] = poset_body(cd.d);
  ojson chains = ojson::array();
  for (const auto& c : cd.chains) chains.push_back(c);
  split["chains"] = std::move(chains);
  split["phi"] = map_body(cd.phi);
  split["t"] = map_body(s.t);
  split["f"] = map_body(s.f);
  doc["split"] = std::move(split);
  return render(doc);
}

std::string emit_elevation(const ElevationWitness& w, bool produced_z) {
  ojson doc = versioned(poset_body(produced_z ? w.z_poset : w.x_poset));
  ojson el = ojson::object();
  el["z"] = w.z;
  el[produced_z ? "x" : "z_poset"] = poset_body(produced_z ? w.x_poset : w.z_poset);
  el["r"] = map_body(w.r);
  el["e"] = map_body(w.e);
  doc["elevation"] = std::move(el);
  return render(doc);
}

std::string emit_dot(const Poset& p, const NodeSet& highlight, const Labels& labels) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  if (!p.empty()) {
    const auto h = heights(p);
    const auto top = *std::max_element(h.begin(), h.end());
    for (std::size_t level = 0; level <= top; ++level) {
      out << "  { rank=same;";
      for (std::size_t i = 0; i < p.size(); ++i)
        if (h[i] == level) out << " " << dot_quote(p.id(i)) << ";";
      out << " }\n";
    }
  }
  for (const auto& id : p.nodes()) {
    std::vector<std::string> attrs;
    if (auto it = labels.find(id); it != labels.end()) attrs.push_back("label=" + dot_quote(it->second));
    if (highlight.count(id)) attrs.push_back("style=filled, fillcolor=\"#6fa8dc\"");
    if (attrs.empty()) {
      out << "  " << dot_quote(id) << ";\n";
      continue;
    }
    out << "  " << dot_quote(id) << " [";
    for (std::size_t k = 0; k < attrs.size(); ++k) out << (k ? ", " : "") << attrs[k];
    out << "];\n";
  }
  for (const auto& [lo, hi] : p.cover_pairs()) out << "  " << dot_quote(lo) << " -> " << dot_quote(hi) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace posetglue
