#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "posetglue/generate.hpp"
#include "posetglue/io.hpp"

using namespace posetglue;

namespace {

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::vector<NodeId> split_list(const std::string& text) {
  std::vector<NodeId> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join(const NodeSet& s) {
  std::string out;
  for (const auto& id : s) out += (out.empty() ? "" : ", ") + id;
  return out;
}

WrapOptions parse_wrap(const std::string& spec) {
  WrapOptions opts;
  for (const auto& item : split_list(spec)) {
    auto number = [&](const std::string& key) -> std::size_t {
      const auto text = item.substr(key.size() + 1);
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "--wrap " + key + " needs a non-negative integer");
      }
      return std::stoul(text);
    };
    if (item == "single-max") opts.single_max = true;
    else if (item == "single-min") opts.single_min = true;
    else if (item.rfind("min-height=", 0) == 0) opts.min_height = number("min-height");
    else if (item.rfind("min-dim=", 0) == 0) opts.min_dim = number("min-dim");
    else throw Error(ErrorKind::InvalidArgument, "unknown --wrap option '" + item + "'");
  }
  return opts;
}

std::string verdict_line(const std::string& name, const Verdict& v) {
  std::string line = name + ": " + (v ? "yes" : "no");
  if (!v && v.reason != "skipped") line += " (" + v.reason + ")";
  if (!v && v.witness) line += " [" + v.witness->first + ", " + v.witness->second + "]";
  return line + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite posets: gluing, elevation and decomposition certificates"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the result here instead of stdout");

  std::string file, file2, file3, at, min_node, cover, wrap_spec, highlight;
  std::vector<std::string> along;
  std::size_t count = 1, nodes = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::string fresh;

  auto* info = app.add_subcommand("info", "Summarize a poset");
  info->add_option("poset", file)->required();

  auto* verify = app.add_subcommand("verify-embedding", "Classify a map X -> Y; exit 0 iff saturated embedding");
  verify->add_option("x", file)->required();
  verify->add_option("y", file2)->required();
  verify->add_option("map", file3)->required();

  auto* glue = app.add_subcommand("glue", "Glue a poset along collections of nodes");
  glue->add_option("poset", file)->required();
  glue->add_option("--along", along, "Comma-separated member (repeatable)")->required();

  auto* split = app.add_subcommand("split", "Split a minimal node so that a cover becomes its only cover");
  split->add_option("poset", file)->required();
  split->add_option("--min", min_node)->required();
  split->add_option("--cover", cover)->required();

  auto* elev = app.add_subcommand("elevate", "Grow fresh minimal nodes under a minimal node");
  elev->add_option("poset", file)->required();
  elev->add_option("--at", at)->required();
  elev->add_option("--count", count)->required();
  elev->add_option("--fresh", fresh, "Comma-separated ids for the new nodes");

  auto* retr = app.add_subcommand("retract", "Collapse the down-set of a height-one node");
  retr->add_option("poset", file)->required();
  retr->add_option("--at", at)->required();

  auto* decompose = app.add_subcommand("decompose", "Emit a construction script from a point");
  decompose->add_option("poset", file)->required();
  decompose->add_option("--wrap", wrap_spec, "single-max,single-min,min-height=N,min-dim=N");

  auto* rep = app.add_subcommand("replay", "Re-execute and verify a construction script");
  rep->add_option("script", file)->required();

  auto* render = app.add_subcommand("render", "Emit Graphviz text");
  render->add_option("poset", file)->required();
  render->add_option("--highlight", highlight, "Comma-separated ids");

  auto* random = app.add_subcommand("random", "Emit a seeded random poset");
  random->add_option("--seed", seed)->required();
  random->add_option("--nodes", nodes)->required();
  random->add_option("--p", p)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*info) {
      const auto doc = parse_poset_document(read_input(file));
      const Poset& x = doc.poset;
      std::ostringstream out;
      out << "nodes: " << x.size() << "\n";
      out << "covers: " << x.cover_indices().size() << "\n";
      if (!x.empty()) {
        out << "dim: " << dim(x) << "\n";
        out << "min: " << join(min_nodes(x)) << "\n";
        out << "max: " << join(max_nodes(x)) << "\n";
        out << "maximal chains: " << maximal_chains(x).size() << "\n";
        out << "longest chains: " << count_longest_chains(x) << "\n";
      }
      write_output(output, out.str());
    } else if (*verify) {
      const Poset x = parse_poset(read_input(file));
      const Poset y = parse_poset(read_input(file2));
      const auto report = classify(parse_map(read_input(file3), x, y));
      write_output(output, verdict_line("poset map", report.poset_map) + verdict_line("embedding", report.embedding) +
                               verdict_line("saturated embedding", report.saturated_embedding) +
                               verdict_line("isomorphism", report.isomorphism));
      return report.saturated_embedding ? 0 : 1;
    } else if (*glue) {
      const Poset x = parse_poset(read_input(file));
      Collection c;
      for (const auto& member : along) {
        auto ids = split_list(member);
        c.emplace_back(ids.begin(), ids.end());
      }
      write_output(output, emit_gluing(glue_along_collection(x, c)));
    } else if (*split) {
      const Poset x = parse_poset(read_input(file));
      const auto result = split_for_cover(x, min_node, cover);
      write_output(output, emit_split(chain_decomposition(x), result));
    } else if (*elev) {
      const Poset x = parse_poset(read_input(file));
      write_output(output, emit_elevation(elevate(x, at, count, split_list(fresh)), true));
    } else if (*retr) {
      const Poset z = parse_poset(read_input(file));
      write_output(output, emit_elevation(retract(z, at), false));
    } else if (*decompose) {
      const Poset x = parse_poset(read_input(file));
      write_output(output, emit_script(decompose_to_point(x, parse_wrap(wrap_spec))));
    } else if (*rep) {
      const auto report = replay(parse_script(read_input(file)));
      std::string text;
      for (const auto& line : report.log) text += line + "\n";
      text += "elevations: " + std::to_string(report.elevations) + ", gluings: " + std::to_string(report.gluings) + "\n";
      text += "final: " + std::to_string(report.final_poset.size()) + " nodes, dim " +
              std::to_string(dim(report.final_poset)) + "\n";
      text += "certificate: saturated embedding verified\n";
      write_output(output, text);
    } else if (*render) {
      const auto doc = parse_poset_document(read_input(file));
      const auto ids = split_list(highlight);
      for (const auto& id : ids) doc.poset.index_of(id);
      write_output(output, emit_dot(doc.poset, NodeSet(ids.begin(), ids.end()), doc.labels));
    } else if (*random) {
      write_output(output, emit_poset(random_poset(seed, nodes, p)));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
