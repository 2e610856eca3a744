#pragma once

#include <array>
#include <cstdio>
#include <functional>
#include <optional>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "posetglue/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(POSETGLUE_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline posetglue::Poset load(const std::string& name) { return posetglue::parse_poset(read(path(name))); }

// The kind of the posetglue::Error thrown by f, if any.
inline std::optional<posetglue::ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const posetglue::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with `args` appended (shell syntax), capturing stdout and,
// when asked, stderr as well.
inline RunResult cli(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(POSETGLUE_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace fixtures
