#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace djgraph::testing {

inline std::string fixture_path(const std::string& name) {
#ifdef DJGRAPH_TEST_DATA_DIR
  return std::string(DJGRAPH_TEST_DATA_DIR) + "/" + name;
#else
  return name;
#endif
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs a shell command, capturing combined output.  Tests only ever pass
// fixed strings and paths they created, so shell interpretation is fine.
inline CommandResult run_command(const std::string& command) {
  CommandResult result;
  FILE* pipe = ::popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

#ifdef DJGRAPH_CLI_PATH
inline std::string cli_path() { return DJGRAPH_CLI_PATH; }

inline CommandResult run_cli(const std::string& args) {
  return run_command(std::string(DJGRAPH_CLI_PATH) + " " + args);
}
#endif

}  // namespace djgraph::testing
