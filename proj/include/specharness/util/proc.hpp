#pragma once

#include <string>
#include <vector>

namespace specharness::util {

struct ProcResult {
  int exitCode = -1;
  bool timedOut = false;
  bool spawnFailed = false;  // executable missing or exec failure
  std::string stdoutText;
  std::string stderrText;
  long elapsedMs = 0;
};

// Runs argv[0] with the given arguments, capturing stdout/stderr.
// Kills the process group after timeoutMs (<=0 means no timeout).
ProcResult run_process(const std::vector<std::string>& argv, long timeoutMs,
                       const std::string& workDir = {});

// True if `name` is an executable path or resolvable on PATH.
bool executable_exists(const std::string& name);

}  // namespace specharness::util
