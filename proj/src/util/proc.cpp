#include "specharness/util/proc.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <sstream>

namespace specharness::util {

namespace {

void drain(int fd, std::string& out) {
  char buf[4096];
  for (;;) {
    ssize_t n = ::read(fd, buf, sizeof buf);
    if (n > 0) {
      out.append(buf, static_cast<size_t>(n));
    } else if (n == 0 || (n < 0 && errno != EINTR && errno != EAGAIN)) {
      break;
    } else if (n < 0 && errno == EAGAIN) {
      break;
    }
  }
}

}  // namespace

bool executable_exists(const std::string& name) {
  if (name.empty()) {
    return false;
  }
  if (name.find('/') != std::string::npos) {
    return ::access(name.c_str(), X_OK) == 0;
  }
  const char* pathEnv = std::getenv("PATH");
  if (pathEnv == nullptr) {
    return false;
  }
  std::istringstream paths(pathEnv);
  std::string dir;
  while (std::getline(paths, dir, ':')) {
    if (dir.empty()) {
      continue;
    }
    auto candidate = std::filesystem::path(dir) / name;
    if (::access(candidate.c_str(), X_OK) == 0) {
      return true;
    }
  }
  return false;
}

ProcResult run_process(const std::vector<std::string>& argv, long timeoutMs,
                       const std::string& workDir) {
  ProcResult result;
  if (argv.empty()) {
    result.spawnFailed = true;
    return result;
  }

  int outPipe[2];
  int errPipe[2];
  if (::pipe(outPipe) != 0 || ::pipe(errPipe) != 0) {
    result.spawnFailed = true;
    return result;
  }

  auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0) {
    result.spawnFailed = true;
    return result;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(outPipe[1], STDOUT_FILENO);
    ::dup2(errPipe[1], STDERR_FILENO);
    ::close(outPipe[0]);
    ::close(outPipe[1]);
    ::close(errPipe[0]);
    ::close(errPipe[1]);
    if (!workDir.empty() && ::chdir(workDir.c_str()) != 0) {
      _exit(127);
    }
    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (const auto& a : argv) {
      cargv.push_back(const_cast<char*>(a.c_str()));
    }
    cargv.push_back(nullptr);
    ::execvp(cargv[0], cargv.data());
    _exit(errno == ENOENT ? 127 : 126);
  }

  ::close(outPipe[1]);
  ::close(errPipe[1]);
  ::fcntl(outPipe[0], F_SETFL, O_NONBLOCK);
  ::fcntl(errPipe[0], F_SETFL, O_NONBLOCK);

  bool outOpen = true;
  bool errOpen = true;
  int status = 0;
  bool exited = false;
  while (outOpen || errOpen || !exited) {
    if (timeoutMs > 0) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      if (elapsed > timeoutMs && !result.timedOut) {
        result.timedOut = true;
        ::kill(-pid, SIGKILL);
      }
    }
    struct pollfd fds[2];
    nfds_t nfds = 0;
    if (outOpen) {
      fds[nfds++] = {outPipe[0], POLLIN, 0};
    }
    if (errOpen) {
      fds[nfds++] = {errPipe[0], POLLIN, 0};
    }
    if (nfds > 0) {
      ::poll(fds, nfds, 50);
      for (nfds_t i = 0; i < nfds; ++i) {
        if (fds[i].revents == 0) {
          continue;
        }
        bool isOut = fds[i].fd == outPipe[0];
        std::string& sink = isOut ? result.stdoutText : result.stderrText;
        char buf[4096];
        ssize_t n = ::read(fds[i].fd, buf, sizeof buf);
        if (n > 0) {
          sink.append(buf, static_cast<size_t>(n));
        } else if (n == 0 || (fds[i].revents & (POLLHUP | POLLERR))) {
          if (n <= 0) {
            (isOut ? outOpen : errOpen) = false;
          }
        }
      }
    }
    if (!exited) {
      pid_t r = ::waitpid(pid, &status, WNOHANG);
      if (r == pid) {
        exited = true;
        if (!outOpen && !errOpen) {
          break;
        }
      }
    } else if (!outOpen && !errOpen) {
      break;
    }
    if (exited && (outOpen || errOpen)) {
      // Final non-blocking drain once the child is gone.
      if (outOpen) {
        drain(outPipe[0], result.stdoutText);
        outOpen = false;
      }
      if (errOpen) {
        drain(errPipe[0], result.stderrText);
        errOpen = false;
      }
    }
  }
  ::close(outPipe[0]);
  ::close(errPipe[0]);

  result.elapsedMs = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  if (WIFEXITED(status)) {
    result.exitCode = WEXITSTATUS(status);
    if (result.exitCode == 127) {
      result.spawnFailed = true;
    }
  } else if (WIFSIGNALED(status)) {
    result.exitCode = 128 + WTERMSIG(status);
  }
  return result;
}

}  // namespace specharness::util
