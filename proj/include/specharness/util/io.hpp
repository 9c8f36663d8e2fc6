#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace specharness::util {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

// Creates a unique scratch directory under the system temp dir and removes
// it (recursively) on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "specharness");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace specharness::util
