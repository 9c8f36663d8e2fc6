#include "specharness/util/io.hpp"

#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

namespace specharness::util {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError("short write: " + path.string());
  }
}

TempDir::TempDir(const std::string& prefix) {
  auto tmpl = (std::filesystem::temp_directory_path() / (prefix + ".XXXXXX")).string();
  std::string buf = tmpl;
  if (::mkdtemp(buf.data()) == nullptr) {
    throw IoError("mkdtemp failed: " + std::string(std::strerror(errno)));
  }
  path_ = buf;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace specharness::util
