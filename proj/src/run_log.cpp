#include "erq/run_log.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include "erq/error.hpp"

namespace erq {

namespace {

class LockedFile {
 public:
  explicit LockedFile(const std::string& path) : path_(path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) fail("cannot open");
    while (::flock(fd_, LOCK_EX) != 0) {
      if (errno != EINTR) fail("cannot lock");
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) ::close(fd_);  // releases the lock
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;

  int fd() const noexcept { return fd_; }

  [[noreturn]] void fail(const char* what) const {
    throw Error(std::string("run log ") + path_ + ": " + what + ": " + std::strerror(errno));
  }

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace

std::size_t record_experiment(const std::string& path, const Json& entry) {
  const std::string line = entry.dump() + "\n";
  LockedFile file(path);

  std::size_t lines = 0;
  bool ends_with_newline = true;
  char buf[1 << 16];
  off_t offset = 0;
  for (;;) {
    const ssize_t got = ::pread(file.fd(), buf, sizeof buf, offset);
    if (got < 0) {
      if (errno == EINTR) continue;
      file.fail("cannot read");
    }
    if (got == 0) break;
    for (ssize_t i = 0; i < got; ++i) lines += buf[i] == '\n';
    ends_with_newline = buf[got - 1] == '\n';
    offset += got;
  }
  if (!ends_with_newline) throw Error("run log " + path + ": last line is unterminated");

  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t w = ::write(file.fd(), line.data() + written, line.size() - written);
    if (w < 0) {
      if (errno == EINTR) continue;
      file.fail("cannot write");
    }
    written += static_cast<std::size_t>(w);
  }
  return lines;
}

std::vector<Json> read_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("run log " + path + ": cannot open");
  std::vector<Json> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    try {
      out.push_back(Json::parse(line));
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("run log " + path + ": line " + std::to_string(number) + " is not JSON");
    }
  }
  return out;
}

}  // namespace erq
