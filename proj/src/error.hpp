#pragma once

#include <stdexcept>
#include <string>

namespace cub5 {

enum class errc {
  invalid_argument = 1,
  construction = 2,
  io = 3,
  parse = 4,
  verification = 5,
  unsupported = 6,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cub5
