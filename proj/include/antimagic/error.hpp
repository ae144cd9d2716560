#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antimagic {

enum class Errc {
  invalid_spec,
  invalid_graph,
  invalid_labeling,
  precondition,
  budget_exhausted,
  overflow,
  io,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int condition = 0)
      : std::runtime_error(what), code_(code), condition_(condition) {}

  Errc code() const { return code_; }
  // numbered hypothesis that failed, 0 when not applicable
  int condition() const { return condition_; }

 private:
  Errc code_;
  int condition_;
};

using Sum = std::int64_t;

inline Sum checked_add(Sum a, Sum b) {
  Sum r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in sum");
  return r;
}

inline Sum checked_mul(Sum a, Sum b) {
  Sum r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in product");
  return r;
}

}  // namespace antimagic
