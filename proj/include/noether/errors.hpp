#pragma once

#include <stdexcept>
#include <string>

namespace noether {

enum class ErrorKind {
  composition,
  ownership,
  unsupported_subobject,
  unsupported_form,
  not_collapsible,
  not_a_lattice,
  validation,
  shape_mismatch,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace noether
