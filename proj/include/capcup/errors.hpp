#pragma once

#include <stdexcept>
#include <string>

namespace capcup {

// Bad or degenerate input, or a violated operation precondition.
// The message is a single line of the form "<slug>: <detail>".
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A condition guaranteed by the underlying theory failed at runtime.
// Any throw of this type is a reportable event, never swallowed.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_error("invariant-violated: " + what);
}

}  // namespace capcup
