#pragma once

#include <stdexcept>
#include <string>

namespace mg {

// Raised on malformed input text (feature strings, lexicon lines, lambda
// terms, corpus lines).  `where` is a human-readable position such as
// "line 12" or "offset 4".
class SyntaxError : public std::runtime_error {
public:
  SyntaxError(const std::string& what, std::string where)
      : std::runtime_error(where.empty() ? what : what + " (" + where + ")"),
        where_(std::move(where)) {}

  const std::string& where() const { return where_; }

private:
  std::string where_;
};

// Raised when a semantic composition cannot be completed.
class ComposeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mg
