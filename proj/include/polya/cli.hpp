#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polya/forms.hpp"
#include "polya/rational.hpp"

namespace polya::cli {

/// Exit codes of the `polya` tool.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kNotPositive = 2,
  kCapExceeded = 3,
  kIdentityViolated = 4,
};

/// Malformed or invalid input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": <int>, "matrix": [[<rational string>, ...], ...], "label": <optional string>}
struct InputDocument {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> matrix;
  std::optional<std::string> label;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Validates shape, rational grammar and exact symmetry. Throws InputError.
InputDocument parse_input(std::string_view text);

/// Canonical JSON text of the document (rationals in lowest terms).
std::string serialize_input(const InputDocument& doc);

QuadraticForm to_quadratic_form(const InputDocument& doc);

struct RunResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Runs one invocation. args excludes the program name, e.g.
/// {"bounds", "--input", "f.json", "--format", "json"}. When neither
/// --input nor an inline document is given, the document is read from `in`.
RunResult run(const std::vector<std::string>& args, std::istream& in);

/// Tool version string.
std::string version();

}  // namespace polya::cli
