#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ivpp/error.hpp"
#include "ivpp/rational_map.hpp"

namespace ivpp::dsl {

// Text format of a rational map (*.rmap):
//
//   map       := "dim" INT ";" component+ invariant*
//   component := VAR "'" "=" expr ";"
//   invariant := "inv" IDENT "=" expr ";"       (must be a polynomial)
//   expr      := term (("+" | "-") term)*
//   term      := unary (("*" | "/") unary)*
//   unary     := ("-" | "+") unary | power
//   power     := primary ("^" INT)?
//   primary   := NUMBER | VAR | "(" expr ")"
//
// VAR is one of x, y, z; '#' starts a comment running to the end of the line.

struct ParseDiagnostic {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
  std::string message;
  std::vector<std::string> expected;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic)
      : Error(ErrorKind::ParseError, diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}
  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

/// Parses a map; nested fractions are cleared so every component is a single
/// numerator/denominator pair. Throws ParseError or Error(SemanticError).
RationalMapSpec parse_map(std::string_view source);

std::string format_map(const RationalMapSpec& spec);

}  // namespace ivpp::dsl
