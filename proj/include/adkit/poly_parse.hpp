#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "adkit/poly.hpp"

namespace adkit {

/// Syntax or semantic error in a coefficient expression; `position` is the
/// 0-based character offset in the input where the problem was detected.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Parses a coefficient expression:
///
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := rational ('*' factor)* | factor ('*' factor)*
///   rational := integer ('/' positive-integer)?
///   factor   := name ('^' positive-integer)?
///   name     := 'a' | 'b' | 'g' | 'l' | 'p' positive-integer
///
/// Whitespace is ignored. The p<k> names are the fresh parameters emitted by
/// the enumerator.
Poly parse_poly(std::string_view text);

/// Parses "name=expr,name=expr,..." (e.g. "a=1/2,l=-1" or "a=-b,b=-a").
/// Values are arbitrary coefficient expressions; duplicates are an error.
std::map<Var, Poly> parse_substitution(std::string_view text);

/// Like parse_substitution but every value must be a rational constant.
Assignment parse_assignment(std::string_view text);

} // namespace adkit
