#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codecomp/code_model.hpp"

// Plain-text formats used by the CLI.
//
// Composition file: first significant line is the alphabet size D; every
// further significant line is D whitespace-separated nonnegative integers
// (one composition; repeated lines accumulate multiplicity). Lines that
// are blank or start with '#' are ignored.
//
// Code file: one codeword per significant line, symbols as decimal digits
// '0'..'9' (alphabets up to D = 10). The alphabet size is max digit + 1
// unless overridden.

namespace codecomp::textio {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

CompositionMultiset parse_composition_file(std::istream& in);
Code parse_code_file(std::istream& in, std::optional<std::size_t> alphabet_override = {});

// one codeword per line, digit symbols, trailing newline
std::string format_code(const Code& code);

// "p/q", a plain integer, or a decimal string such as "2.5"; exact
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);  // comma separated

// canonical fraction; integral values omit the denominator
std::string format_rational(const Rational& value);
// rounded-down positional rendering, used only for display
std::string format_decimal(const Rational& value, int digits = 12);

}  // namespace codecomp::textio
