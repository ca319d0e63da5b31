#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "codecomp/text_format.hpp"
#include "support.hpp"

using namespace codecomp;
using namespace codecomp::textio;
using testsupport::bit_code;
using testsupport::comp;

namespace {

CompositionMultiset parse_comps(const std::string& text) {
    std::istringstream in(text);
    return parse_composition_file(in);
}

Code parse_code(const std::string& text, std::optional<std::size_t> alphabet = {}) {
    std::istringstream in(text);
    return parse_code_file(in, alphabet);
}

}  // namespace

TEST_CASE("composition files parse with comments and multiplicity") {
    auto ms = parse_comps("# header comment\n2\n\n2 0\n1 1\n# interlude\n1 1\n3 1\n");
    CHECK(ms.alphabet_size() == 2);
    CHECK(ms.total_words() == 4);
    CHECK(ms == CompositionMultiset(2, {{comp({1, 1}), 2}, {comp({2, 0}), 1},
                                        {comp({3, 1}), 1}}));

    auto ternary = parse_comps("3\n1 0 2\n");
    CHECK(ternary.alphabet_size() == 3);
    CHECK(ternary.entries().front().first == comp({1, 0, 2}));

    // tabs and extra spaces are insignificant
    CHECK(parse_comps("2\n\t2   0\n") ==
          CompositionMultiset(2, std::vector<Composition>{comp({2, 0})}));
}

TEST_CASE("composition file errors carry positions") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_comps(text);
            FAIL("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() >= 1);
        }
    };
    expect_error("", 1);                     // no alphabet line at all
    expect_error("1\n1\n", 1);               // alphabet too small
    expect_error("x\n", 1);                  // not a number
    expect_error("2 2\n1 1\n", 1);           // alphabet line with two tokens
    expect_error("2\n1\n", 2);               // wrong arity
    expect_error("2\n1 1 1\n", 2);           // wrong arity
    expect_error("2\n1 -1\n", 2);            // negative count
    expect_error("2\n0 0\n", 2);             // empty composition
    expect_error("2\n", 2);                  // no composition lines
    expect_error("2\n99999999999999999999 1\n", 2);  // count overflow
}

TEST_CASE("code files parse digits with inferred or forced alphabet") {
    Code code = parse_code("# a code\n00\n10\n11\n");
    CHECK(code.alphabet_size() == 2);
    CHECK(code == bit_code({"00", "10", "11"}));

    CHECK(parse_code("012\n").alphabet_size() == 3);
    CHECK(parse_code("01\n", 4).alphabet_size() == 4);
    CHECK(parse_code("0\n0\n").size() == 2);  // duplicates are kept

    CHECK_THROWS_AS(parse_code("0a\n"), ParseError);
    CHECK_THROWS_AS(parse_code(""), ParseError);
    CHECK_THROWS_AS(parse_code("02\n", 2), ParseError);  // symbol outside forced alphabet
    CHECK_THROWS_AS(parse_code("0 1\n"), ParseError);    // spaces inside a codeword
}

TEST_CASE("code formatting round trips") {
    Code code = bit_code({"00", "01", "1000"});
    CHECK(format_code(code) == "00\n01\n1000\n");
    CHECK(parse_code(format_code(code), 2) == code);

    Code ternary(3, {Codeword({0, 2, 1})});
    CHECK(format_code(ternary) == "021\n");

    CHECK_THROWS_AS(format_code(Code(11, {Codeword({10})})), std::invalid_argument);
}

TEST_CASE("rationals parse exactly") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-2/5") == Rational(-2, 5));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational(" 5/2 ") == Rational(5, 2));
    CHECK(parse_rational("10/4") == Rational(5, 2));  // normalization
    CHECK(parse_rational(".5") == Rational(1, 2));    // bare decimal point forms
    CHECK(parse_rational("2.") == Rational(2));

    for (const char* bad : {"", "1/0", "abc", "1.2.3", "1/", "/2", ".", "1 2", "+-1"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);

    auto list = parse_rational_list("1, 3/2,2.5");
    REQUIRE(list.size() == 3);
    CHECK(list[0] == 1);
    CHECK(list[1] == Rational(3, 2));
    CHECK(list[2] == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational_list(""), std::invalid_argument);
}

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(3, 2)) == "3/2");
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(0)) == "0");
    CHECK(format_rational(Rational(-5, 3)) == "-5/3");
    CHECK(format_rational(Rational(21)) == "21");
}

TEST_CASE("decimal rendering truncates and trims") {
    CHECK(format_decimal(Rational(1, 8)) == "0.125");
    CHECK(format_decimal(Rational(5)) == "5");
    CHECK(format_decimal(Rational(1, 3), 5) == "0.33333");
    CHECK(format_decimal(Rational(22, 7), 3) == "3.142");
    CHECK(format_decimal(Rational(-1, 4)) == "-0.25");
    CHECK(format_decimal(Rational(3, 2), 1) == "1.5");
}
