#include "codecomp/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace codecomp::textio {

namespace {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

// maximal runs of non-whitespace with their 1-based start columns
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

std::int64_t parse_count(const Token& token, int line_no) {
    if (token.text.empty() || token.text.size() > 18)
        throw ParseError(line_no, token.column, "expected a nonnegative integer");
    for (char c : token.text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line_no, token.column, "expected a nonnegative integer");
    return std::stoll(token.text);
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

CompositionMultiset parse_composition_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<std::size_t> alphabet;
    std::vector<Composition> comps;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto tokens = tokenize(line);
        if (!alphabet) {
            if (tokens.size() != 1)
                throw ParseError(line_no, tokens.size() > 1 ? tokens[1].column : 1,
                                 "first line must hold exactly the alphabet size");
            std::int64_t d = parse_count(tokens[0], line_no);
            if (d < 2)
                throw ParseError(line_no, tokens[0].column, "alphabet size must be at least 2");
            alphabet = static_cast<std::size_t>(d);
            continue;
        }
        if (tokens.size() != *alphabet)
            throw ParseError(line_no, tokens.empty() ? 1 : tokens.back().column,
                             "expected " + std::to_string(*alphabet) + " counts, got " +
                                 std::to_string(tokens.size()));
        std::vector<std::int64_t> counts;
        counts.reserve(*alphabet);
        for (const auto& token : tokens) counts.push_back(parse_count(token, line_no));
        Composition comp(counts);
        if (comp.total_length() < 1)
            throw ParseError(line_no, tokens[0].column, "composition must not be empty");
        comps.push_back(std::move(comp));
    }
    if (!alphabet) throw ParseError(line_no + 1, 1, "missing alphabet size line");
    if (comps.empty()) throw ParseError(line_no + 1, 1, "no compositions in file");
    return CompositionMultiset(*alphabet, comps);
}

Code parse_code_file(std::istream& in, std::optional<std::size_t> alphabet_override) {
    std::string line;
    int line_no = 0;
    std::vector<Codeword> words;
    int max_digit = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto tokens = tokenize(line);
        if (tokens.size() != 1)
            throw ParseError(line_no, tokens[1].column, "expected one codeword per line");
        const auto& [text, column] = tokens[0];
        std::vector<int> symbols;
        symbols.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError(line_no, column + static_cast<int>(i),
                                 "codeword symbols must be decimal digits");
            int digit = text[i] - '0';
            if (alphabet_override && digit >= static_cast<int>(*alphabet_override))
                throw ParseError(line_no, column + static_cast<int>(i),
                                 "symbol outside the declared alphabet");
            max_digit = std::max(max_digit, digit);
            symbols.push_back(digit);
        }
        words.emplace_back(std::move(symbols));
    }
    if (words.empty()) throw ParseError(line_no + 1, 1, "no codewords in file");
    std::size_t alphabet = alphabet_override.value_or(static_cast<std::size_t>(max_digit) + 1);
    return Code(alphabet, std::move(words));
}

std::string format_code(const Code& code) {
    std::string out;
    for (const auto& word : code.words()) {
        for (int s : word.symbols()) {
            if (s > 9) throw std::invalid_argument("only alphabets up to 10 symbols serialize");
            out.push_back(static_cast<char>('0' + s));
        }
        out.push_back('\n');
    }
    return out;
}

Rational parse_rational(const std::string& raw) {
    auto is_ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    std::string text = raw;
    text.erase(text.begin(), std::find_if_not(text.begin(), text.end(), is_ws));
    text.erase(std::find_if_not(text.rbegin(), text.rend(), is_ws).base(), text.end());

    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("not a rational: '" + raw + "'"); };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string integral = text.substr(digits_start, pos - digits_start);

    Rational value;
    if (pos < text.size() && text[pos] == '/') {
        std::string den = text.substr(pos + 1);
        if (integral.empty() || !all_digits(den)) fail();
        BigCount d(den);
        if (d == 0) fail();
        value = Rational(BigCount(integral), d);
    } else if (pos < text.size() && text[pos] == '.') {
        std::string frac = text.substr(pos + 1);
        if (!frac.empty() && !all_digits(frac)) fail();
        if (integral.empty() && frac.empty()) fail();
        BigCount scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(BigCount(integral.empty() ? "0" : integral) * scale +
                             BigCount(frac.empty() ? "0" : frac),
                         scale);
    } else if (pos == text.size() && !integral.empty()) {
        value = Rational(BigCount(integral));
    } else {
        fail();
    }
    return negative ? -value : value;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> values;
    std::string item;
    std::stringstream stream(text);
    while (std::getline(stream, item, ',')) values.push_back(parse_rational(item));
    if (values.empty()) throw std::invalid_argument("empty rational list");
    return values;
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) out += "/" + denominator(value).str();
    return out;
}

std::string format_decimal(const Rational& value, int digits) {
    BigCount num = numerator(value);
    BigCount den = denominator(value);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    std::string out = sign + BigCount(num / den).str();
    BigCount rem = num % den;
    if (rem == 0) return out;
    out.push_back('.');
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        out += BigCount(rem / den).str();
        rem %= den;
    }
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
    return out;
}

}  // namespace codecomp::textio
