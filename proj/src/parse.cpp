#include "intersective/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "intersective/error.hpp"

namespace intersective {

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RPoly add(const RPoly& a, const RPoly& b, int sign) {
    RPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
    trim(out);
    return out;
}

RPoly mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view what) {
    s = strip(s);
    std::string digits(s);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start) throw InputError("expected an integer in " + std::string(what));
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw InputError("malformed integer '" + digits + "' in " + std::string(what));
        }
    }
    if (digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits);
}

Rational parse_fraction(std::string_view s, std::string_view what) {
    s = strip(s);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, what));
    BigInt den = parse_integer(s.substr(slash + 1), what);
    if (sgn(den) == 0) throw InputError("zero denominator in " + std::string(what));
    Rational q(parse_integer(s.substr(0, slash), what), den);
    q.canonicalize();
    return q;
}

// Recursive descent over:
//   expr   := term (('+' | '-') term)*
//   term   := ('+' | '-')* factor (['*'] factor)*
//   factor := atom ('^' integer)?
//   atom   := number ['/' number] | variable | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    RPoly parse() {
        RPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("cannot parse polynomial \"" + std::string(text_) + "\" at offset " +
                         std::to_string(pos_) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(';
    }

    RPoly expr() {
        RPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            acc = add(acc, term(), c == '+' ? 1 : -1);
        }
    }

    RPoly term() {
        int sign = 1;
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            if (c == '-') sign = -sign;
            ++pos_;
        }
        RPoly acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(acc, factor());
            } else if (starts_atom(c)) {
                acc = mul(acc, factor());
            } else {
                break;
            }
        }
        if (sign < 0) {
            for (auto& q : acc) q = -q;
        }
        return acc;
    }

    RPoly factor() {
        RPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected an exponent");
            if (pos_ - start > 4) fail("exponent too large");
            const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            RPoly r{Rational(1)};
            for (int i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    RPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            RPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(number());
            // A literal fraction binds tighter than implicit multiplication.
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
                BigInt den = number();
                if (sgn(den) == 0) fail("zero denominator");
                q /= Rational(den);
            }
            RPoly r{q};
            trim(r);
            return r;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (var_ == '\0') var_ = c;
            if (c != var_) fail("more than one variable ('" + std::string(1, var_) + "' and '" +
                                std::string(1, c) + "')");
            ++pos_;
            if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("variables are single letters");
            }
            return RPoly{Rational(0), Rational(1)};
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    BigInt number() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char var_ = '\0';
};

RPoly parse_list(std::string_view s) {
    s = strip(s);
    s.remove_prefix(1);
    if (s.empty() || s.back() != ']') throw InputError("coefficient list must end with ']'");
    s.remove_suffix(1);
    RPoly out;
    if (strip(s).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        out.push_back(parse_fraction(s.substr(start, comma - start), "coefficient list"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    trim(out);
    return out;
}

}  // namespace

std::vector<Rational> parse_rational_polynomial(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.empty()) throw InputError("empty polynomial");
    if (s.front() == '[') return parse_list(s);
    return ExprParser(s).parse();
}

IntPoly parse_polynomial(std::string_view text) {
    const std::vector<Rational> q = parse_rational_polynomial(text);
    BigInt lcm = 1;
    for (const auto& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<BigInt> coeffs;
    coeffs.reserve(q.size());
    for (const auto& c : q) coeffs.push_back(c.get_num() * (lcm / c.get_den()));
    return primitive_part(IntPoly(std::move(coeffs)));
}

QuadForm parse_form(std::string_view text) {
    std::vector<BigInt> parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_integer(text.substr(start, comma - start), "form \"" + std::string(text) + "\""));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) throw InputError("form \"" + std::string(text) + "\" must be three integers a,b,c");
    return QuadForm(parts[0], parts[1], parts[2]);
}

std::vector<QuadForm> parse_forms(std::istream& in) {
    std::vector<QuadForm> out;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view s = strip(line);
        if (s.empty() || s.front() == '#') continue;
        out.push_back(parse_form(s));
    }
    return out;
}

std::vector<QuadForm> read_forms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open forms file " + path);
    return parse_forms(in);
}

}  // namespace intersective
