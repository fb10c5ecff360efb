#include "bispec/parse.hpp"

#include <cctype>
#include <vector>

#include "bispec/errors.hpp"

namespace bispec {

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'^'", "end of input"}, "unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
        throw ParseError(pos_, std::move(expected), what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    mpz_class integer() {
        if (!at_digit()) fail({"integer"}, "expected an integer");
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Poly expr() {
        Poly acc = signed_term();
        for (;;) {
            if (accept('+'))
                acc += signed_term();
            else if (accept('-'))
                acc -= signed_term();
            else
                return acc;
        }
    }

    Poly signed_term() {
        if (accept('-')) return -signed_term();
        return product();
    }

    Poly product() {
        Poly acc = power();
        while (accept('*')) acc = acc * power();
        return acc;
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        const mpz_class e = integer();
        if (e > kMaxExponent) throw ParseError(at, {"exponent <= " + std::to_string(kMaxExponent)}, "exponent too large");
        Poly r = Poly::constant(Rat(1));
        for (long k = 0; k < e.get_si(); ++k) r = r * base;
        return r;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail({"number", "'x'", "'('", "'-'"}, "unexpected end of input");
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail({"')'", "'+'", "'-'", "'*'", "'^'"}, "unbalanced parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class num = integer();
            if (!accept('/')) return Poly::constant(Rat(num));
            const std::size_t at_den = pos_;
            const mpz_class den = integer();
            if (den == 0) throw ParseError(at_den, {"nonzero integer"}, "zero denominator");
            return Poly::constant(Rat(mpq_class(num, den)));
        }
        fail({"number", "'x'", "'('", "'-'"}, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        const Rat mag = c.abs();
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rat(1)) out += mag.str() + "*";
        out += 'x';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace bispec
