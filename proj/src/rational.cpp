#include "bispec/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "bispec/errors.hpp"

namespace bispec {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
    : Error([&] {
          std::string msg = "parse error at offset " + std::to_string(offset) + ": " + detail;
          if (!expected.empty()) {
              msg += " (expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) {
                  if (i) msg += ", ";
                  msg += expected[i];
              }
              msg += ")";
          }
          return msg;
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num)) throw ParseError(negative ? 1 : 0, {"digits"}, "malformed rational '" + std::string(text) + "'");
    if (!all_digits(den))
        throw ParseError(slash == std::string_view::npos ? text.size() : (negative ? 1 : 0) + slash + 1, {"digits"},
                         "malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError((negative ? 1 : 0) + slash + 1, {"nonzero denominator"}, "zero denominator");
    if (negative) n = -n;
    return Rat(mpq_class(n, d));
}

std::optional<long> Rat::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

}  // namespace bispec
