#ifndef BISPEC_RATIONAL_HPP
#define BISPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace bispec {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(const mpz_class& integer) : v_(integer) {}
    explicit Rat(mpq_class value);

    /// Parses "p", "-p", "p/q" or "-p/q" (decimal digits, q > 0).
    static Rat parse(std::string_view text);

    /// Canonical "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    std::optional<long> to_long() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    /// Throws std::domain_error for zero.
    Rat inverse() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// n! as an exact integer.
Rat factorial(long n);

}  // namespace bispec

#endif
