#ifndef BISPEC_POLY_HPP
#define BISPEC_POLY_HPP

#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

#include "bispec/rational.hpp"

namespace bispec {

/// Dense univariate polynomial over Rat, coefficients in ascending powers.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and reports degree() == Poly::kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly constant(const Rat& c);
    /// c * x^k
    static Poly monomial(const Rat& c, int k);
    static Poly x() { return monomial(Rat(1), 1); }

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k; zero outside the stored range. Equals p^{(k)}(0)/k!.
    Rat coeff(int k) const;
    Rat leading() const { return coeffs_.empty() ? Rat() : coeffs_.back(); }
    /// Smallest k with a nonzero coefficient; kZeroDegree for the zero polynomial.
    int valuation() const;

    Rat operator()(const Rat& x) const;
    /// p(x + s)
    Poly shifted(const Rat& s) const;
    Poly derivative(int order = 1) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    /// this += c * x^k * o, without materialising the product.
    Poly& add_scaled(const Poly& o, const Rat& c, int k = 0);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Euclidean division: returns (quotient, remainder). Throws std::domain_error for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Canonical rendering, same as render_poly().
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bispec

#endif
