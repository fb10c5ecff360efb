#ifndef BISPEC_LAURENT_HPP
#define BISPEC_LAURENT_HPP

#include <iosfwd>
#include <vector>

#include "bispec/poly.hpp"

namespace bispec {

/// Finite Laurent polynomial sum_{e=low}^{high} c_e x^e, negative powers allowed.
///
/// The first and last stored coefficients are nonzero unless the value is zero,
/// in which case coeffs() is empty and low() is 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int low, std::vector<Rat> coeffs);
    explicit LaurentPoly(const Poly& p) : LaurentPoly(0, p.coeffs()) {}

    static LaurentPoly monomial(const Rat& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    /// Highest stored power; meaningless (low()-1) for zero.
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int power) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(const Poly& p, const LaurentPoly& a) { return LaurentPoly(p) * a; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Calls f(power, coefficient) for every nonzero term in ascending power.
    template <class F>
    void for_each_term(F&& f) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) f(low_ + static_cast<int>(i), coeffs_[i]);
    }

private:
    void normalize();
    int low_ = 0;
    std::vector<Rat> coeffs_;
};

/// Human-readable form such as "x^-2+3*x^-1+1"; diagnostic only, not parseable.
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace bispec

#endif
