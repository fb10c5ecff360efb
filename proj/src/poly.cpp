#include "bispec/poly.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "bispec/parse.hpp"

namespace bispec {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int k) {
    if (k < 0) throw std::domain_error("Poly::monomial: negative power");
    if (c.is_zero()) return {};
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

int Poly::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return kZeroDegree;
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::shifted(const Rat& s) const {
    if (s.is_zero() || coeffs_.size() < 2) return *this;
    // Repeated synthetic division (Taylor shift), O(d^2).
    std::vector<Rat> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += s * c[k];
    return Poly(std::move(c));
}

Poly Poly::derivative(int order) const {
    if (order < 0) throw std::domain_error("Poly::derivative: negative order");
    if (order == 0) return *this;
    if (static_cast<int>(coeffs_.size()) <= order) return {};
    std::vector<Rat> out(coeffs_.size() - static_cast<std::size_t>(order));
    for (std::size_t k = 0; k < out.size(); ++k) {
        // (k+order)!/k!
        mpz_class f = 1;
        for (std::size_t t = k + 1; t <= k + static_cast<std::size_t>(order); ++t) f *= static_cast<unsigned long>(t);
        out[k] = coeffs_[k + static_cast<std::size_t>(order)] * Rat(f);
    }
    return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& o) { return add_scaled(o, Rat(1)); }

Poly& Poly::operator-=(const Poly& o) { return add_scaled(o, Rat(-1)); }

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly& Poly::add_scaled(const Poly& o, const Rat& c, int k) {
    if (o.is_zero() || c.is_zero()) return *this;
    if (&o == this) {
        const Poly copy = o;
        return add_scaled(copy, c, k);
    }
    if (k < 0) throw std::domain_error("Poly::add_scaled: negative shift");
    const std::size_t need = o.coeffs_.size() + static_cast<std::size_t>(k);
    if (coeffs_.size() < need) coeffs_.resize(need);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i + static_cast<std::size_t>(k)] += c * o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rat lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Rat c = rem.leading() / lead;
        quot[static_cast<std::size_t>(shift)] = c;
        rem.add_scaled(b, -c, shift);
    }
    return {Poly(std::move(quot)), rem};
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << render_poly(p); }

}  // namespace bispec
