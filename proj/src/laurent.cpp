#include "bispec/laurent.hpp"

#include <algorithm>
#include <ostream>

namespace bispec {

LaurentPoly::LaurentPoly(int low, std::vector<Rat> coeffs) : low_(low), coeffs_(std::move(coeffs)) { normalize(); }

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(const Rat& c, int power) { return LaurentPoly(power, {c}); }

Rat LaurentPoly::coeff(int power) const {
    const int i = power - low_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<Rat> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += o * Rat(-1); }

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int e = p.high(); e >= p.low(); --e) {
        const Rat c = p.coeff(e);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? "+" : "");
        os << c.str();
        if (e != 0) os << "*x^" << e;
        first = false;
    }
    return os;
}

}  // namespace bispec
