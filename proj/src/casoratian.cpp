#include "bispec/casoratian.hpp"

#include <stdexcept>

#include "bispec/linalg.hpp"

namespace bispec {

Poly casoratian(const std::vector<Poly>& polys) {
    if (polys.empty()) throw std::invalid_argument("casoratian: needs at least one polynomial");
    const std::size_t s = polys.size();
    std::vector<std::vector<Poly>> m(s, std::vector<Poly>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m[i][j] = polys[i].shifted(Rat(-static_cast<long>(j)));
    return determinant(std::move(m));
}

}  // namespace bispec
