#ifndef TORICGB_HILBERT_HPP
#define TORICGB_HILBERT_HPP

#include <cstdint>
#include <vector>

#include "toricgb/monomial.hpp"

namespace toricgb {

struct HilbertData {
    std::int64_t dimension = 0;
    std::int64_t multiplicity = 0;
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of the quotient by
// the monomial ideal, computed by pivot splitting:
//   N(I) = N(I + (x_v)) + t * N(I : x_v)
// with closed form for pairwise-coprime generator sets. Coefficient of t^k
// at index k.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

// Krull dimension and multiplicity of the quotient: strip (1-t)^k from the
// numerator, dimension = nvars - k, multiplicity = remaining value at t=1.
HilbertData hilbert_data(std::vector<Monomial> gens, std::size_t nvars);

}  // namespace toricgb

#endif
