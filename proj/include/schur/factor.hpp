#ifndef SCHUR_FACTOR_HPP
#define SCHUR_FACTOR_HPP

#include <vector>

#include "schur/poly.hpp"

namespace schur {

struct Factorization {
    int unit = 1;                 // +1 or -1
    mpz_class content = 1;        // positive integer content
    std::vector<std::pair<Polynomial, int>> factors; // primitive, non-constant
    bool complete = true;         // false when some factor may still be reducible

    Polynomial product() const;   // unit * content * prod(factors^mult)
};

// Splits a nonzero p-free polynomial into sign, integer content and primitive
// factors. Monomials, integer content and square-free parts are always
// extracted; univariate pieces are fully factored (bounded Kronecker search);
// multivariate pieces that are linear in some variable split via coefficient
// gcds. Anything left uncertified is returned whole with complete = false.
Factorization factor_best_effort(const Polynomial& a);

} // namespace schur

#endif
