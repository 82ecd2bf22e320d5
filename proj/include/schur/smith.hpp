#ifndef SCHUR_SMITH_HPP
#define SCHUR_SMITH_HPP

#include <string>
#include <vector>

#include "schur/multmat.hpp"

namespace schur {

using IntMat = std::vector<std::vector<mpz_class>>;

struct SnfInteger {
    std::vector<mpz_class> divisors; // full chain d_1 | d_2 | ... | d_r, all > 0
    int rank = 0;
    IntMat U, V; // filled when transforms requested: U * M * V = diag(divisors)
};

// Exact Smith normal form over Z.
SnfInteger snf_integer(IntMat M, bool want_transforms = false);

// Caps for the symbolic elimination; exceeding any cap aborts with partial
// data rather than running unbounded.
struct Budget {
    long max_steps = 50000; // row/column update operations
    int max_degree = 32;    // total degree of any polynomial entry
    long max_digits = 256;  // decimal digits of any integer coefficient
};

enum class PivotStrategy {
    smallest_unit, // minimal p-valuation, then fewest monomials, then degree
    first_nonzero  // minimal p-valuation, then scan order
};

struct SchurResult {
    bool symbolic = true;
    // Symbolic norm: exponents e >= 1 meaning p^e, nondecreasing.
    std::vector<int> exponents;
    // Concrete norm: elementary divisors > 1, nondecreasing.
    std::vector<mpz_class> divisors;
    // Pseudo-units divided by during elimination, deduplicated; ledger holds
    // their primitive p-free zero parts (sign and content stripped).
    std::vector<PseudoUnit> pseudo_units;
    std::vector<Polynomial> ledger;
    // Integer contents > 1 divided or multiplied in: harmless for primes not
    // dividing them, fatal for the others. The verifier treats a node as
    // inapplicable at any prime dividing one of these.
    std::vector<mpz_class> contents;
    bool budget_exceeded = false;
    std::string exceeded_cap; // "steps", "degree" or "digits"
    int free_rank = 0;
    bool valid = true;
    std::string diagnostic;

    bool content_safe_at(long prime) const;
};

// Smith normal form over Q[p] localized at (p): entries are scaled by
// recorded pseudo-units, never divided by anything whose constant coefficient
// vanishes; all divisors come out as powers of p.
SchurResult snf_symbolic(const RelationMatrix& M, const Budget& budget = Budget(),
                         PivotStrategy strategy = PivotStrategy::smallest_unit);

// Drops unit divisors and validates concrete divisors as p-powers.
SchurResult schur_from_divisors(const std::vector<mpz_class>& chain, long prime, int free_rank);
SchurResult schur_from_divisors(const std::vector<int>& exponent_chain, int free_rank);

// Convenience: the full concrete pipeline (build, lower, SNF, validate).
SchurResult schur_multiplier_concrete(const Presentation& P);

} // namespace schur

#endif
