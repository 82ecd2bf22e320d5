#ifndef SCHUR_RATFUN_HPP
#define SCHUR_RATFUN_HPP

#include <string>

#include "schur/poly.hpp"

namespace schur {

// Quotient of p-free integer polynomials, num/den with den != 0.
// Always reduced by integer content and sign-normalized so the denominator
// has a positive leading coefficient. Full polynomial gcd reduction is
// applied only once coefficients pass a digit threshold; the elimination
// paths are fraction-free, so it is rarely needed.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial(1)) {}
    RationalFunction(const Polynomial& num); // NOLINT: implicit by design
    RationalFunction(const mpz_class& c) : RationalFunction(Polynomial(c)) {}
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static std::size_t reduction_digit_threshold; // default 64

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // Fully reduced copy (polynomial gcd of num and den divided out).
    RationalFunction reduced() const;

    std::string to_string() const;

  private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& a);

} // namespace schur

#endif
