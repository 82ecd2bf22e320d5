#ifndef SCHUR_PELEMENT_HPP
#define SCHUR_PELEMENT_HPP

#include <string>
#include <vector>

#include "schur/ratfun.hpp"

namespace schur {

// Element of Q[p]: coefficient i is the rational function in front of p^i.
// Trailing zero coefficients are trimmed; the zero element has no coefficients.
class PElement {
  public:
    PElement() = default;
    PElement(const RationalFunction& c); // NOLINT: implicit by design
    PElement(const Polynomial& c) : PElement(RationalFunction(c)) {}
    PElement(long c) : PElement(RationalFunction(c)) {}

    // Collects powers of p from a general polynomial (coefficients p-free).
    static PElement from_polynomial(const Polynomial& a);
    static PElement parse(const std::string& text);
    static PElement p_power(int e, const RationalFunction& c = RationalFunction(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Index of the lowest nonzero coefficient; requires a nonzero element.
    int valuation() const;
    const RationalFunction& coeff(int i) const;
    RationalFunction constant_coeff() const { return coeff(0); }
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }

    bool is_polynomial() const; // all coefficients have denominator 1
    int max_poly_degree() const;
    std::size_t max_coeff_digits() const;

    PElement operator-() const;
    PElement operator+(const PElement& o) const;
    PElement operator-(const PElement& o) const;
    PElement operator*(const PElement& o) const;
    PElement& operator+=(const PElement& o) { return *this = *this + o; }
    PElement& operator-=(const PElement& o) { return *this = *this - o; }
    PElement operator*(const RationalFunction& c) const;
    // Multiply by p^k.
    PElement shifted_up(int k) const;

    bool operator==(const PElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PElement& o) const { return !(*this == o); }

    // Value at p = prime under a full assignment of the other variables.
    long evaluate_mod(long prime, const std::map<std::string, long>& assignment) const;

    std::string to_string() const;

    void set_coeff(int i, const RationalFunction& c);

  private:
    void trim();
    std::vector<RationalFunction> coeffs_;
};

// Element of Q[p] with nonzero constant coefficient; invertible in the
// localization of Q[p] at (p).
struct PseudoUnit {
    PElement value;

    explicit PseudoUnit(const PElement& v);
    // Primitive, sign-normalized numerator of the constant coefficient.
    // This is the p-free polynomial whose zero set determines where the
    // pseudo-unit degenerates mod p.
    Polynomial zero_part() const;
};

// Writes f = p^l * u with u a pseudo-unit; rejects f = 0.
std::pair<int, PseudoUnit> decompose_pseudo_unit(const PElement& f);
PElement recompose(int l, const PseudoUnit& u);

std::ostream& operator<<(std::ostream& os, const PElement& a);

} // namespace schur

#endif
