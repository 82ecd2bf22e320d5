#ifndef SCHUR_POLY_HPP
#define SCHUR_POLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schur/error.hpp"

namespace schur {

// Reserved indeterminate names. "p" is the symbolic prime and is never
// substituted; "w" stands for a primitive root and is bound at evaluation
// time only.
inline constexpr const char* kPrimeVar = "p";
inline constexpr const char* kRootVar = "w";

// A monomial is a sorted list of (variable, exponent) pairs, exponents > 0.
// Variables are ordered w first, then all ordinary names alphabetically,
// then p last; this fixed ranking makes canonical forms and printed output
// deterministic.
using Monomial = std::vector<std::pair<std::string, int>>;

int var_rank_compare(const std::string& a, const std::string& b);

// Graded lexicographic, highest term first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate polynomial with arbitrary-precision integer coefficients.
// Values are immutable in spirit: all operations return new polynomials.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(const mpz_class& c);
    explicit Polynomial(long c);

    static Polynomial variable(const std::string& name, int exp = 1);
    static Polynomial constant(const mpz_class& c) { return Polynomial(c); }

    // Parses the grammar: integer literals, identifiers, + - * ^ and
    // parentheses, with * mandatory between factors.
    static Polynomial parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // The constant value; requires is_constant().
    mpz_class constant_value() const;

    int total_degree() const;
    int degree_in(const std::string& var) const;
    bool contains(const std::string& var) const;
    std::set<std::string> variables() const;
    std::size_t term_count() const { return terms_.size(); }
    std::size_t max_coeff_digits() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const mpz_class& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    // Total order (term-wise); used for deterministic sorted containers.
    bool operator<(const Polynomial& o) const;

    // Exact substitution of one variable; refuses the reserved prime.
    Polynomial substitute(const std::string& var, const Polynomial& value) const;
    Polynomial substitute(const std::string& var, const mpz_class& value) const;

    // Value mod prime under a full assignment (every variable except p must
    // be assigned; p itself evaluates to 0 mod prime).
    long evaluate_mod(long prime, const std::map<std::string, long>& assignment) const;

    // gcd of all integer coefficients (nonnegative; 0 for the zero polynomial).
    mpz_class content() const;
    // Sign of the coefficient of the leading (graded-lex greatest) term.
    int leading_sign() const;
    const mpz_class& leading_coeff() const;
    const Monomial& leading_monomial() const;
    // this / content, with positive leading coefficient; zero stays zero.
    Polynomial primitive_part() const;

    // Exact division: returns the quotient when divisor divides exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
    bool divisible_by(const Polynomial& divisor) const;
    Polynomial divide_by_content(const mpz_class& c) const;

    Polynomial derivative(const std::string& var) const;

    // View as a univariate polynomial in var; index = exponent.
    std::vector<Polynomial> coefficients_in(const std::string& var) const;
    static Polynomial from_coefficients_in(const std::string& var,
                                           const std::vector<Polynomial>& coeffs);

    std::string to_string() const;

    const TermMap& terms() const { return terms_; }
    void add_term(const Monomial& m, const mpz_class& c);

  private:
    TermMap terms_; // invariant: no zero coefficients stored
};

inline Polynomial operator*(const mpz_class& c, const Polynomial& a) { return a * c; }

// Multivariate gcd over Z (subresultant PRS), result with positive leading
// coefficient; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& a);

} // namespace schur

#endif
