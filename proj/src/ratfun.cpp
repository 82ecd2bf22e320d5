#include "schur/ratfun.hpp"

namespace schur {

std::size_t RationalFunction::reduction_digit_threshold = 64;

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Polynomial(1)) {
    if (num_.contains(kPrimeVar))
        throw domain_error("rational function over S must be p-free: " + num_.to_string());
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw domain_error("zero denominator");
    if (num_.contains(kPrimeVar) || den_.contains(kPrimeVar))
        throw domain_error("rational function over S must be p-free");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    // Integer content and sign.
    mpz_class cn = num_.content();
    mpz_class cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading_sign() < 0) g = -g;
    if (g != 1) {
        num_ = num_.divide_by_content(g);
        den_ = den_.divide_by_content(g);
    }
    if (den_.is_one()) return;
    if (num_.max_coeff_digits() > reduction_digit_threshold ||
        den_.max_coeff_digits() > reduction_digit_threshold) {
        Polynomial h = poly_gcd(num_, den_);
        if (!h.is_one() && !h.is_constant()) {
            num_ = *num_.divide_exact(h);
            den_ = *den_.divide_exact(h);
            if (den_.leading_sign() < 0) {
                num_ = -num_;
                den_ = -den_;
            }
        }
    }
}

RationalFunction RationalFunction::reduced() const {
    if (num_.is_zero() || den_.is_one()) return *this;
    Polynomial h = poly_gcd(num_, den_);
    RationalFunction r;
    r.num_ = h.is_one() ? num_ : *num_.divide_exact(h);
    r.den_ = h.is_one() ? den_ : *den_.divide_exact(h);
    if (r.den_.leading_sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_) == (o.num_ * den_); // cross-multiply: reduction is lazy
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& a) {
    return os << a.to_string();
}

} // namespace schur
