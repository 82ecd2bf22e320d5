#include "schur/pelement.hpp"

#include <sstream>

namespace schur {

PElement::PElement(const RationalFunction& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

void PElement::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PElement PElement::from_polynomial(const Polynomial& a) {
    PElement r;
    auto coeffs = a.coefficients_in(kPrimeVar);
    r.coeffs_.reserve(coeffs.size());
    for (const auto& c : coeffs) r.coeffs_.emplace_back(c);
    r.trim();
    return r;
}

PElement PElement::parse(const std::string& text) {
    // Accepts "poly" or "poly / poly" with the denominator p-free.
    auto slash = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            slash = i;
            break;
        }
    }
    if (slash == std::string::npos) return from_polynomial(Polynomial::parse(text));
    Polynomial num = Polynomial::parse(text.substr(0, slash));
    Polynomial den = Polynomial::parse(text.substr(slash + 1));
    PElement r = from_polynomial(num);
    PElement out;
    for (int i = 0; i <= r.degree(); ++i)
        out.set_coeff(i, r.coeff(i) / RationalFunction(den));
    return out;
}

PElement PElement::p_power(int e, const RationalFunction& c) {
    PElement r;
    if (c.is_zero()) return r;
    r.coeffs_.assign(static_cast<std::size_t>(e) + 1, RationalFunction());
    r.coeffs_.back() = c;
    return r;
}

int PElement::valuation() const {
    if (coeffs_.empty()) throw domain_error("valuation of zero element");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    throw domain_error("untrimmed zero element"); // unreachable
}

const RationalFunction& PElement::coeff(int i) const {
    static const RationalFunction zero;
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void PElement::set_coeff(int i, const RationalFunction& c) {
    if (static_cast<std::size_t>(i) >= coeffs_.size())
        coeffs_.resize(static_cast<std::size_t>(i) + 1, RationalFunction());
    coeffs_[static_cast<std::size_t>(i)] = c;
    trim();
}

bool PElement::is_polynomial() const {
    for (const auto& c : coeffs_)
        if (!c.is_polynomial()) return false;
    return true;
}

int PElement::max_poly_degree() const {
    int d = 0;
    for (const auto& c : coeffs_) {
        d = std::max(d, c.num().total_degree());
        d = std::max(d, c.den().total_degree());
    }
    return d;
}

std::size_t PElement::max_coeff_digits() const {
    std::size_t d = 0;
    for (const auto& c : coeffs_) {
        d = std::max(d, c.num().max_coeff_digits());
        d = std::max(d, c.den().max_coeff_digits());
    }
    return d;
}

PElement PElement::operator-() const {
    PElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PElement PElement::operator+(const PElement& o) const {
    PElement r = *this;
    if (o.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size(), RationalFunction());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

PElement PElement::operator-(const PElement& o) const {
    PElement r = *this;
    if (o.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size(), RationalFunction());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

PElement PElement::operator*(const PElement& o) const {
    PElement r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, RationalFunction());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

PElement PElement::operator*(const RationalFunction& c) const {
    PElement r;
    if (c.is_zero()) return r;
    r.coeffs_ = coeffs_;
    for (auto& k : r.coeffs_) k *= c;
    r.trim();
    return r;
}

PElement PElement::shifted_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    PElement r;
    r.coeffs_.assign(coeffs_.size() + static_cast<std::size_t>(k), RationalFunction());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return r;
}

long PElement::evaluate_mod(long prime, const std::map<std::string, long>& assignment) const {
    // p^i vanishes mod prime for i >= 1, so only s_0 contributes. The
    // denominator must be a unit mod prime.
    if (coeffs_.empty()) return 0;
    const RationalFunction& s0 = coeffs_[0];
    long num = s0.num().evaluate_mod(prime, assignment);
    long den = s0.den().evaluate_mod(prime, assignment);
    if (den == 0) throw domain_error("denominator vanishes mod " + std::to_string(prime));
    // Modular inverse via Fermat.
    long inv = 1, b = den, e = prime - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * b) % prime;
        b = (b * b) % prime;
        e >>= 1;
    }
    return (num * inv) % prime;
}

std::string PElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RationalFunction& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (!first)
            os << (neg ? " - " : " + ");
        else if (neg)
            os << '-';
        first = false;
        if (i == 0) {
            os << body;
            continue;
        }
        std::string ppart = (i == 1) ? "p" : "p^" + std::to_string(i);
        if (body == "1") {
            os << ppart;
        } else {
            bool needs_parens = c.num().term_count() > 1 || !c.den().is_one();
            os << (needs_parens ? "(" + body + ")" : body) << '*' << ppart;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PElement& a) { return os << a.to_string(); }

PseudoUnit::PseudoUnit(const PElement& v) : value(v) {
    if (value.is_zero() || value.constant_coeff().is_zero())
        throw domain_error("not a pseudo-unit: constant coefficient vanishes");
}

Polynomial PseudoUnit::zero_part() const {
    return value.constant_coeff().num().primitive_part();
}

std::pair<int, PseudoUnit> decompose_pseudo_unit(const PElement& f) {
    if (f.is_zero()) throw domain_error("zero element has no pseudo-unit decomposition");
    int l = f.valuation();
    PElement u;
    for (int i = l; i <= f.degree(); ++i) u.set_coeff(i - l, f.coeff(i));
    return {l, PseudoUnit(u)};
}

PElement recompose(int l, const PseudoUnit& u) { return u.value.shifted_up(l); }

} // namespace schur
