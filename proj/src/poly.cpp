#include "schur/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schur {

namespace {

// Euclidean remainder in [0, m).
long mod_reduce(const mpz_class& v, long m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

long mulmod(long a, long b, long m) {
    return static_cast<long>((static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b)) % static_cast<unsigned long long>(m));
}

long powmod(long base, long exp, long m) {
    long r = 1 % m;
    long b = base % m;
    if (b < 0) b += m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    return r;
}

} // namespace

int var_rank_compare(const std::string& a, const std::string& b) {
    auto cls = [](const std::string& v) {
        if (v == kRootVar) return 0;
        if (v == kPrimeVar) return 2;
        return 1;
    };
    int ca = cls(a), cb = cls(b);
    if (ca != cb) return ca < cb ? -1 : 1;
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    // Returns true when a comes before b, i.e. a is graded-lex greater.
    long da = 0, db = 0;
    for (const auto& [v, e] : a) da += e;
    for (const auto& [v, e] : b) db += e;
    if (da != db) return da > db;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = var_rank_compare(a[i].first, b[j].first);
        if (c < 0) return true;   // a has positive exponent in an earlier var
        if (c > 0) return false;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size();
}

Polynomial::Polynomial(const mpz_class& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Polynomial Polynomial::variable(const std::string& name, int exp) {
    Polynomial r;
    if (exp < 0) throw domain_error("negative exponent for variable " + name);
    if (exp == 0) return Polynomial(1);
    r.terms_.emplace(Monomial{{name, exp}}, mpz_class(1));
    return r;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

mpz_class Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw domain_error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

int Polynomial::degree_in(const std::string& var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) d = std::max(d, e);
    return d;
}

bool Polynomial::contains(const std::string& var) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m)
            if (v == var) return true;
    return false;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return vars;
}

std::size_t Polynomial::max_coeff_digits() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, mpz_sizeinbase(c.get_mpz_t(), 10));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = var_rank_compare(a[i].first, b[j].first);
        if (c < 0) {
            r.push_back(a[i++]);
        } else if (c > 0) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

// Componentwise divisibility of monomials; quotient on success.
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0;
    for (const auto& [v, e] : b) {
        while (i < a.size() && var_rank_compare(a[i].first, v) < 0) r.push_back(a[i++]);
        if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
        if (a[i].second > e) r.emplace_back(v, a[i].second - e);
        ++i;
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    return r;
}

} // namespace

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const mpz_class& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw domain_error("negative polynomial power");
    Polynomial r(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    auto it = terms_.begin(), jt = o.terms_.begin();
    MonomialOrder ord;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (ord(it->first, jt->first)) return false;
        if (ord(jt->first, it->first)) return true;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return it == terms_.end() && jt != o.terms_.end();
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
    if (var == kPrimeVar)
        throw context_error("the prime indeterminate p is never specialised");
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int exp = 0;
        Monomial rest;
        for (const auto& [v, e] : m) {
            if (v == var)
                exp = e;
            else
                rest.emplace_back(v, e);
        }
        if (exp == 0) {
            r.add_term(m, c);
        } else {
            Polynomial piece = value.pow(exp);
            Polynomial base;
            base.terms_.emplace(rest, c);
            r += base * piece;
        }
    }
    return r;
}

Polynomial Polynomial::substitute(const std::string& var, const mpz_class& value) const {
    return substitute(var, Polynomial(value));
}

long Polynomial::evaluate_mod(long prime, const std::map<std::string, long>& assignment) const {
    if (prime < 2) throw domain_error("modulus must be at least 2");
    long acc = 0;
    for (const auto& [m, c] : terms_) {
        long t = mod_reduce(c, prime);
        for (const auto& [v, e] : m) {
            if (v == kPrimeVar) {
                t = 0; // p vanishes mod p
                break;
            }
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw context_error("unassigned indeterminate " + v);
            long val = it->second % prime;
            if (val < 0) val += prime;
            t = mulmod(t, powmod(val, e, prime), prime);
        }
        acc = (acc + t) % prime;
    }
    return acc;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int Polynomial::leading_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.begin()->second);
}

const mpz_class& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (leading_sign() < 0) g = -g;
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
    return r;
}

Polynomial Polynomial::divide_by_content(const mpz_class& c) const {
    if (c == 0) throw domain_error("division by zero content");
    Polynomial r;
    for (const auto& [m, k] : terms_) {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw domain_error("content does not divide all coefficients");
        r.terms_.emplace(m, q);
    }
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw domain_error("division by zero polynomial");
    Polynomial q;
    Polynomial r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const mpz_class& dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        auto mq = mono_div(r.leading_monomial(), dm);
        if (!mq) return std::nullopt;
        mpz_class cq, crem;
        mpz_tdiv_qr(cq.get_mpz_t(), crem.get_mpz_t(), r.leading_coeff().get_mpz_t(), dc.get_mpz_t());
        if (crem != 0) return std::nullopt;
        Polynomial t;
        t.terms_.emplace(*mq, cq);
        q += t;
        r -= t * divisor;
    }
    return q;
}

bool Polynomial::divisible_by(const Polynomial& divisor) const {
    return divide_exact(divisor).has_value();
}

Polynomial Polynomial::derivative(const std::string& var) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != var) continue;
            Monomial d = m;
            int e = d[i].second;
            if (e == 1)
                d.erase(d.begin() + static_cast<long>(i));
            else
                d[i].second = e - 1;
            r.add_term(d, c * e);
        }
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& var) const {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(degree_in(var)) + 1);
    for (const auto& [m, c] : terms_) {
        int exp = 0;
        Monomial rest;
        for (const auto& [v, e] : m) {
            if (v == var)
                exp = e;
            else
                rest.emplace_back(v, e);
        }
        coeffs[static_cast<std::size_t>(exp)].add_term(rest, c);
    }
    return coeffs;
}

Polynomial Polynomial::from_coefficients_in(const std::string& var,
                                            const std::vector<Polynomial>& coeffs) {
    Polynomial r;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        r += coeffs[e] * Polynomial::variable(var, static_cast<int>(e));
    return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw format_error(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    Polynomial parse_expr() {
        Polynomial r = parse_term();
        while (true) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r -= parse_term();
            else
                return r;
        }
    }

    Polynomial parse_term() {
        Polynomial r = parse_factor();
        while (eat('*')) r *= parse_factor();
        return r;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        Polynomial base = parse_atom();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            int e = std::stoi(s.substr(start, pos - start));
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Polynomial(mpz_class(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return Polynomial::variable(s.substr(start, pos - start));
        }
        fail("unexpected character");
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    Polynomial r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) os << '*';
        first = false;
        os << v;
        if (e > 1) os << '^' << e;
    }
}

} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? '-' : '+');
        }
        first = false;
        if (m.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) {
                os << a.get_str() << '*';
            }
            append_monomial(os, m);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// gcd

namespace {

mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Pseudo-remainder of univariate (in var) polynomial coefficient vectors:
// lc(B)^(degA-degB+1) * A = Q*B + R.
std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
    const Polynomial& lcb = b.back();
    long da = static_cast<long>(a.size()) - 1;
    long db = static_cast<long>(b.size()) - 1;
    while (da >= db) {
        Polynomial lead = a.back();
        for (long i = 0; i < da; ++i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * lcb;
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= lead * b[static_cast<std::size_t>(i)];
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        da = static_cast<long>(a.size()) - 1;
    }
    return a;
}

Polynomial gcd_many(const std::vector<Polynomial>& polys) {
    Polynomial g;
    for (const auto& f : polys) {
        g = poly_gcd(g, f);
        if (g.is_one()) break;
    }
    return g;
}

} // namespace

namespace {

Polynomial sign_normalized(const Polynomial& a) {
    return a.leading_sign() < 0 ? -a : a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial(int_gcd(a.content(), b.content()));

    // Main variable: the earliest-ranked variable present in either operand.
    std::string var;
    for (const auto& v : a.variables())
        if (var.empty() || var_rank_compare(v, var) < 0) var = v;
    for (const auto& v : b.variables())
        if (var_rank_compare(v, var) < 0) var = v;

    if (!a.contains(var)) return poly_gcd(a, gcd_many(b.coefficients_in(var)));
    if (!b.contains(var)) return poly_gcd(gcd_many(a.coefficients_in(var)), b);

    auto ca = a.coefficients_in(var);
    auto cb = b.coefficients_in(var);
    Polynomial cont_a = gcd_many(ca);
    Polynomial cont_b = gcd_many(cb);
    Polynomial cont = poly_gcd(cont_a, cont_b);
    for (auto& f : ca) f = *f.divide_exact(cont_a);
    for (auto& f : cb) f = *f.divide_exact(cont_b);
    if (ca.size() < cb.size()) std::swap(ca, cb);

    // Subresultant PRS (Cohen, Alg. 3.3.1) on the var-primitive parts.
    Polynomial g(1), h(1);
    Polynomial result;
    while (true) {
        long delta = static_cast<long>(ca.size()) - static_cast<long>(cb.size());
        std::vector<Polynomial> r = pseudo_rem(ca, cb);
        if (r.empty()) {
            result = Polynomial::from_coefficients_in(var, cb).primitive_part();
            break;
        }
        if (r.size() == 1) {
            result = Polynomial(1);
            break;
        }
        ca = cb;
        cb = std::move(r);
        Polynomial divisor = g * h.pow(static_cast<int>(delta));
        for (auto& f : cb) {
            auto q = f.divide_exact(divisor);
            if (!q) throw domain_error("subresultant division failed");
            f = *q;
        }
        g = ca.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            auto q = g.pow(static_cast<int>(delta)).divide_exact(h.pow(static_cast<int>(delta) - 1));
            if (!q) throw domain_error("subresultant h-update failed");
            h = *q;
        }
    }
    return sign_normalized(cont * result);
}

} // namespace schur
