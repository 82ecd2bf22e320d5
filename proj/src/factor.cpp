#include "schur/factor.hpp"

#include <algorithm>
#include <map>

namespace schur {

Polynomial Factorization::product() const {
    Polynomial r(content);
    if (unit < 0) r = -r;
    for (const auto& [f, mult] : factors) r *= f.pow(mult);
    return r;
}

namespace {

constexpr std::size_t kMaxDivisors = 4096;       // per evaluation point
constexpr std::size_t kMaxCandidates = 50000;    // per Kronecker degree
constexpr int kMaxKroneckerDegree = 8;

// All positive divisors of |n|, or nullopt when n is too hard to factor or
// has too many divisors for the search budget.
std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) return std::nullopt;
    std::map<mpz_class, int> primes;
    for (long d = 2; d <= 1000000L && mpz_class(d) * d <= n; ++d) {
        while (n % d == 0) {
            ++primes[d];
            n /= d;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) == 0) return std::nullopt; // composite leftover
        ++primes[n];
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [prime, e] : primes) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= prime;
            for (std::size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > kMaxDivisors) return std::nullopt;
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

mpz_class eval_at(const Polynomial& f, const std::string& var, const mpz_class& x) {
    auto coeffs = f.coefficients_in(var);
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->constant_value();
    return acc;
}

// Newton interpolation through (points[i], values[i]); nullopt unless the
// result has integer coefficients.
std::optional<Polynomial> interpolate_integer(const std::string& var,
                                              const std::vector<mpz_class>& points,
                                              const std::vector<mpz_class>& values) {
    std::size_t n = points.size();
    std::vector<mpq_class> diffs(n);
    for (std::size_t i = 0; i < n; ++i) diffs[i] = mpq_class(values[i]);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            diffs[i] = (diffs[i] - diffs[i - 1]) / mpq_class(points[i] - points[i - level]);
            if (i == level) break;
        }
    // Expand Newton form; coefficients must come out integral.
    std::vector<mpq_class> poly{diffs[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        poly.insert(poly.begin(), mpq_class(0));
        for (std::size_t j = 0; j + 1 < poly.size(); ++j)
            poly[j] -= mpq_class(points[i]) * poly[j + 1];
        poly[0] += diffs[i];
    }
    Polynomial r;
    for (std::size_t e = 0; e < poly.size(); ++e) {
        poly[e].canonicalize();
        if (poly[e].get_den() != 1) return std::nullopt;
        r += Polynomial(mpz_class(poly[e].get_num())) * Polynomial::variable(var, static_cast<int>(e));
    }
    return r;
}

void add_factor(std::vector<std::pair<Polynomial, int>>& out, const Polynomial& f, int mult) {
    for (auto& [g, m] : out) {
        if (g == f) {
            m += mult;
            return;
        }
    }
    out.emplace_back(f, mult);
}

// Full factorization of a primitive univariate polynomial with positive
// leading coefficient and nonzero trailing coefficient. Returns false when
// the Kronecker search ran out of budget (factors then holds f itself).
bool factor_univariate(Polynomial f, const std::string& var,
                       std::vector<std::pair<Polynomial, int>>& out, int mult);

bool kronecker_split(const Polynomial& f, const std::string& var,
                     std::vector<std::pair<Polynomial, int>>& out, int mult) {
    int deg = f.degree_in(var);
    for (int d = 2; d <= deg / 2; ++d) {
        std::vector<mpz_class> points;
        std::vector<std::vector<mpz_class>> choices;
        for (int i = 0; i <= d; ++i) {
            long x = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); // 0, 1, -1, 2, -2, ...
            mpz_class val = eval_at(f, var, mpz_class(x));
            auto divs = positive_divisors(val);
            if (!divs) return false;
            points.emplace_back(x);
            // Signed divisors, except the first point which is fixed positive
            // to break the g / -g symmetry.
            std::vector<mpz_class> opts;
            for (const auto& dv : *divs) {
                opts.push_back(dv);
                if (i > 0) opts.push_back(-dv);
            }
            choices.push_back(std::move(opts));
        }
        double total = 1;
        for (const auto& c : choices) total *= static_cast<double>(c.size());
        if (total > static_cast<double>(kMaxCandidates)) return false;

        std::vector<std::size_t> idx(choices.size(), 0);
        std::vector<mpz_class> values(choices.size());
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i) values[i] = choices[i][idx[i]];
            auto cand = interpolate_integer(var, points, values);
            if (cand && cand->degree_in(var) >= 1 && !cand->is_constant()) {
                Polynomial g = cand->primitive_part();
                if (g.degree_in(var) >= 1 && f.divisible_by(g)) {
                    Polynomial rest = *f.divide_exact(g);
                    bool ok = factor_univariate(g, var, out, mult);
                    ok = factor_univariate(rest.primitive_part(), var, out, mult) && ok;
                    return ok;
                }
            }
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    add_factor(out, f, mult); // irreducible: all candidate degrees exhausted
    return true;
}

bool factor_univariate(Polynomial f, const std::string& var,
                       std::vector<std::pair<Polynomial, int>>& out, int mult) {
    if (f.is_constant()) return true;
    // Rational roots give the linear factors: a/b with b | lc and a | tc.
    auto coeffs = f.coefficients_in(var);
    bool changed = true;
    while (changed && f.degree_in(var) >= 1) {
        changed = false;
        coeffs = f.coefficients_in(var);
        mpz_class lc = coeffs.back().constant_value();
        mpz_class tc = coeffs.front().constant_value();
        auto lds = positive_divisors(lc);
        auto tds = positive_divisors(tc);
        if (!lds || !tds) {
            add_factor(out, f, mult);
            return false;
        }
        for (const auto& b : *lds) {
            for (const auto& a : *tds) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                if (g != 1) continue;
                for (int sign : {1, -1}) {
                    Polynomial lin = Polynomial(b) * Polynomial::variable(var) - Polynomial(sign * a);
                    while (f.degree_in(var) >= 1 && f.divisible_by(lin)) {
                        add_factor(out, lin, mult);
                        f = *f.divide_exact(lin);
                        changed = true;
                    }
                }
            }
            if (f.degree_in(var) == 0) break;
        }
    }
    f = f.primitive_part();
    if (f.is_constant()) return true;
    int deg = f.degree_in(var);
    if (deg <= 3) {
        // No rational root and degree <= 3: irreducible over Z.
        add_factor(out, f, mult);
        return true;
    }
    if (deg > kMaxKroneckerDegree) {
        add_factor(out, f, mult);
        return false;
    }
    return kronecker_split(f, var, out, mult);
}

// Recursive multivariate pipeline; returns false when some piece is left
// possibly reducible.
bool factor_rec(Polynomial f, int mult, std::vector<std::pair<Polynomial, int>>& out) {
    f = f.primitive_part();
    if (f.is_constant()) return true;
    auto vars = f.variables();
    if (vars.size() == 1) return factor_univariate(f, *vars.begin(), out, mult);

    // Content with respect to each variable splits off coefficient gcds.
    for (const auto& v : vars) {
        auto coeffs = f.coefficients_in(v);
        Polynomial cont;
        for (const auto& c : coeffs) {
            cont = poly_gcd(cont, c);
            if (cont.is_one()) break;
        }
        if (!cont.is_constant()) {
            bool ok = factor_rec(cont, mult, out);
            return factor_rec(*f.divide_exact(cont), mult, out) && ok;
        }
    }
    // Linear in some variable with coprime coefficients: irreducible.
    for (const auto& v : vars) {
        if (f.degree_in(v) != 1) continue;
        add_factor(out, f, mult);
        return true;
    }
    // Square-free split.
    for (const auto& v : vars) {
        Polynomial d = f.derivative(v);
        if (d.is_zero()) continue;
        Polynomial g = poly_gcd(f, d);
        if (g.is_constant()) continue;
        bool ok = factor_rec(g, mult, out);
        return factor_rec(*f.divide_exact(g), mult, out) && ok;
    }
    add_factor(out, f, mult);
    return false; // genuinely multivariate, degree >= 2 in every variable
}

} // namespace

Factorization factor_best_effort(const Polynomial& a) {
    if (a.is_zero()) throw domain_error("cannot factor the zero polynomial");
    if (a.contains(kPrimeVar)) throw domain_error("factorization input must be p-free");

    Factorization res;
    res.unit = a.leading_sign();
    res.content = a.content();
    Polynomial f = a.primitive_part();

    // Monomial part.
    for (const auto& v : f.variables()) {
        int e = f.degree_in(v);
        for (const auto& [m, c] : f.terms()) {
            int ev = 0;
            for (const auto& [name, exp] : m)
                if (name == v) ev = exp;
            e = std::min(e, ev);
            if (e == 0) break;
        }
        if (e > 0) {
            add_factor(res.factors, Polynomial::variable(v), e);
            f = *f.divide_exact(Polynomial::variable(v, e));
        }
    }
    res.complete = factor_rec(f, 1, res.factors);

    // Deterministic order: by polynomial comparison.
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return res;
}

} // namespace schur
