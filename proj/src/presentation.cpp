#include "schur/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace schur {

// ---------------------------------------------------------------------------
// Primes and primitive roots

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    auto mulmod = [](unsigned long long a, unsigned long long b, unsigned long long m) {
        return static_cast<unsigned long long>(
            (static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](unsigned long long a, unsigned long long e, unsigned long long m) {
        unsigned long long r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    unsigned long long m = static_cast<unsigned long long>(n);
    unsigned long long d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

long least_primitive_root(long prime) {
    if (!is_prime(prime)) throw domain_error(std::to_string(prime) + " is not prime");
    if (prime == 2) return 1;
    long phi = prime - 1;
    std::vector<long> prime_factors;
    long m = phi;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    auto powmod = [&](long a, long e) {
        long r = 1, b = a % prime;
        while (e) {
            if (e & 1) r = (r * b) % prime;
            b = (b * b) % prime;
            e >>= 1;
        }
        return r;
    };
    for (long g = 2; g < prime; ++g) {
        bool primitive = true;
        for (long q : prime_factors) {
            if (powmod(g, phi / q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw domain_error("no primitive root found"); // unreachable for primes
}

// ---------------------------------------------------------------------------
// ConcreteElement

bool ConcreteElement::is_zero() const {
    for (long long c : coords)
        if (c != 0) return false;
    return true;
}

std::string ConcreteElement::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// Generator tokens look like b3 or l3.
std::optional<int> generator_index(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'b' && tok[0] != 'l')) return std::nullopt;
    for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
    return std::stoi(tok.substr(1));
}

// Splits at top-level occurrences of any of the given characters.
std::vector<std::string> split_top_level(const std::string& s, const std::string& seps,
                                         bool keep_sep_signs) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && seps.find(c) != std::string::npos && !(i == 0 && (c == '+' || c == '-'))) {
            parts.push_back(cur);
            cur.clear();
            if (keep_sep_signs && c == '-') cur = "-";
            continue;
        }
        cur += c;
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

void Presentation::validate_polynomial_vars(const Polynomial& poly, int line) const {
    for (const auto& v : poly.variables()) {
        if (v == kPrimeVar)
            throw format_error(line, "coefficient polynomials may not contain p");
        if (v == kRootVar) continue;
        if (std::find(params_.begin(), params_.end(), v) == params_.end())
            throw format_error(line, "undeclared identifier " + v);
    }
}

Presentation Presentation::parse(const std::string& text) {
    Presentation P;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    bool have_dim = false;
    std::set<std::pair<int, int>> stated_brackets;
    std::set<int> stated_pmults;

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto words = split_ws(line);
        const std::string& head = words[0];

        if (head == "name") {
            P.name_ = trim(line.substr(4));
            continue;
        }
        if (head == "dim") {
            if (words.size() != 2) throw format_error(lineno, "expected: dim <n>");
            P.n_ = std::stoi(words[1]);
            if (P.n_ < 1) throw format_error(lineno, "dimension must be at least 1");
            have_dim = true;
            continue;
        }
        if (head == "params") {
            for (std::size_t i = 1; i < words.size(); ++i) {
                const std::string& id = words[i];
                if (!is_ident(id)) throw format_error(lineno, "bad parameter name " + id);
                if (id == kPrimeVar || id == kRootVar)
                    throw format_error(lineno, "parameter may not be named " + id +
                                                   " (reserved)");
                if (generator_index(id))
                    throw format_error(lineno, "parameter " + id +
                                                   " collides with generator names");
                if (std::find(P.params_.begin(), P.params_.end(), id) != P.params_.end())
                    throw format_error(lineno, "duplicate parameter " + id);
                P.params_.push_back(id);
            }
            continue;
        }
        if (head == "require") {
            if (!have_dim) throw format_error(lineno, "dim must precede require");
            Polynomial c;
            try {
                c = Polynomial::parse(trim(line.substr(7)));
            } catch (const format_error& e) {
                throw format_error(lineno, e.what());
            }
            P.validate_polynomial_vars(c, lineno);
            if (c.is_zero()) throw format_error(lineno, "require 0 is unsatisfiable");
            P.constraints_.push_back(c);
            continue;
        }

        // Relation line: "<lhs> = <rhs>".
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw format_error(lineno, "expected a relation or directive, got: " + line);
        if (!have_dim) throw format_error(lineno, "dim must precede relations");
        std::string lhs = trim(line.substr(0, eq));
        std::string rhs = trim(line.substr(eq + 1));
        lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());

        // Parse RHS into generator coefficients.
        std::map<int, Polynomial> coeffs;
        if (rhs != "0") {
            for (const std::string& part0 : split_top_level(rhs, "+-", true)) {
                std::string part = trim(part0);
                if (part.empty()) throw format_error(lineno, "empty term in relation");
                bool neg = false;
                while (!part.empty() && (part[0] == '-' || part[0] == '+')) {
                    if (part[0] == '-') neg = !neg;
                    part = trim(part.substr(1));
                }
                int gen = 0;
                Polynomial coeff(1);
                for (const std::string& f0 : split_top_level(part, "*", false)) {
                    std::string f = trim(f0);
                    if (f.empty()) throw format_error(lineno, "empty factor in term " + part);
                    if (auto gi = generator_index(f)) {
                        if (gen != 0)
                            throw format_error(lineno, "two generators in one term: " + part);
                        gen = *gi;
                        continue;
                    }
                    try {
                        coeff *= Polynomial::parse(f);
                    } catch (const format_error& e) {
                        throw format_error(lineno, e.what());
                    }
                }
                if (gen == 0)
                    throw format_error(lineno, "term without generator: " + part);
                if (gen < 1 || gen > P.n_)
                    throw format_error(lineno, "generator index out of range: " + part);
                if (neg) coeff = -coeff;
                P.validate_polynomial_vars(coeff, lineno);
                auto [it, fresh] = coeffs.emplace(gen, coeff);
                if (!fresh) it->second += coeff;
            }
        }

        if (lhs.size() > 2 && lhs.front() == '[' && lhs.back() == ']') {
            auto comma = lhs.find(',');
            if (comma == std::string::npos) throw format_error(lineno, "bad bracket LHS " + lhs);
            auto gi = generator_index(lhs.substr(1, comma - 1));
            auto gj = generator_index(lhs.substr(comma + 1, lhs.size() - comma - 2));
            if (!gi || !gj) throw format_error(lineno, "bad bracket LHS " + lhs);
            int a = *gi, b = *gj;
            if (a < 1 || a > P.n_ || b < 1 || b > P.n_)
                throw format_error(lineno, "generator index out of range in " + lhs);
            if (a == b) throw format_error(lineno, "bracket [b" + std::to_string(a) +
                                                       ",b" + std::to_string(a) +
                                                       "] is identically zero");
            int i = std::min(a, b), j = std::max(a, b);
            bool flip = a > b;
            if (!stated_brackets.insert({i, j}).second)
                throw format_error(lineno, "duplicate bracket relation for [b" +
                                               std::to_string(i) + ",b" + std::to_string(j) + "]");
            for (const auto& [k, c] : coeffs) {
                if (k <= j)
                    throw format_error(lineno, "bracket coefficient index b" + std::to_string(k) +
                                                   " not above " + std::to_string(j) +
                                                   " (triangular range)");
                if (c.is_zero()) continue;
                P.bracket_[{i, j, k}] = flip ? -c : c;
            }
        } else if ((lhs.size() > 2 && lhs.substr(0, 2) == "p*") || (lhs.size() > 1 && lhs[0] == 'p' && generator_index(lhs.substr(1)))) {
            std::string gen_tok = lhs[1] == '*' ? lhs.substr(2) : lhs.substr(1);
            auto gi = generator_index(gen_tok);
            if (!gi) throw format_error(lineno, "bad p-multiple LHS " + lhs);
            int i = *gi;
            if (i < 1 || i > P.n_)
                throw format_error(lineno, "generator index out of range in " + lhs);
            if (!stated_pmults.insert(i).second)
                throw format_error(lineno, "duplicate p-multiple relation for b" +
                                               std::to_string(i));
            for (const auto& [k, c] : coeffs) {
                if (k <= i)
                    throw format_error(lineno, "p-multiple coefficient index b" +
                                                   std::to_string(k) + " not above " +
                                                   std::to_string(i) + " (triangular range)");
                if (c.is_zero()) continue;
                P.pmult_[{i, k}] = c;
            }
        } else {
            throw format_error(lineno, "unrecognized relation LHS " + lhs);
        }
    }
    if (!have_dim) throw format_error(lineno, "missing dim directive");
    return P;
}

Presentation Presentation::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    Presentation P = parse(os.str());
    if (P.name_.empty()) {
        auto slash = path.find_last_of('/');
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        auto dot = base.find_last_of('.');
        P.name_ = dot == std::string::npos ? base : base.substr(0, dot);
    }
    return P;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Renders a linear combination of generators, paper style.
std::string render_combination(const std::map<int, Polynomial>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs) {
        std::string cs;
        bool neg = false;
        if (c.is_one()) {
            cs = "";
        } else if ((-c).is_one()) {
            cs = "";
            neg = true;
        } else if (c.term_count() == 1) {
            cs = c.to_string();
            if (cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            cs += "*";
        } else {
            cs = "(" + c.to_string() + ")*";
        }
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        os << cs << 'b' << k;
    }
    return os.str();
}

} // namespace

std::string Presentation::print() const {
    std::ostringstream os;
    if (!name_.empty()) os << "name " << name_ << "\n";
    os << "dim " << n_ << "\n";
    if (!params_.empty()) {
        os << "params";
        for (const auto& x : params_) os << ' ' << x;
        os << "\n";
    }
    for (const auto& c : constraints_) os << "require " << c.to_string() << "\n";
    for (const auto& [ik, c] : pmult_) {
        std::map<int, Polynomial> row;
        for (const auto& [ik2, c2] : pmult_)
            if (ik2.first == ik.first) row[ik2.second] = c2;
        if (ik.second != row.begin()->first) continue; // emit each i once
        os << "p*b" << ik.first << " = " << render_combination(row) << "\n";
    }
    std::set<std::pair<int, int>> done;
    for (const auto& [ijk, c] : bracket_) {
        auto [i, j, k] = ijk;
        if (!done.insert({i, j}).second) continue;
        std::map<int, Polynomial> row;
        for (const auto& [ijk2, c2] : bracket_) {
            auto [i2, j2, k2] = ijk2;
            if (i2 == i && j2 == j) row[k2] = c2;
        }
        os << "[b" << i << ",b" << j << "] = " << render_combination(row) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Coefficient access

Polynomial Presentation::coefficient(int i, int j, int k) const {
    if (i == j) return Polynomial();
    int a = std::min(i, j), b = std::max(i, j);
    auto it = bracket_.find({a, b, k});
    if (it == bracket_.end()) return Polynomial();
    return i < j ? it->second : -it->second;
}

Polynomial Presentation::p_coefficient(int i, int k) const {
    auto it = pmult_.find({i, k});
    if (it == pmult_.end()) return Polynomial();
    return it->second;
}

long Presentation::concrete_coefficient(int i, int j, int k) const {
    Polynomial c = coefficient(i, j, k);
    if (c.is_zero()) return 0;
    long v = c.constant_value().get_si();
    return ((v % prime_) + prime_) % prime_;
}

long Presentation::concrete_p_coefficient(int i, int k) const {
    Polynomial c = p_coefficient(i, k);
    if (c.is_zero()) return 0;
    return c.constant_value().get_si();
}

// ---------------------------------------------------------------------------
// Specialisation and evaluation

Presentation Presentation::specialise(const std::map<std::string, Polynomial>& subs) const {
    for (const auto& [key, value] : subs) {
        if (std::find(params_.begin(), params_.end(), key) == params_.end())
            throw context_error("cannot specialise undeclared parameter " + key);
        for (const auto& v : value.variables()) {
            if (v == kRootVar) continue;
            if (v == kPrimeVar) throw context_error("substitution value may not contain p");
            if (subs.count(v))
                throw context_error("substitution value for " + key +
                                    " uses substituted parameter " + v);
            if (std::find(params_.begin(), params_.end(), v) == params_.end())
                throw context_error("substitution value uses undeclared parameter " + v);
        }
    }
    Presentation Q = *this;
    auto apply = [&](Polynomial f) {
        for (const auto& [key, value] : subs) f = f.substitute(key, value);
        return f;
    };
    for (auto it = Q.bracket_.begin(); it != Q.bracket_.end();) {
        it->second = apply(it->second);
        it = it->second.is_zero() ? Q.bracket_.erase(it) : std::next(it);
    }
    for (auto it = Q.pmult_.begin(); it != Q.pmult_.end();) {
        it->second = apply(it->second);
        it = it->second.is_zero() ? Q.pmult_.erase(it) : std::next(it);
    }
    std::vector<Polynomial> kept;
    for (const auto& c : constraints_) {
        Polynomial cc = apply(c);
        if (cc.is_zero()) {
            Q.infeasible_ = true;
            kept.push_back(cc);
        } else if (cc.is_constant()) {
            // Nonzero integer constant: discharged. A nonzero constant can
            // still vanish mod a particular prime; that is the verifier's
            // concern, not a family condition.
            continue;
        } else {
            kept.push_back(cc);
        }
    }
    Q.constraints_ = kept;
    std::vector<std::string> remaining;
    for (const auto& x : params_)
        if (!subs.count(x)) remaining.push_back(x);
    Q.params_ = remaining;
    return Q;
}

Presentation Presentation::evaluate_concrete(long prime,
                                             const std::map<std::string, long>& assignment) const {
    if (mode_ == Mode::concrete) throw domain_error("presentation is already concrete");
    if (!is_prime(prime)) throw domain_error(std::to_string(prime) + " is not prime");
    for (const auto& [key, value] : assignment) {
        (void)value;
        if (std::find(params_.begin(), params_.end(), key) == params_.end())
            throw context_error("unknown parameter " + key);
    }
    for (const auto& x : params_)
        if (!assignment.count(x)) throw context_error("parameter " + x + " not assigned");

    Presentation Q = *this;
    Q.mode_ = Mode::concrete;
    Q.prime_ = prime;
    Q.root_ = least_primitive_root(prime);
    Q.assignment_ = assignment;
    std::map<std::string, long> full = assignment;
    full[kRootVar] = Q.root_;

    for (auto it = Q.bracket_.begin(); it != Q.bracket_.end();) {
        long v = it->second.evaluate_mod(prime, full);
        if (v == 0) {
            it = Q.bracket_.erase(it);
        } else {
            it->second = Polynomial(v);
            ++it;
        }
    }
    for (auto it = Q.pmult_.begin(); it != Q.pmult_.end();) {
        long v = it->second.evaluate_mod(prime, full);
        if (v == 0) {
            it = Q.pmult_.erase(it);
        } else {
            it->second = Polynomial(v);
            ++it;
        }
    }
    for (const auto& c : constraints_) {
        if (c.evaluate_mod(prime, full) == 0) Q.violated_ = true;
    }
    Q.params_.clear();
    return Q;
}

// ---------------------------------------------------------------------------
// Concrete arithmetic

ConcreteElement Presentation::normal_form(std::vector<long long> v) const {
    if (!is_concrete()) throw domain_error("normal form requires a concrete presentation");
    if (static_cast<int>(v.size()) != n_) throw domain_error("coordinate vector has wrong length");
    for (int i = 1; i <= n_; ++i) {
        long long c = v[static_cast<std::size_t>(i - 1)];
        long long q = c >= 0 ? c / prime_ : -((-c + prime_ - 1) / prime_);
        long long r = c - q * prime_;
        v[static_cast<std::size_t>(i - 1)] = r;
        if (q != 0) {
            for (const auto& [ik, coeff] : pmult_) {
                if (ik.first != i) continue;
                v[static_cast<std::size_t>(ik.second - 1)] += q * coeff.constant_value().get_si();
            }
        }
    }
    return ConcreteElement{std::move(v)};
}

ConcreteElement Presentation::generator(int i) const {
    std::vector<long long> v(static_cast<std::size_t>(n_), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return ConcreteElement{std::move(v)};
}

ConcreteElement Presentation::add(const ConcreteElement& a, const ConcreteElement& b) const {
    std::vector<long long> v(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        v[static_cast<std::size_t>(i)] =
            a.coords[static_cast<std::size_t>(i)] + b.coords[static_cast<std::size_t>(i)];
    return normal_form(std::move(v));
}

ConcreteElement Presentation::scalar_mul(long long c, const ConcreteElement& a) const {
    std::vector<long long> v(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = c * a.coords[static_cast<std::size_t>(i)];
    return normal_form(std::move(v));
}

ConcreteElement Presentation::bracket(const ConcreteElement& a, const ConcreteElement& b) const {
    if (!is_concrete()) throw domain_error("bracket requires a concrete presentation");
    std::vector<long long> v(static_cast<std::size_t>(n_), 0);
    for (const auto& [ijk, coeff] : bracket_) {
        auto [i, j, k] = ijk;
        long long ai = a.coords[static_cast<std::size_t>(i - 1)];
        long long aj = a.coords[static_cast<std::size_t>(j - 1)];
        long long bi = b.coords[static_cast<std::size_t>(i - 1)];
        long long bj = b.coords[static_cast<std::size_t>(j - 1)];
        long long factor = (ai * bj - aj * bi) % prime_;
        v[static_cast<std::size_t>(k - 1)] += factor * coeff.constant_value().get_si();
    }
    return normal_form(std::move(v));
}

// ---------------------------------------------------------------------------
// Consistency

ConsistencyReport Presentation::check_consistency() const {
    if (!is_concrete()) {
        return check_consistency_sampled({5, 7}, 20, 12345);
    }
    ConsistencyReport rep;
    auto record = [&](const std::string& kind, int i, int j, int h, const std::string& rel,
                      const ConcreteElement& left, const ConcreteElement& right) {
        rep.ok = false;
        rep.violations.push_back({kind, i, j, h, rel, left.to_string(), right.to_string()});
    };

    std::vector<ConcreteElement> pb;
    pb.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        std::vector<long long> v(static_cast<std::size_t>(n_), 0);
        v[static_cast<std::size_t>(i - 1)] = prime_;
        pb.push_back(normal_form(std::move(v)));
    }

    for (int i = 1; i <= n_; ++i) {
        ConcreteElement left = bracket(pb[static_cast<std::size_t>(i - 1)], generator(i));
        if (!left.is_zero())
            record("p-compat", i, i, 0,
                   "[p*b" + std::to_string(i) + ", b" + std::to_string(i) + "] = 0", left,
                   ConcreteElement{std::vector<long long>(static_cast<std::size_t>(n_), 0)});
    }
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (i == j) continue;
            ConcreteElement left = bracket(pb[static_cast<std::size_t>(i - 1)], generator(j));
            ConcreteElement right = scalar_mul(prime_, bracket(generator(i), generator(j)));
            if (!(left == right))
                record("p-compat", i, j, 0,
                       "[p*b" + std::to_string(i) + ", b" + std::to_string(j) + "] = p*[b" +
                           std::to_string(i) + ", b" + std::to_string(j) + "]",
                       left, right);
        }
    }
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            for (int h = j + 1; h <= n_; ++h) {
                ConcreteElement t1 = bracket(generator(i), bracket(generator(j), generator(h)));
                ConcreteElement t2 = bracket(generator(h), bracket(generator(i), generator(j)));
                ConcreteElement t3 = bracket(generator(j), bracket(generator(h), generator(i)));
                ConcreteElement sum = add(add(t1, t2), t3);
                if (!sum.is_zero())
                    record("jacobi", i, j, h,
                           "[b" + std::to_string(i) + ",[b" + std::to_string(j) + ",b" +
                               std::to_string(h) + "]] + [b" + std::to_string(h) + ",[b" +
                               std::to_string(i) + ",b" + std::to_string(j) + "]] + [b" +
                               std::to_string(j) + ",[b" + std::to_string(h) + ",b" +
                               std::to_string(i) + "]] = 0",
                           sum,
                           ConcreteElement{std::vector<long long>(static_cast<std::size_t>(n_), 0)});
            }

    // Alternating on a few pseudo-random elements; holds by construction but
    // cheap to confirm on data.
    std::mt19937_64 rng(0xa17e * static_cast<unsigned long>(n_) + static_cast<unsigned long>(prime_));
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<long long> v(static_cast<std::size_t>(n_));
        for (auto& c : v) c = static_cast<long long>(rng() % static_cast<unsigned long>(prime_));
        ConcreteElement x{v};
        ConcreteElement br = bracket(x, x);
        if (!br.is_zero())
            record("alternating", 0, 0, 0, "[x, x] = 0 for x = " + x.to_string(), br,
                   ConcreteElement{std::vector<long long>(static_cast<std::size_t>(n_), 0)});
    }
    return rep;
}

ConsistencyReport Presentation::check_consistency_sampled(const std::vector<long>& primes,
                                                          int samples_per_prime,
                                                          unsigned long seed) const {
    ConsistencyReport rep;
    rep.probabilistic = true;
    std::mt19937_64 rng(seed);
    for (long p : primes) {
        int samples = params_.empty() ? 1 : samples_per_prime;
        for (int s = 0; s < samples; ++s) {
            std::map<std::string, long> assign;
            for (const auto& x : params_)
                assign[x] = static_cast<long>(rng() % static_cast<unsigned long>(p));
            Presentation C = evaluate_concrete(p, assign);
            if (C.constraint_violated()) continue;
            ConsistencyReport sub = C.check_consistency();
            if (!sub.ok) {
                rep.ok = false;
                for (auto& v : sub.violations) {
                    v.relation += " (p=" + std::to_string(p) + ")";
                    rep.violations.push_back(v);
                }
            }
        }
    }
    return rep;
}

bool Presentation::same_structure(const Presentation& o) const {
    return n_ == o.n_ && params_ == o.params_ && bracket_ == o.bracket_ && pmult_ == o.pmult_ &&
           constraints_ == o.constraints_;
}

} // namespace schur
