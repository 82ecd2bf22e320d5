#ifndef SCHUR_TESTS_ORACLES_HPP
#define SCHUR_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the production code paths
// they check.

#include <random>

#include "schur/multmat.hpp"
#include "schur/smith.hpp"

namespace schur::test {

// ---------------------------------------------------------------------------
// Naive Smith normal form: first-nonzero pivoting, Bezout row/column
// transforms, then pairwise gcd/lcm fixing of the diagonal. No shared code
// with snf_integer.

inline void bezout_rows(IntMat& M, std::size_t a, std::size_t b, std::size_t col) {
    mpz_class x = M[a][col], y = M[b][col];
    if (y == 0) return;
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_class xs = x / g, ys = y / g;
    for (std::size_t j = 0; j < M[a].size(); ++j) {
        mpz_class ra = u * M[a][j] + v * M[b][j];
        mpz_class rb = -ys * M[a][j] + xs * M[b][j];
        M[a][j] = ra;
        M[b][j] = rb;
    }
}

inline void bezout_cols(IntMat& M, std::size_t a, std::size_t b, std::size_t row) {
    mpz_class x = M[row][a], y = M[row][b];
    if (y == 0) return;
    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_class xs = x / g, ys = y / g;
    for (std::size_t i = 0; i < M.size(); ++i) {
        mpz_class ca = u * M[i][a] + v * M[i][b];
        mpz_class cb = -ys * M[i][a] + xs * M[i][b];
        M[i][a] = ca;
        M[i][b] = cb;
    }
}

inline std::vector<mpz_class> naive_snf(IntMat M) {
    std::size_t m = M.size();
    std::size_t n = m ? M[0].size() : 0;
    std::vector<mpz_class> diag;
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // First nonzero entry in the submatrix, scan order.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (M[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        std::swap(M[pi], M[t]);
        for (std::size_t i = 0; i < m; ++i) std::swap(M[i][pj], M[i][t]);
        bool clean = false;
        while (!clean) {
            for (std::size_t i = t + 1; i < m; ++i) bezout_rows(M, t, i, t);
            for (std::size_t j = t + 1; j < n; ++j) bezout_cols(M, t, j, t);
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (M[i][t] != 0) clean = false;
            for (std::size_t j = t + 1; j < n; ++j)
                if (M[t][j] != 0) clean = false;
        }
        diag.push_back(abs(M[t][t]));
        ++t;
    }
    // Fix the divisibility chain pairwise: (a, b) -> (gcd, lcm).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
                l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

// ---------------------------------------------------------------------------
// Matrix helpers over Z.

inline IntMat mat_mul(const IntMat& A, const IntMat& B) {
    std::size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B[0].size();
    IntMat C(m, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

// Fraction-free determinant (Bareiss).
inline mpz_class mat_det(IntMat M) {
    std::size_t n = M.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Central-extension arithmetic: the ring on b_1..b_n with central t_{ij}, s_i
// and relations [b_i,b_j] = sum a_{ijk} b_k + t_{ij}, p b_i = sum a_{ik} b_k
// + s_i. Elements are normalized after every operation, with carries feeding
// s-tails. This evaluates the consistency relations independently of the
// closed-form row construction.

struct ExtElement {
    std::vector<long long> b;    // generator coordinates
    std::vector<long long> tail; // coordinates over the t/s basis
};

class ExtRing {
  public:
    explicit ExtRing(const Presentation& P) : P_(P), basis_(P.dim()) {
        if (!P.is_concrete()) throw domain_error("extension oracle needs a concrete presentation");
    }

    ExtElement zero() const {
        return {std::vector<long long>(static_cast<std::size_t>(P_.dim()), 0),
                std::vector<long long>(static_cast<std::size_t>(basis_.size()), 0)};
    }

    ExtElement gen(int i) const {
        ExtElement e = zero();
        e.b[static_cast<std::size_t>(i - 1)] = 1;
        return e;
    }

    void normalize(ExtElement& x) const {
        long p = P_.prime();
        int n = P_.dim();
        for (int l = 1; l <= n; ++l) {
            long long c = x.b[static_cast<std::size_t>(l - 1)];
            long long q = c >= 0 ? c / p : -((-c + p - 1) / p);
            if (q == 0) continue;
            x.b[static_cast<std::size_t>(l - 1)] = c - q * p;
            for (int k = l + 1; k <= n; ++k)
                x.b[static_cast<std::size_t>(k - 1)] += q * P_.concrete_p_coefficient(l, k);
            x.tail[static_cast<std::size_t>(basis_.s(l))] += q;
        }
    }

    ExtElement add(const ExtElement& x, const ExtElement& y) const {
        ExtElement r = x;
        for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
        for (std::size_t i = 0; i < r.tail.size(); ++i) r.tail[i] += y.tail[i];
        normalize(r);
        return r;
    }

    ExtElement neg(const ExtElement& x) const {
        ExtElement r = x;
        for (auto& c : r.b) c = -c;
        for (auto& c : r.tail) c = -c;
        normalize(r);
        return r;
    }

    // p * x via the defining rewrites: b-part through p b_k, tail scaled.
    ExtElement pmul(const ExtElement& x) const {
        ExtElement r = zero();
        int n = P_.dim();
        for (int k = 1; k <= n; ++k) {
            long long c = x.b[static_cast<std::size_t>(k - 1)];
            if (c == 0) continue;
            for (int l = k + 1; l <= n; ++l)
                r.b[static_cast<std::size_t>(l - 1)] += c * P_.concrete_p_coefficient(k, l);
            r.tail[static_cast<std::size_t>(basis_.s(k))] += c;
        }
        for (std::size_t i = 0; i < r.tail.size(); ++i)
            r.tail[i] += P_.prime() * x.tail[i];
        normalize(r);
        return r;
    }

    // Bilinear bracket; tails are central and contribute nothing.
    ExtElement bracket(const ExtElement& x, const ExtElement& y) const {
        ExtElement r = zero();
        int n = P_.dim();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                long long f = x.b[static_cast<std::size_t>(i - 1)] * y.b[static_cast<std::size_t>(j - 1)];
                if (f == 0) continue;
                for (int k = 1; k <= n; ++k)
                    r.b[static_cast<std::size_t>(k - 1)] += f * P_.concrete_coefficient(i, j, k);
                auto ref = basis_.t(i, j);
                if (ref.index >= 0) r.tail[static_cast<std::size_t>(ref.index)] += f * ref.sign;
            }
        normalize(r);
        return r;
    }

    bool pure_tail(const ExtElement& x) const {
        for (long long c : x.b)
            if (c != 0) return false;
        return true;
    }

    // Tails of the three consistency relation families.
    ExtElement u_relator(int i) const { return bracket(pmul(gen(i)), gen(i)); }
    ExtElement v_relator(int i, int j) const {
        return add(pmul(bracket(gen(i), gen(j))), neg(bracket(pmul(gen(i)), gen(j))));
    }
    ExtElement w_relator(int i, int j, int h) const {
        ExtElement t1 = bracket(gen(i), bracket(gen(j), gen(h)));
        ExtElement t2 = bracket(gen(h), bracket(gen(i), gen(j)));
        ExtElement t3 = bracket(gen(j), bracket(gen(h), gen(i)));
        return add(add(t1, t2), t3);
    }

    const BasisIndex& basis() const { return basis_; }

  private:
    const Presentation& P_;
    BasisIndex basis_;
};

// ---------------------------------------------------------------------------
// Random generators.

inline Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                              int max_terms = 4, int max_deg = 3, long coeff_range = 9) {
    Polynomial f;
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Polynomial mono(coeff(rng));
        for (const auto& v : vars) {
            int e = deg(rng);
            if (e > 0) mono *= Polynomial::variable(v, e);
        }
        f += mono;
    }
    return f;
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                      int max_terms = 4, int max_deg = 3, long coeff_range = 9) {
    while (true) {
        Polynomial f = random_poly(rng, vars, max_terms, max_deg, coeff_range);
        if (!f.is_zero()) return f;
    }
}

inline PElement random_pelement(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                int max_pdeg = 3) {
    std::uniform_int_distribution<int> pdeg(0, max_pdeg);
    std::uniform_int_distribution<int> kind(0, 3);
    PElement e;
    int d = pdeg(rng);
    for (int i = 0; i <= d; ++i) {
        if (kind(rng) == 0) continue;
        Polynomial num = random_poly(rng, vars, 3, 2, 5);
        if (num.is_zero()) continue;
        if (kind(rng) == 1) {
            Polynomial den = random_nonzero_poly(rng, vars, 2, 1, 3);
            e.set_coeff(i, RationalFunction(num, den));
        } else {
            e.set_coeff(i, RationalFunction(num));
        }
    }
    return e;
}

inline IntMat random_int_matrix(std::mt19937_64& rng, int max_dim = 8, long range = 20) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-range, range);
    int m = dim(rng), n = dim(rng);
    IntMat M(static_cast<std::size_t>(m), std::vector<mpz_class>(static_cast<std::size_t>(n)));
    for (auto& row : M)
        for (auto& e : row) e = entry(rng);
    return M;
}

} // namespace schur::test

#endif
