#include "schur/smith.hpp"

#include <algorithm>

namespace schur {

// ---------------------------------------------------------------------------
// Integer Smith normal form

namespace {

void add_row_multiple(IntMat& M, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}

void add_col_multiple(IntMat& M, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < M.size(); ++i) M[i][dst] -= q * M[i][src];
}

} // namespace

SnfInteger snf_integer(IntMat M, bool want_transforms) {
    SnfInteger out;
    std::size_t m = M.size();
    std::size_t n = m ? M[0].size() : 0;
    if (want_transforms) {
        out.U.assign(m, std::vector<mpz_class>(m, 0));
        out.V.assign(n, std::vector<mpz_class>(n, 0));
        for (std::size_t i = 0; i < m; ++i) out.U[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) out.V[j][j] = 1;
    }
    std::size_t bound = std::min(m, n);
    for (std::size_t t = 0; t < bound; ++t) {
        while (true) {
            // Minimal nonzero absolute value in the trailing submatrix.
            std::size_t bi = t, bj = t;
            bool found = false;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (M[i][j] == 0) continue;
                    if (!found || mpz_cmpabs(M[i][j].get_mpz_t(), M[bi][bj].get_mpz_t()) < 0) {
                        bi = i;
                        bj = j;
                        found = true;
                    }
                }
            if (!found) {
                t = bound; // submatrix is zero; done
                break;
            }
            if (bi != t) {
                std::swap(M[bi], M[t]);
                if (want_transforms) std::swap(out.U[bi], out.U[t]);
            }
            if (bj != t) {
                for (std::size_t i = 0; i < m; ++i) std::swap(M[i][bj], M[i][t]);
                if (want_transforms)
                    for (std::size_t j = 0; j < n; ++j) std::swap(out.V[bj][j], out.V[t][j]);
            }
            bool reduced = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (M[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), M[i][t].get_mpz_t(), M[t][t].get_mpz_t());
                add_row_multiple(M, i, t, q);
                if (want_transforms) add_row_multiple(out.U, i, t, q);
                if (M[i][t] != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (M[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), M[t][j].get_mpz_t(), M[t][t].get_mpz_t());
                add_col_multiple(M, j, t, q);
                if (want_transforms) add_col_multiple(out.V, j, t, q);
                if (M[t][j] != 0) reduced = false;
            }
            if (!reduced) continue;
            // Divisibility of the trailing block by the pivot.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (M[i][j] % M[t][t] != 0) {
                        // Fold that row into the pivot row and restart.
                        for (std::size_t k = 0; k < n; ++k) M[t][k] += M[i][k];
                        if (want_transforms)
                            for (std::size_t k = 0; k < m; ++k) out.U[t][k] += out.U[i][k];
                        divides_all = false;
                        break;
                    }
            if (!divides_all) continue;
            if (M[t][t] < 0) {
                for (std::size_t j = 0; j < n; ++j) M[t][j] = -M[t][j];
                if (want_transforms)
                    for (std::size_t k = 0; k < m; ++k) out.U[t][k] = -out.U[t][k];
            }
            break;
        }
        if (t == bound) break;
        out.divisors.push_back(M[t][t]);
    }
    out.rank = static_cast<int>(out.divisors.size());
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic Smith normal form over Q[p] localized at (p)

namespace {

struct Eliminator {
    std::vector<std::vector<PElement>> mat;
    const Budget& budget;
    PivotStrategy strategy;
    SchurResult& out;
    long steps = 0;

    Eliminator(const RelationMatrix& M, const Budget& b, PivotStrategy s, SchurResult& o)
        : budget(b), strategy(s), out(o) {
        mat.reserve(M.rows.size());
        for (const auto& row : M.rows) mat.push_back(row.entries);
    }

    bool exceeded(const std::string& cap) {
        out.budget_exceeded = true;
        out.exceeded_cap = cap;
        return false;
    }

    bool check_entry(const PElement& e) {
        if (e.max_poly_degree() > budget.max_degree) return exceeded("degree");
        if (static_cast<long>(e.max_coeff_digits()) > budget.max_digits)
            return exceeded("digits");
        return true;
    }

    // Guard: every element we scale by must be a pseudo-unit. Decomposition
    // already enforces a nonzero constant coefficient; this re-checks it at
    // the point of use.
    static void pseudo_unit_guard(const PseudoUnit& u) {
        if (u.value.constant_coeff().is_zero())
            throw std::logic_error("elimination attempted to divide by a non-pseudo-unit");
    }

    void record(const PseudoUnit& u) {
        Polynomial zp = u.zero_part();
        mpz_class cont = u.value.constant_coeff().num().content();
        if (cont < 0) cont = -cont;
        if (cont != 1 && cont != 0) record_content(cont);
        if (zp.is_constant()) return; // trivial as a function of the parameters
        for (const auto& f : out.ledger)
            if (f == zp) return;
        out.ledger.push_back(zp);
        out.pseudo_units.push_back(u);
    }

    void record_content(const mpz_class& c) {
        for (const auto& k : out.contents)
            if (k == c) return;
        out.contents.push_back(c);
    }

    // row_dst := u*row_dst - p^(k-l)*v*row_src entrywise, fraction-free.
    bool combine_row(std::size_t dst, std::size_t src, const PElement& u, const PElement& shifted_v,
                     std::size_t c0) {
        for (std::size_t j = c0; j < mat[dst].size(); ++j) {
            if (mat[dst][j].is_zero() && mat[src][j].is_zero()) continue;
            if (mat[dst][j].max_poly_degree() + u.max_poly_degree() > budget.max_degree ||
                mat[src][j].max_poly_degree() + shifted_v.max_poly_degree() > budget.max_degree)
                return exceeded("degree");
            mat[dst][j] = u * mat[dst][j] - shifted_v * mat[src][j];
            if (!check_entry(mat[dst][j])) return false;
        }
        if (++steps > budget.max_steps) return exceeded("steps");
        reduce_row_content(dst, c0);
        return true;
    }

    bool combine_col(std::size_t dst, std::size_t src, const PElement& u, const PElement& shifted_v,
                     std::size_t r0) {
        for (std::size_t i = r0; i < mat.size(); ++i) {
            if (mat[i][dst].is_zero() && mat[i][src].is_zero()) continue;
            if (mat[i][dst].max_poly_degree() + u.max_poly_degree() > budget.max_degree ||
                mat[i][src].max_poly_degree() + shifted_v.max_poly_degree() > budget.max_degree)
                return exceeded("degree");
            mat[i][dst] = u * mat[i][dst] - shifted_v * mat[i][src];
            if (!check_entry(mat[i][dst])) return false;
        }
        if (++steps > budget.max_steps) return exceeded("steps");
        return true;
    }

    // Divides a row by the gcd of its integer contents; the divided content
    // is recorded because it matters modulo primes dividing it.
    void reduce_row_content(std::size_t i, std::size_t c0) {
        mpz_class g = 0;
        for (std::size_t j = c0; j < mat[i].size(); ++j) {
            for (const auto& c : mat[i][j].coeffs()) {
                mpz_class cc = c.num().content();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
            }
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (std::size_t j = c0; j < mat[i].size(); ++j) {
            PElement e;
            for (int d = 0; d <= mat[i][j].degree(); ++d) {
                const RationalFunction& c = mat[i][j].coeff(d);
                if (!c.is_zero())
                    e.set_coeff(d, RationalFunction(c.num().divide_by_content(g), c.den()));
            }
            mat[i][j] = e;
        }
        record_content(g);
    }

    void run() {
        std::size_t R = mat.size();
        std::size_t C = R ? mat[0].size() : 0;
        std::size_t r0 = 0, c0 = 0;
        while (r0 < R && c0 < C) {
            // Pivot: minimal p-valuation, tie-broken per strategy.
            bool found = false;
            std::size_t pi = 0, pj = 0;
            long best_val = 0, best_monos = 0, best_deg = 0;
            for (std::size_t i = r0; i < R; ++i)
                for (std::size_t j = c0; j < C; ++j) {
                    const PElement& e = mat[i][j];
                    if (e.is_zero()) continue;
                    long val = e.valuation();
                    long monos = 0, deg = 0;
                    if (strategy == PivotStrategy::smallest_unit) {
                        for (int d = val; d <= e.degree(); ++d) {
                            monos += static_cast<long>(e.coeff(d).num().term_count());
                            deg = std::max(deg, static_cast<long>(e.coeff(d).num().total_degree()));
                        }
                    }
                    bool better = !found || val < best_val ||
                                  (val == best_val && strategy == PivotStrategy::smallest_unit &&
                                   (monos < best_monos || (monos == best_monos && deg < best_deg)));
                    if (better) {
                        found = true;
                        pi = i;
                        pj = j;
                        best_val = val;
                        best_monos = monos;
                        best_deg = deg;
                    }
                }
            if (!found) break;
            std::swap(mat[pi], mat[r0]);
            for (std::size_t i = 0; i < R; ++i) std::swap(mat[i][pj], mat[i][c0]);

            auto [l, u] = decompose_pseudo_unit(mat[r0][c0]);
            pseudo_unit_guard(u);
            record(u);
            out.exponents.push_back(l);

            bool ok = true;
            for (std::size_t i = r0 + 1; i < R && ok; ++i) {
                if (mat[i][c0].is_zero()) continue;
                auto [k, v] = decompose_pseudo_unit(mat[i][c0]);
                ok = combine_row(i, r0, u.value, v.value.shifted_up(k - l), c0);
                if (ok && !mat[i][c0].is_zero())
                    throw std::logic_error("column entry survived elimination");
            }
            for (std::size_t j = c0 + 1; j < C && ok; ++j) {
                if (mat[r0][j].is_zero()) continue;
                auto [k, v] = decompose_pseudo_unit(mat[r0][j]);
                ok = combine_col(j, c0, u.value, v.value.shifted_up(k - l), r0);
                if (ok && !mat[r0][j].is_zero())
                    throw std::logic_error("row entry survived elimination");
            }
            if (!ok) return;
            ++r0;
            ++c0;
        }
    }
};

} // namespace

bool SchurResult::content_safe_at(long prime) const {
    for (const auto& c : contents)
        if (c % prime == 0) return false;
    return true;
}

SchurResult snf_symbolic(const RelationMatrix& M, const Budget& budget, PivotStrategy strategy) {
    SchurResult out;
    out.symbolic = true;
    if (M.residual) {
        out.valid = false;
        out.diagnostic = "presentation is not a consistent Lie p-ring";
        return out;
    }
    if (!M.symbolic_defect.empty()) {
        out.valid = false;
        out.diagnostic = M.symbolic_defect;
        return out;
    }
    Eliminator e(M, budget, strategy, out);
    e.run();
    // The divisor exponents come out nondecreasing because pivots have
    // minimal valuation.
    for (std::size_t i = 1; i < out.exponents.size(); ++i)
        if (out.exponents[i] < out.exponents[i - 1])
            throw std::logic_error("divisor chain out of order");
    out.free_rank = M.ncols() - static_cast<int>(out.exponents.size());
    if (out.budget_exceeded) {
        out.diagnostic = "budget exceeded: " + out.exceeded_cap + " cap reached";
        // Exponents collected so far are correct divisors of the full chain
        // prefix; free rank is unknown.
        out.free_rank = -1;
    }
    std::erase_if(out.exponents, [](int l) { return l == 0; });
    return out;
}

SchurResult schur_from_divisors(const std::vector<mpz_class>& chain, long prime, int free_rank) {
    SchurResult out;
    out.symbolic = false;
    out.free_rank = free_rank;
    for (const auto& d : chain) {
        if (d == 1) continue;
        mpz_class r = d;
        while (r % prime == 0) r /= prime;
        if (r != 1) {
            out.valid = false;
            out.diagnostic = "presentation is not a consistent Lie p-ring (divisor " +
                             d.get_str() + " is not a power of " + std::to_string(prime) + ")";
        }
        out.divisors.push_back(d);
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

SchurResult schur_from_divisors(const std::vector<int>& exponent_chain, int free_rank) {
    SchurResult out;
    out.symbolic = true;
    out.free_rank = free_rank;
    for (int e : exponent_chain)
        if (e > 0) out.exponents.push_back(e);
    std::sort(out.exponents.begin(), out.exponents.end());
    return out;
}

SchurResult schur_multiplier_concrete(const Presentation& P) {
    if (!P.is_concrete()) throw domain_error("concrete pipeline requires a concrete presentation");
    RelationMatrix M = build_matrix(P);
    SnfInteger snf = snf_integer(lower_concrete(M, P.prime()));
    SchurResult out = schur_from_divisors(snf.divisors, P.prime(), M.ncols() - snf.rank);
    if (M.residual) {
        out.valid = false;
        out.diagnostic = "presentation is not a consistent Lie p-ring";
    }
    return out;
}

} // namespace schur
