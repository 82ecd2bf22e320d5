#include "schur/multmat.hpp"

namespace schur {

BasisIndex::BasisIndex(int n) : n_(n) {
    if (n < 1) throw domain_error("basis dimension must be at least 1");
}

BasisIndex::TRef BasisIndex::t(int i, int j) const {
    if (i == j) return {-1, 0};
    int a = std::min(i, j), b = std::max(i, j);
    // t_{ab} with a<b sits at position sum_{r<a}(n-r) + (b-a-1), rows of the
    // strictly upper triangle flattened.
    int index = (a - 1) * n_ - (a - 1) * a / 2 + (b - a - 1);
    return {index, i < j ? 1 : -1};
}

int BasisIndex::s(int i) const { return n_ * (n_ - 1) / 2 + (i - 1); }

std::string BasisIndex::label(int index) const {
    int nt = n_ * (n_ - 1) / 2;
    if (index >= nt) return "s[" + std::to_string(index - nt + 1) + "]";
    int i = 1;
    while (index >= n_ - i) {
        index -= n_ - i;
        ++i;
    }
    return "t[" + std::to_string(i) + "," + std::to_string(i + index + 1) + "]";
}

bool RelationRow::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

// Collects an integer generator part left over by a consistency relation of a
// concrete presentation, folding carries into s-tails. Returns false when a
// nonzero residue survives (inconsistent input).
bool collect_concrete(const Presentation& P, std::vector<long long> c,
                      std::vector<PElement>& row, const BasisIndex& basis) {
    long prime = P.prime();
    int n = P.dim();
    bool ok = true;
    for (int l = 1; l <= n; ++l) {
        long long cl = c[static_cast<std::size_t>(l - 1)];
        long long q = cl >= 0 ? cl / prime : -((-cl + prime - 1) / prime);
        long long r = cl - q * prime;
        if (r != 0) ok = false; // leftover generator component
        if (q != 0) {
            for (int k = l + 1; k <= n; ++k)
                c[static_cast<std::size_t>(k - 1)] += q * P.concrete_p_coefficient(l, k);
            row[static_cast<std::size_t>(basis.s(l))] += PElement(static_cast<long>(q));
        }
    }
    return ok;
}

struct MatrixBuilder {
    const Presentation& P;
    BasisIndex basis;
    RelationMatrix out;

    explicit MatrixBuilder(const Presentation& pres)
        : P(pres), basis(pres.dim()), out{basis, {}, false, ""} {}

    void add_t(std::vector<PElement>& row, int i, int j, const PElement& c) {
        auto ref = basis.t(i, j);
        if (ref.index < 0 || c.is_zero()) return;
        row[static_cast<std::size_t>(ref.index)] += ref.sign > 0 ? c : -c;
    }

    void add_s(std::vector<PElement>& row, int k, const PElement& c) {
        if (c.is_zero()) return;
        row[static_cast<std::size_t>(basis.s(k))] += c;
    }

    // The generator part of a consistency relation need not vanish literally;
    // it is a multiple of the relations and collects into s-tails. Symbolic
    // families must have it identically zero (values would decide carries).
    void fold_generator_part(const std::string& label, const std::vector<Polynomial>& c,
                             std::vector<PElement>& row) {
        bool all_zero = true;
        for (const auto& f : c)
            if (!f.is_zero()) all_zero = false;
        if (all_zero) return;
        if (!P.is_concrete()) {
            if (out.symbolic_defect.empty())
                out.symbolic_defect =
                    "consistency relation " + label +
                    " has a non-vanishing generator part; the symbolic family matrix is undefined";
            return;
        }
        std::vector<long long> ci(c.size());
        for (std::size_t l = 0; l < c.size(); ++l)
            ci[l] = c[l].is_zero() ? 0 : c[l].constant_value().get_si();
        if (!collect_concrete(P, std::move(ci), row, basis)) out.residual = true;
    }

    void build() {
        int n = P.dim();
        // u_i = [p b_i, b_i]
        for (int i = 1; i <= n; ++i) {
            std::vector<PElement> row(static_cast<std::size_t>(basis.size()));
            std::vector<Polynomial> c(static_cast<std::size_t>(n));
            for (int k = 1; k <= n; ++k) {
                Polynomial aik = P.p_coefficient(i, k);
                if (aik.is_zero()) continue;
                add_t(row, k, i, PElement(aik));
                for (int l = 1; l <= n; ++l)
                    c[static_cast<std::size_t>(l - 1)] += aik * P.coefficient(k, i, l);
            }
            fold_generator_part("u_" + std::to_string(i), c, row);
            out.rows.push_back({"u[" + std::to_string(i) + "]", std::move(row)});
        }
        // v_{ij} = p[b_i, b_j] - [p b_i, b_j]
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                std::vector<PElement> row(static_cast<std::size_t>(basis.size()));
                std::vector<Polynomial> c(static_cast<std::size_t>(n));
                add_t(row, i, j, PElement::p_power(1, RationalFunction(1)));
                for (int k = 1; k <= n; ++k) {
                    Polynomial aijk = P.coefficient(i, j, k);
                    if (!aijk.is_zero()) {
                        add_s(row, k, PElement(aijk));
                        for (int l = 1; l <= n; ++l)
                            c[static_cast<std::size_t>(l - 1)] += aijk * P.p_coefficient(k, l);
                    }
                    Polynomial aik = P.p_coefficient(i, k);
                    if (!aik.is_zero()) {
                        add_t(row, k, j, PElement(-aik));
                        for (int l = 1; l <= n; ++l)
                            c[static_cast<std::size_t>(l - 1)] -= aik * P.coefficient(k, j, l);
                    }
                }
                fold_generator_part("v_{" + std::to_string(i) + "," + std::to_string(j) + "}", c,
                                    row);
                out.rows.push_back(
                    {"v[" + std::to_string(i) + "," + std::to_string(j) + "]", std::move(row)});
            }
        // w_{ijh}: the Jacobi relation for i < j < h
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int h = j + 1; h <= n; ++h) {
                    std::vector<PElement> row(static_cast<std::size_t>(basis.size()));
                    std::vector<Polynomial> c(static_cast<std::size_t>(n));
                    for (int k = 1; k <= n; ++k) {
                        Polynomial ajh = P.coefficient(j, h, k);
                        Polynomial aij = P.coefficient(i, j, k);
                        Polynomial ahi = P.coefficient(h, i, k);
                        if (!ajh.is_zero()) {
                            add_t(row, i, k, PElement(ajh));
                            for (int l = 1; l <= n; ++l)
                                c[static_cast<std::size_t>(l - 1)] += ajh * P.coefficient(i, k, l);
                        }
                        if (!aij.is_zero()) {
                            add_t(row, h, k, PElement(aij));
                            for (int l = 1; l <= n; ++l)
                                c[static_cast<std::size_t>(l - 1)] += aij * P.coefficient(h, k, l);
                        }
                        if (!ahi.is_zero()) {
                            add_t(row, j, k, PElement(ahi));
                            for (int l = 1; l <= n; ++l)
                                c[static_cast<std::size_t>(l - 1)] += ahi * P.coefficient(j, k, l);
                        }
                    }
                    fold_generator_part("w_{" + std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(h) + "}",
                                        c, row);
                    out.rows.push_back({"w[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(h) + "]",
                                        std::move(row)});
                }
    }
};

} // namespace

RelationMatrix build_matrix(const Presentation& P) {
    MatrixBuilder b(P);
    b.build();
    return std::move(b.out);
}

std::vector<std::vector<mpz_class>> lower_concrete(const RelationMatrix& M, long prime) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(M.rows.size());
    for (const auto& row : M.rows) {
        std::vector<mpz_class> r;
        r.reserve(row.entries.size());
        for (const auto& e : row.entries) {
            mpz_class acc = 0;
            mpz_class pk = 1;
            for (int i = 0; i <= e.degree(); ++i) {
                const RationalFunction& c = e.coeff(i);
                if (!c.is_zero()) {
                    if (!c.den().is_one() || !c.num().is_constant())
                        throw domain_error("entry is not an integer: " + e.to_string());
                    acc += c.num().constant_value() * pk;
                }
                pk *= prime;
            }
            r.push_back(acc);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace schur
