#include "schur/casesplit.hpp"

#include <algorithm>

namespace schur {

namespace {

Polynomial sign_normalized_primitive(const Polynomial& f) { return f.primitive_part(); }

bool matches_constraint(const Polynomial& factor, const std::vector<Polynomial>& constraints) {
    for (const auto& c : constraints) {
        if (c.is_zero()) continue;
        if (factor == sign_normalized_primitive(c)) return true;
    }
    return false;
}

} // namespace

BranchOutcome branch_candidates(const Polynomial& zero_part,
                                const std::vector<Polynomial>& constraints) {
    BranchOutcome out;
    if (zero_part.is_zero()) throw domain_error("zero polynomial has no branch candidates");
    if (zero_part.is_constant()) return out;

    Factorization fac = factor_best_effort(zero_part);
    for (const auto& [factor, mult] : fac.factors) {
        (void)mult;
        if (factor.is_constant()) continue;
        if (matches_constraint(factor, constraints)) continue; // excluded by a `require`
        if (factor == Polynomial::variable(kRootVar)) continue; // primitive roots never vanish

        // Branchable: degree 1 in some parameter with constant coefficient +-1.
        bool branched = false;
        for (const auto& v : factor.variables()) {
            if (v == kRootVar) continue;
            if (factor.degree_in(v) != 1) continue;
            auto coeffs = factor.coefficients_in(v);
            const Polynomial& lead = coeffs[1];
            if (!lead.is_constant()) continue;
            mpz_class a = lead.constant_value();
            if (a != 1 && a != -1) continue;
            Polynomial value = a == 1 ? -coeffs[0] : coeffs[0];
            Substitution s{v, value};
            if (std::find(out.branches.begin(), out.branches.end(), s) == out.branches.end())
                out.branches.push_back(s);
            branched = true;
            break;
        }
        if (!branched) {
            if (std::find(out.unresolved.begin(), out.unresolved.end(), factor) ==
                out.unresolved.end())
                out.unresolved.push_back(factor);
        }
    }
    return out;
}

BranchOutcome branch_candidates(const PseudoUnit& u, const std::vector<Polynomial>& constraints) {
    return branch_candidates(u.zero_part(), constraints);
}

namespace {

CaseNode split_rec(const Presentation& P, const SplitOptions& options,
                   std::vector<Substitution> chain, int depth) {
    CaseNode node;
    node.chain = std::move(chain);
    node.presentation = P;
    if (P.infeasible()) {
        node.infeasible = true;
        return node;
    }
    node.result = snf_symbolic(build_matrix(P), options.budget, options.strategy);
    if (node.result.budget_exceeded || !node.result.valid) return node;

    BranchOutcome all;
    for (const auto& f : node.result.ledger) {
        BranchOutcome bc = branch_candidates(f, P.constraints());
        for (const auto& s : bc.branches)
            if (std::find(all.branches.begin(), all.branches.end(), s) == all.branches.end())
                all.branches.push_back(s);
        for (const auto& g : bc.unresolved)
            if (std::find(all.unresolved.begin(), all.unresolved.end(), g) ==
                all.unresolved.end())
                all.unresolved.push_back(g);
    }
    node.unresolved = all.unresolved;
    if (all.branches.empty()) return node;
    if (depth >= options.max_depth) {
        // Depth cut: surface what would have been branched instead of
        // silently dropping cases.
        for (const auto& s : all.branches) {
            Polynomial g = Polynomial::variable(s.var) - s.value;
            if (std::find(node.unresolved.begin(), node.unresolved.end(), g) ==
                node.unresolved.end())
                node.unresolved.push_back(g);
        }
        return node;
    }

    for (const auto& s : all.branches) {
        Presentation child = P.specialise({{s.var, s.value}});
        bool duplicate = false;
        for (const auto& existing : node.children)
            if (existing.presentation.same_structure(child)) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        std::vector<Substitution> child_chain = node.chain;
        child_chain.push_back(s);
        node.children.push_back(split_rec(child, options, std::move(child_chain), depth + 1));
    }
    return node;
}

} // namespace

CaseNode split(const Presentation& P, const SplitOptions& options) {
    if (P.is_concrete()) throw domain_error("case splitting requires a symbolic presentation");
    return split_rec(P, options, {}, 0);
}

} // namespace schur
