#ifndef SCHUR_CASESPLIT_HPP
#define SCHUR_CASESPLIT_HPP

#include "schur/factor.hpp"
#include "schur/smith.hpp"

namespace schur {

struct Substitution {
    std::string var;
    Polynomial value;
    std::string label() const { return var + "=" + value.to_string(); }
    bool operator==(const Substitution& o) const { return var == o.var && value == o.value; }
};

// Rooted case-distinction tree: each child extends its parent's substitution
// chain by one substitution. A leaf has an empty ledger after constraint
// filtering, carries unresolved factors, or is infeasible.
struct CaseNode {
    std::vector<Substitution> chain;
    Presentation presentation;
    bool infeasible = false;
    SchurResult result;
    std::vector<Polynomial> unresolved;
    std::vector<CaseNode> children;

    std::string label() const { return chain.empty() ? "*" : chain.back().label(); }
};

struct BranchOutcome {
    std::vector<Substitution> branches;
    std::vector<Polynomial> unresolved;
};

// Factors the zero part of a pseudo-unit and turns each factor into either a
// branch substitution (linear in some parameter with coefficient +-1), a
// discard (the factor is excluded by a constraint, or is the primitive root
// w itself), or an unresolved factor for human follow-up.
BranchOutcome branch_candidates(const PseudoUnit& u, const std::vector<Polynomial>& constraints);
BranchOutcome branch_candidates(const Polynomial& zero_part,
                                const std::vector<Polynomial>& constraints);

struct SplitOptions {
    Budget budget;
    int max_depth = 5;
    PivotStrategy strategy = PivotStrategy::smallest_unit;
};

// The automated case analysis: symbolic SNF at each node, branching on the
// solvable factors of recorded pseudo-units, pruning by constraints.
CaseNode split(const Presentation& P, const SplitOptions& options = SplitOptions());

} // namespace schur

#endif
