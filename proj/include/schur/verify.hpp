#ifndef SCHUR_VERIFY_HPP
#define SCHUR_VERIFY_HPP

#include "schur/casesplit.hpp"

namespace schur {

// All constraint-satisfying assignments in Z_p^m at which the pseudo-unit
// vanishes, with w bound to the least primitive root. Refuses enumeration
// beyond the limit.
std::vector<std::map<std::string, long>> zero_set(const PseudoUnit& u, long prime,
                                                  const std::vector<std::string>& params,
                                                  const std::vector<Polynomial>& constraints,
                                                  long enumeration_limit = 100000);

struct VerifyOptions {
    std::vector<long> primes{5, 7, 11};
    bool force_exhaustive = false;
    bool force_sample = false;
    long exhaustive_limit = 100000; // exhaustive when p^m fits below this
    int sample_count = 1000;
    unsigned long seed = 1;
    bool allow_small_primes = false; // p in {2, 3} need an explicit opt-in
    int threads = 0;                 // 0 = hardware concurrency
};

struct VerifyRecord {
    long prime = 0;
    std::map<std::string, long> assignment;
    std::string status; // "match", "mismatch", "uncovered" or "inconsistent"
    std::vector<mpz_class> concrete_norm;
    std::vector<mpz_class> symbolic_norm; // from the matched (or offending) node
    std::string node; // substitution chain of that node, "*" for the root
};

struct VerifyReport {
    std::vector<VerifyRecord> records;
    long match = 0, mismatch = 0, uncovered = 0, inconsistent = 0;
    long skipped_constraint = 0;
    std::vector<long> skipped_primes; // primes excluded without opt-in
    std::vector<std::pair<long, bool>> modes; // prime -> exhaustive?

    bool ok() const { return mismatch == 0 && uncovered == 0; }
};

// Compares, per prime and per admissible parameter tuple, the concrete Schur
// multiplier (integer SNF of the evaluated matrix) against the evaluated
// prediction of every applicable case-tree node.
VerifyReport differential_check(const Presentation& P, const CaseNode& tree,
                                const VerifyOptions& options = VerifyOptions());

} // namespace schur

#endif
