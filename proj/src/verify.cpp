#include "schur/verify.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

namespace schur {

namespace {

bool constraints_satisfied(const Presentation& P, long prime,
                           const std::map<std::string, long>& full) {
    for (const auto& c : P.constraints())
        if (c.evaluate_mod(prime, full) == 0) return false;
    return true;
}

// Walks the tree and collects the nodes applicable to (prime, assignment):
// the substitution chain holds, every remaining ledger entry is nonzero, the
// node finished within budget and no recorded content collides with prime.
void collect_applicable(const CaseNode& node, long prime,
                        const std::map<std::string, long>& full,
                        std::vector<const CaseNode*>& out) {
    if (!node.infeasible && !node.chain.empty()) {
        const Substitution& s = node.chain.back();
        long expect = s.value.evaluate_mod(prime, full);
        if (full.at(s.var) != expect) return; // subtree requires this substitution
    }
    if (!node.infeasible && !node.result.budget_exceeded && node.result.valid &&
        node.result.content_safe_at(prime)) {
        bool live = true;
        for (const auto& f : node.result.ledger)
            if (f.evaluate_mod(prime, full) == 0) {
                live = false;
                break;
            }
        if (live) out.push_back(&node);
    }
    for (const auto& child : node.children) collect_applicable(child, prime, full, out);
}

std::string chain_label(const CaseNode& node) {
    if (node.chain.empty()) return "*";
    std::string s;
    for (const auto& sub : node.chain) {
        if (!s.empty()) s += ", ";
        s += sub.label();
    }
    return s;
}

std::vector<mpz_class> evaluated_norm(const CaseNode& node, long prime) {
    std::vector<mpz_class> out;
    for (int e : node.result.exponents) {
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(prime),
                      static_cast<unsigned long>(e));
        out.push_back(d);
    }
    return out;
}

} // namespace

std::vector<std::map<std::string, long>> zero_set(const PseudoUnit& u, long prime,
                                                  const std::vector<std::string>& params,
                                                  const std::vector<Polynomial>& constraints,
                                                  long enumeration_limit) {
    double space = 1;
    for (std::size_t i = 0; i < params.size(); ++i) space *= static_cast<double>(prime);
    if (space > static_cast<double>(enumeration_limit))
        throw domain_error("zero set enumeration needs " + std::to_string(space) +
                           " assignments, limit is " + std::to_string(enumeration_limit));
    long root = least_primitive_root(prime);
    Polynomial num = u.value.constant_coeff().num(); // content kept: it matters mod prime
    std::vector<std::map<std::string, long>> out;
    std::vector<long> tuple(params.size(), 0);
    while (true) {
        std::map<std::string, long> assign;
        for (std::size_t i = 0; i < params.size(); ++i) assign[params[i]] = tuple[i];
        std::map<std::string, long> full = assign;
        full[kRootVar] = root;
        bool admissible = true;
        for (const auto& c : constraints)
            if (c.evaluate_mod(prime, full) == 0) {
                admissible = false;
                break;
            }
        if (admissible && num.evaluate_mod(prime, full) == 0) out.push_back(assign);
        // Odometer.
        std::size_t k = 0;
        while (k < tuple.size() && ++tuple[k] == prime) tuple[k++] = 0;
        if (k == tuple.size()) break;
        if (params.empty()) break;
    }
    return out;
}

VerifyReport differential_check(const Presentation& P, const CaseNode& tree,
                                const VerifyOptions& options) {
    if (P.is_concrete()) throw domain_error("differential check requires a symbolic presentation");
    VerifyReport report;

    for (long prime : options.primes) {
        if ((prime == 2 || prime == 3) && !options.allow_small_primes) {
            report.skipped_primes.push_back(prime);
            continue;
        }
        if (!is_prime(prime)) throw domain_error(std::to_string(prime) + " is not prime");
        long root = least_primitive_root(prime);
        std::size_t m = P.params().size();
        double space = 1;
        for (std::size_t i = 0; i < m; ++i) space *= static_cast<double>(prime);
        bool exhaustive = options.force_exhaustive ||
                          (!options.force_sample &&
                           space <= static_cast<double>(options.exhaustive_limit));
        report.modes.emplace_back(prime, exhaustive);

        std::vector<std::map<std::string, long>> assignments;
        if (exhaustive) {
            std::vector<long> tuple(m, 0);
            while (true) {
                std::map<std::string, long> assign;
                for (std::size_t i = 0; i < m; ++i) assign[P.params()[i]] = tuple[i];
                assignments.push_back(std::move(assign));
                std::size_t k = 0;
                while (k < tuple.size() && ++tuple[k] == prime) tuple[k++] = 0;
                if (k == tuple.size() || m == 0) break;
            }
        } else {
            std::mt19937_64 rng(options.seed * 0x9e3779b97f4a7c15ULL + static_cast<unsigned long>(prime));
            for (int s = 0; s < options.sample_count; ++s) {
                std::map<std::string, long> assign;
                for (std::size_t i = 0; i < m; ++i)
                    assign[P.params()[i]] = static_cast<long>(rng() % static_cast<unsigned long>(prime));
                assignments.push_back(std::move(assign));
            }
        }

        std::vector<std::optional<VerifyRecord>> slots(assignments.size());
        long skipped = 0;
        auto worker = [&](std::size_t begin, std::size_t end, long* skip_count) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                const auto& assign = assignments[idx];
                std::map<std::string, long> full = assign;
                full[kRootVar] = root;
                if (!constraints_satisfied(P, prime, full)) {
                    ++*skip_count;
                    continue;
                }
                VerifyRecord rec;
                rec.prime = prime;
                rec.assignment = assign;
                Presentation C = P.evaluate_concrete(prime, assign);
                ConsistencyReport consistency = C.check_consistency();
                if (!consistency.ok) {
                    rec.status = "inconsistent";
                    slots[idx] = std::move(rec);
                    continue;
                }
                SchurResult concrete = schur_multiplier_concrete(C);
                if (!concrete.valid) {
                    rec.status = "inconsistent";
                    slots[idx] = std::move(rec);
                    continue;
                }
                rec.concrete_norm = concrete.divisors;
                std::vector<const CaseNode*> nodes;
                collect_applicable(tree, prime, full, nodes);
                if (nodes.empty()) {
                    rec.status = "uncovered";
                    slots[idx] = std::move(rec);
                    continue;
                }
                rec.status = "match";
                rec.node = chain_label(*nodes.front());
                rec.symbolic_norm = evaluated_norm(*nodes.front(), prime);
                for (const CaseNode* node : nodes) {
                    std::vector<mpz_class> predicted = evaluated_norm(*node, prime);
                    if (predicted != concrete.divisors) {
                        rec.status = "mismatch";
                        rec.node = chain_label(*node);
                        rec.symbolic_norm = predicted;
                        break;
                    }
                }
                slots[idx] = std::move(rec);
            }
        };

        unsigned hw = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
        std::size_t njobs = assignments.size();
        unsigned nthreads = static_cast<unsigned>(
            std::min<std::size_t>(hw, std::max<std::size_t>(1, njobs)));
        if (nthreads <= 1 || njobs < 32) {
            worker(0, njobs, &skipped);
        } else {
            std::vector<long> skips(nthreads, 0);
            std::vector<std::future<void>> futures;
            std::size_t chunk = (njobs + nthreads - 1) / nthreads;
            for (unsigned t = 0; t < nthreads; ++t) {
                std::size_t begin = t * chunk;
                std::size_t end = std::min(njobs, begin + chunk);
                if (begin >= end) break;
                futures.push_back(std::async(std::launch::async, worker, begin, end, &skips[t]));
            }
            for (auto& f : futures) f.get();
            for (long s : skips) skipped += s;
        }
        report.skipped_constraint += skipped;
        for (auto& slot : slots) {
            if (!slot) continue;
            const std::string& st = slot->status;
            if (st == "match")
                ++report.match;
            else if (st == "mismatch")
                ++report.mismatch;
            else if (st == "uncovered")
                ++report.uncovered;
            else
                ++report.inconsistent;
            report.records.push_back(std::move(*slot));
        }
    }
    return report;
}

} // namespace schur
