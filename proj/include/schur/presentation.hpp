#ifndef SCHUR_PRESENTATION_HPP
#define SCHUR_PRESENTATION_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "schur/poly.hpp"

namespace schur {

// Smallest positive primitive root modulo an odd prime (1 for prime = 2).
long least_primitive_root(long prime);
bool is_prime(long n);

// Element of a concrete presentation in normal form: coordinate i is the
// coefficient of b_{i+1}, reduced into 0..p-1.
struct ConcreteElement {
    std::vector<long long> coords;
    bool operator==(const ConcreteElement& o) const { return coords == o.coords; }
    bool is_zero() const;
    std::string to_string() const;
};

struct ConsistencyViolation {
    std::string kind; // "p-compat", "jacobi" or "alternating"
    int i = 0, j = 0, h = 0;
    std::string relation;
    std::string left;
    std::string right;
};

struct ConsistencyReport {
    bool ok = true;
    bool probabilistic = false; // symbolic presentations are checked by sampling
    std::vector<ConsistencyViolation> violations;
};

// Triangular presentation of a nilpotent Lie p-ring: brackets and p-multiples
// expand over strictly higher-indexed generators. Coefficients are integer
// polynomials in the declared parameters and w; concrete presentations carry
// a prime, a primitive root and a full parameter assignment, and all
// coefficients are residues.
class Presentation {
  public:
    enum class Mode { symbolic, concrete };

    static Presentation parse(const std::string& text);
    static Presentation parse_file(const std::string& path);
    std::string print() const;

    const std::string& name() const { return name_; }
    void set_name(const std::string& n) { name_ = n; }
    int dim() const { return n_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<Polynomial>& constraints() const { return constraints_; }
    Mode mode() const { return mode_; }
    bool is_concrete() const { return mode_ == Mode::concrete; }
    long prime() const { return prime_; }
    long primitive_root() const { return root_; }
    const std::map<std::string, long>& assignment() const { return assignment_; }

    // True when a specialisation has made a `require` constraint identically
    // zero: no member of the family satisfies the library conditions.
    bool infeasible() const { return infeasible_; }
    // True when a concrete evaluation violated a constraint: the point lies
    // outside the family.
    bool constraint_violated() const { return violated_; }

    // Bracket coefficient a_{ijk} under the total convention: alternating in
    // (i, j), zero outside the stored triangular range.
    Polynomial coefficient(int i, int j, int k) const;
    // p-multiple coefficient a_{ik}; zero unless i < k <= n.
    Polynomial p_coefficient(int i, int k) const;
    long concrete_coefficient(int i, int j, int k) const;
    long concrete_p_coefficient(int i, int k) const;

    const std::map<std::tuple<int, int, int>, Polynomial>& bracket_coeffs() const {
        return bracket_;
    }
    const std::map<std::pair<int, int>, Polynomial>& p_coeffs() const { return pmult_; }

    // Simultaneous substitution of parameters by integers or polynomials in
    // the remaining parameters. Substituted parameters disappear from the
    // parameter list; a constraint collapsing to the zero polynomial tags the
    // result infeasible.
    Presentation specialise(const std::map<std::string, Polynomial>& subs) const;

    // Evaluates every coefficient mod prime with w bound to the least
    // primitive root. A constraint evaluating to zero tags the result as
    // outside the family.
    Presentation evaluate_concrete(long prime, const std::map<std::string, long>& assignment) const;

    // Collection: rewrites an arbitrary integer coordinate vector into normal
    // form using the p-multiple relations, front to back.
    ConcreteElement normal_form(std::vector<long long> v) const;
    ConcreteElement generator(int i) const;
    ConcreteElement add(const ConcreteElement& a, const ConcreteElement& b) const;
    ConcreteElement scalar_mul(long long c, const ConcreteElement& a) const;
    ConcreteElement bracket(const ConcreteElement& a, const ConcreteElement& b) const;

    // Checks the defining consistency relations; concrete presentations are
    // checked exactly, symbolic ones by sampling over small primes.
    ConsistencyReport check_consistency() const;
    ConsistencyReport check_consistency_sampled(const std::vector<long>& primes,
                                                int samples_per_prime, unsigned long seed) const;

    // Structural equality (coefficients, parameters, constraints; names and
    // modes excluded).
    bool same_structure(const Presentation& o) const;

  private:
    void validate_polynomial_vars(const Polynomial& poly, int line) const;

    std::string name_;
    int n_ = 0;
    std::vector<std::string> params_;
    std::map<std::tuple<int, int, int>, Polynomial> bracket_; // key i<j<k
    std::map<std::pair<int, int>, Polynomial> pmult_;         // key i<k
    std::vector<Polynomial> constraints_;
    Mode mode_ = Mode::symbolic;
    bool infeasible_ = false;
    bool violated_ = false;
    long prime_ = 0;
    long root_ = 0;
    std::map<std::string, long> assignment_;
};

} // namespace schur

#endif
