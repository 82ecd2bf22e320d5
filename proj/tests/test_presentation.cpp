#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schur/presentation.hpp"
#include "support/oracles.hpp"

using namespace schur;

namespace {
std::string fixture(const std::string& name) {
    return std::string(SCHUR_FIXTURE_DIR) + "/" + name;
}
const std::vector<std::string> kAllFixtures = {
    "p1_cyclic.lp", "p2_cyclic.lp", "p2_elem.lp", "p3_cyclic.lp", "p3_mixed.lp",
    "p3_elem.lp",   "p3_heis.lp",   "p3_extra.lp", "sym1.lp",      "sym2.lp",
    "sym3.lp",      "sym4.lp",      "sym5.lp",     "sym6.lp",      "symw.lp",
    "bad1.lp",      "dim7stress.lp"};
} // namespace

TEST_CASE("parsing the bundled fixtures") {
    SUBCASE("Heisenberg") {
        Presentation P = Presentation::parse("dim 3\n[b1,b2] = b3\n");
        CHECK(P.dim() == 3);
        CHECK(P.params().empty());
        CHECK(P.coefficient(1, 2, 3) == Polynomial(1));
    }
    SUBCASE("cyclic p^2") {
        Presentation P = Presentation::parse("dim 2\np*b1 = b2\n");
        CHECK(P.p_coefficient(1, 2) == Polynomial(1));
        CHECK(P.p_coefficient(2, 2).is_zero());
    }
    SUBCASE("dimension-7 stress file") {
        Presentation P = Presentation::parse_file(fixture("dim7stress.lp"));
        CHECK(P.dim() == 7);
        CHECK(P.params().size() == 12);
        CHECK(P.p_coeffs().size() == 12);   // four p-rows with three terms each
        CHECK(P.bracket_coeffs().size() == 5);
        // [l4,l2] = w*l6 folds to the canonical (2,4) entry with a sign.
        CHECK(P.coefficient(4, 2, 6) == Polynomial::parse("w"));
        CHECK(P.coefficient(2, 4, 6) == Polynomial::parse("-w"));
        // [l2,l1] = l5 folds likewise.
        CHECK(P.coefficient(1, 2, 5) == Polynomial(-1));
    }
}

TEST_CASE("parser rejects malformed input with line numbers") {
    auto parse_fails = [](const std::string& text, const std::string& needle) {
        try {
            Presentation::parse(text);
            FAIL_CHECK("expected a format error for: " << text);
        } catch (const format_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    parse_fails("dim 3\n[b1,b2] = b2\n", "line 2");          // k <= j
    parse_fails("dim 3\np*b2 = b1\n", "triangular");         // k <= i
    parse_fails("dim 3\n[b1,b2] = x*b3\n", "undeclared");    // x not declared
    parse_fails("dim 2\np*b1 = b2\np*b1 = b2\n", "duplicate");
    parse_fails("dim 3\n[b1,b1] = b3\n", "identically zero");
    parse_fails("dim 3\nparams p\n", "reserved");
    parse_fails("dim 3\nparams w\n", "reserved");
    parse_fails("dim 3\nparams b2\n", "generator");
    parse_fails("dim 2\n[b1,b5] = b2\n", "out of range");
    parse_fails("[b1,b2] = b3\n", "dim");
    parse_fails("dim 3\n[b1,b2] = p*b3\n", "may not contain p");
    parse_fails("dim 3\nrequire 0\n", "unsatisfiable");
}

TEST_CASE("coefficient lookup uses the alternating total convention") {
    Presentation H = Presentation::parse("dim 3\n[b1,b2] = b3\n");
    CHECK(H.coefficient(2, 1, 3) == Polynomial(-1));
    CHECK(H.coefficient(1, 1, 3).is_zero());
    CHECK(H.coefficient(1, 2, 2).is_zero());
    CHECK(H.coefficient(1, 3, 2).is_zero());
}

TEST_CASE("print/parse round trip on every fixture") {
    for (const auto& name : kAllFixtures) {
        Presentation P = Presentation::parse_file(fixture(name));
        Presentation Q = Presentation::parse(P.print());
        CHECK_MESSAGE(P.same_structure(Q), "round trip failed for " << name);
    }
}

TEST_CASE("specialise") {
    Presentation P = Presentation::parse_file(fixture("sym6.lp"));
    SUBCASE("integer substitution removes the parameter") {
        Presentation Q = P.specialise({{"x", Polynomial(0)}});
        CHECK(Q.params() == std::vector<std::string>{"y", "z"});
        CHECK(Q.p_coefficient(1, 5).is_zero());
        CHECK(Q.p_coefficient(1, 6) == Polynomial::parse("y"));
        CHECK_FALSE(Q.infeasible());
    }
    SUBCASE("polynomial substitution") {
        Presentation D = Presentation::parse_file(fixture("dim7stress.lp"));
        Presentation Q = D.specialise({{"z", Polynomial::parse("x*y")}});
        CHECK(Q.params().size() == 11);
        CHECK(Q.p_coefficient(4, 7) == Polynomial::parse("x*y"));
    }
    SUBCASE("empty substitution is the identity") {
        CHECK(P.specialise({}).same_structure(P));
    }
    SUBCASE("a constraint collapsing to zero tags the branch infeasible") {
        Presentation S3 = Presentation::parse_file(fixture("sym3.lp"));
        Presentation Q = S3.specialise({{"x", Polynomial(0)}});
        CHECK(Q.infeasible());
    }
    SUBCASE("nonzero constant constraints are discharged") {
        Presentation S3 = Presentation::parse_file(fixture("sym3.lp"));
        Presentation Q = S3.specialise({{"x", Polynomial(-1)}});
        CHECK_FALSE(Q.infeasible());
        CHECK(Q.constraints().empty());
    }
    SUBCASE("unknown or entangled substitutions are rejected") {
        CHECK_THROWS_AS(P.specialise({{"q", Polynomial(0)}}), context_error);
        CHECK_THROWS_AS(P.specialise({{"x", Polynomial::parse("y")}, {"y", Polynomial(1)}}),
                        context_error);
    }
}

TEST_CASE("least primitive root") {
    CHECK(least_primitive_root(5) == 2);
    CHECK(least_primitive_root(7) == 3);
    CHECK(least_primitive_root(11) == 2);
    CHECK(least_primitive_root(13) == 2);
    CHECK(least_primitive_root(23) == 5);
    CHECK(least_primitive_root(41) == 6);
    CHECK(least_primitive_root(3) == 2);
    CHECK_THROWS_AS(least_primitive_root(4), domain_error);
    CHECK_THROWS_AS(least_primitive_root(9), domain_error);
    CHECK_THROWS_AS(least_primitive_root(1), domain_error);
}

TEST_CASE("evaluate_concrete") {
    Presentation S = Presentation::parse_file(fixture("sym1.lp"));
    SUBCASE("coefficients become residues") {
        Presentation C = S.evaluate_concrete(5, {{"x", 2}});
        CHECK(C.is_concrete());
        CHECK(C.prime() == 5);
        CHECK(C.primitive_root() == 2);
        CHECK(C.concrete_p_coefficient(1, 3) == 2);
        CHECK(C.params().empty());
    }
    SUBCASE("negative assignments reduce mod p") {
        Presentation C = S.evaluate_concrete(5, {{"x", -1}});
        CHECK(C.concrete_p_coefficient(1, 3) == 4);
    }
    SUBCASE("violated constraints are tagged, not fatal") {
        Presentation S3 = Presentation::parse_file(fixture("sym3.lp"));
        CHECK(S3.evaluate_concrete(5, {{"x", 0}}).constraint_violated());
        CHECK_FALSE(S3.evaluate_concrete(5, {{"x", 3}}).constraint_violated());
    }
    SUBCASE("w binds to the least primitive root") {
        Presentation W = Presentation::parse_file(fixture("symw.lp"));
        Presentation C = W.evaluate_concrete(5, {{"x", 1}});
        CHECK(C.concrete_p_coefficient(1, 3) == 2); // w = 2 mod 5
    }
    SUBCASE("the dimension-7 file evaluates and is consistent at p=5") {
        Presentation D = Presentation::parse_file(fixture("dim7stress.lp"));
        std::map<std::string, long> ones;
        for (const auto& x : D.params()) ones[x] = 1;
        Presentation C = D.evaluate_concrete(5, ones);
        CHECK(C.primitive_root() == 2);
        CHECK(C.concrete_coefficient(4, 2, 6) == 2); // w reduced
        CHECK(C.check_consistency().ok);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(S.evaluate_concrete(6, {{"x", 1}}), domain_error);
        CHECK_THROWS_AS(S.evaluate_concrete(5, {}), context_error);
        CHECK_THROWS_AS(S.evaluate_concrete(5, {{"x", 1}, {"q", 1}}), context_error);
    }
}

TEST_CASE("normal form") {
    Presentation Z = Presentation::parse_file(fixture("p2_cyclic.lp")).evaluate_concrete(5, {});
    CHECK(Z.normal_form({7, 0}).coords == std::vector<long long>{2, 1});
    CHECK(Z.normal_form({6, 4}).coords == std::vector<long long>{1, 0});
    CHECK(Z.normal_form({0, 0}).coords == std::vector<long long>{0, 0});
    CHECK(Z.normal_form({-1, 0}).coords == std::vector<long long>{4, 4});

    // normal_form(p*v) agrees with the p*b_i expansion of v.
    std::mt19937_64 rng(41);
    for (const auto& name : {"p3_cyclic.lp", "p3_extra.lp", "sym6.lp"}) {
        Presentation P = Presentation::parse_file(fixture(name));
        for (long prime : {5L, 7L}) {
            std::map<std::string, long> assign;
            for (const auto& x : P.params())
                assign[x] = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            Presentation C = P.evaluate_concrete(prime, assign);
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<long long> v(static_cast<std::size_t>(C.dim()));
                for (auto& c : v) c = static_cast<long long>(rng() % static_cast<unsigned long>(prime));
                std::vector<long long> pv = v, expansion(v.size(), 0);
                for (auto& c : pv) c *= prime;
                for (int i = 1; i <= C.dim(); ++i)
                    for (int k = i + 1; k <= C.dim(); ++k)
                        expansion[static_cast<std::size_t>(k - 1)] +=
                            v[static_cast<std::size_t>(i - 1)] * C.concrete_p_coefficient(i, k);
                CHECK(C.normal_form(pv) == C.normal_form(expansion));
            }
        }
    }
}

TEST_CASE("bracket") {
    Presentation H = Presentation::parse_file(fixture("p3_heis.lp")).evaluate_concrete(5, {});
    CHECK(H.bracket(H.generator(1), H.generator(2)).coords ==
          std::vector<long long>{0, 0, 1});
    ConcreteElement a{{1, 1, 0}}, b{{0, 1, 0}};
    CHECK(H.bracket(a, b).coords == std::vector<long long>{0, 0, 1});

    std::mt19937_64 rng(43);
    for (const auto& name : kAllFixtures) {
        if (std::string(name) == "bad1.lp") continue;
        Presentation P = Presentation::parse_file(fixture(name));
        for (long prime : {5L, 7L}) {
            std::map<std::string, long> assign;
            for (const auto& x : P.params())
                assign[x] = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            Presentation C = P.evaluate_concrete(prime, assign);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<long long> xv(static_cast<std::size_t>(C.dim())),
                    yv(static_cast<std::size_t>(C.dim())), zv(static_cast<std::size_t>(C.dim()));
                for (auto& c : xv) c = static_cast<long long>(rng() % static_cast<unsigned long>(prime));
                for (auto& c : yv) c = static_cast<long long>(rng() % static_cast<unsigned long>(prime));
                for (auto& c : zv) c = static_cast<long long>(rng() % static_cast<unsigned long>(prime));
                ConcreteElement x{xv}, y{yv}, z{zv};
                CHECK(C.bracket(x, x).is_zero()); // alternating
                // Z-bilinearity in the first argument.
                ConcreteElement lhs = C.bracket(C.add(x, y), z);
                ConcreteElement rhs = C.add(C.bracket(x, z), C.bracket(y, z));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("consistency checker") {
    for (const auto& name : kAllFixtures) {
        if (std::string(name) == "bad1.lp") continue;
        Presentation P = Presentation::parse_file(fixture(name));
        for (long prime : {5L, 7L}) {
            std::mt19937_64 rng(101 + prime);
            std::map<std::string, long> assign;
            for (const auto& x : P.params())
                assign[x] = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            Presentation C = P.evaluate_concrete(prime, assign);
            ConsistencyReport rep = C.check_consistency();
            CHECK_MESSAGE(rep.ok, name << " at p=" << prime << " should be consistent");
        }
    }

    Presentation B = Presentation::parse_file(fixture("bad1.lp")).evaluate_concrete(5, {});
    ConsistencyReport rep = B.check_consistency();
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.violations[0].kind == "p-compat");
    CHECK(rep.violations[0].i == 1);
    CHECK(rep.violations[0].left == "(0,0,4)"); // -b3 mod 5

    // Symbolic checking is probabilistic sampling.
    Presentation S = Presentation::parse_file(fixture("sym6.lp"));
    ConsistencyReport srep = S.check_consistency();
    CHECK(srep.ok);
    CHECK(srep.probabilistic);
    ConsistencyReport brep = Presentation::parse_file(fixture("bad1.lp")).check_consistency();
    CHECK_FALSE(brep.ok);
    CHECK(brep.probabilistic);
}

TEST_CASE("specialise then evaluate equals evaluate with the merged assignment") {
    Presentation P = Presentation::parse_file(fixture("sym6.lp"));
    std::mt19937_64 rng(47);
    for (long prime : {5L, 7L}) {
        for (int trial = 0; trial < 10; ++trial) {
            long xv = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            long yv = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            long zv = static_cast<long>(rng() % static_cast<unsigned long>(prime));
            Presentation S = P.specialise({{"x", Polynomial(xv)}});
            Presentation C1 = S.evaluate_concrete(prime, {{"y", yv}, {"z", zv}});
            Presentation C2 = P.evaluate_concrete(prime, {{"x", xv}, {"y", yv}, {"z", zv}});
            CHECK(C1.same_structure(C2));
        }
    }
}
