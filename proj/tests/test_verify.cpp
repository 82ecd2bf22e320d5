#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schur/render.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {
std::string fixture(const std::string& name) {
    return std::string(SCHUR_FIXTURE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("zero_set") {
    SUBCASE("-x^2-x over Z_7 vanishes at 0 and 6") {
        PseudoUnit u(PElement::parse("-x^2-x"));
        auto zs = zero_set(u, 7, {"x"}, {});
        REQUIRE(zs.size() == 2);
        CHECK(zs[0].at("x") == 0);
        CHECK(zs[1].at("x") == 6);
    }
    SUBCASE("the constraint x excludes the origin") {
        PseudoUnit u(PElement::parse("-x^2-x"));
        auto zs = zero_set(u, 7, {"x"}, {Polynomial::parse("x")});
        REQUIRE(zs.size() == 1);
        CHECK(zs[0].at("x") == 6);
    }
    SUBCASE("units have empty zero sets") {
        PseudoUnit u(PElement::parse("1"));
        CHECK(zero_set(u, 7, {"x"}, {}).empty());
    }
    SUBCASE("w is bound to the least primitive root") {
        PseudoUnit u(PElement::parse("x-w"));
        auto zs = zero_set(u, 5, {"x"}, {});
        REQUIRE(zs.size() == 1);
        CHECK(zs[0].at("x") == 2); // w = 2 mod 5
    }
    SUBCASE("enumeration beyond the limit is refused with the required count") {
        PseudoUnit u(PElement::parse("x+y+z"));
        try {
            zero_set(u, 97, {"x", "y", "z"}, {}, 100000);
            FAIL_CHECK("expected refusal");
        } catch (const domain_error& e) {
            CHECK(std::string(e.what()).find("limit") != std::string::npos);
        }
    }
    SUBCASE("zero set and nonzero set partition the admissible space") {
        Presentation P = Presentation::parse_file(fixture("sym2.lp"));
        SchurResult r = snf_symbolic(build_matrix(P));
        REQUIRE(r.pseudo_units.size() == 1);
        for (long prime : {5L, 7L}) {
            auto zs = zero_set(r.pseudo_units[0], prime, P.params(), P.constraints());
            long root = least_primitive_root(prime);
            long nonzero = 0;
            for (long x = 0; x < prime; ++x) {
                std::map<std::string, long> full{{"x", x}, {kRootVar, root}};
                if (r.ledger[0].evaluate_mod(prime, full) != 0) ++nonzero;
            }
            CHECK(nonzero + static_cast<long>(zs.size()) == prime);
            CHECK(zs.size() == 2); // x = 0 and x = -1
        }
    }
}

TEST_CASE("differential check on sym1 is exhaustive and exact") {
    Presentation P = Presentation::parse_file(fixture("sym1.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {5, 7};
    VerifyReport report = differential_check(P, tree, opts);
    CHECK(report.ok());
    CHECK(report.match == 12); // 5 + 7 tuples
    CHECK(report.mismatch == 0);
    CHECK(report.uncovered == 0);
    CHECK(report.inconsistent == 0);
    for (const auto& rec : report.records) {
        long x = rec.assignment.at("x");
        if (x == 0)
            CHECK(rec.concrete_norm == std::vector<mpz_class>{rec.prime, rec.prime});
        else
            CHECK(rec.concrete_norm.empty());
    }
}

TEST_CASE("parameter-free families verify trivially") {
    Presentation P = Presentation::parse_file(fixture("p3_heis.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    VerifyReport report = differential_check(P, tree, opts);
    CHECK(report.ok());
    CHECK(report.match == 3); // one tuple per prime
    for (const auto& rec : report.records)
        CHECK(rec.concrete_norm == std::vector<mpz_class>{rec.prime, rec.prime});
}

TEST_CASE("bad1 reports every tuple as inconsistent") {
    Presentation P = Presentation::parse_file(fixture("bad1.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {5, 7};
    VerifyReport report = differential_check(P, tree, opts);
    CHECK(report.inconsistent == 2);
    CHECK(report.match == 0);
    CHECK(report.mismatch == 0);
    CHECK(report.uncovered == 0);
    CHECK(report.ok()); // literal contract: ok iff no mismatch and no uncovered
}

TEST_CASE("unresolved factors leave genuine uncovered tuples") {
    Presentation P = Presentation::parse(
        "dim 3\nparams x y z t\np*b1 = (x*y-z*t)*b3\n");
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {5};
    VerifyReport report = differential_check(P, tree, opts);
    CHECK_FALSE(report.ok());
    CHECK(report.uncovered > 0); // the x*y = z*t locus has no applicable node
    CHECK(report.match > 0);
    CHECK(report.mismatch == 0);
    long expected_uncovered = 0;
    for (long x = 0; x < 5; ++x)
        for (long y = 0; y < 5; ++y)
            for (long z = 0; z < 5; ++z)
                for (long t = 0; t < 5; ++t)
                    if ((x * y - z * t) % 5 == 0) ++expected_uncovered;
    CHECK(report.uncovered == expected_uncovered);
}

TEST_CASE("sampling is seeded and reproducible") {
    Presentation P = Presentation::parse_file(fixture("sym6.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {11};
    opts.force_sample = true;
    opts.sample_count = 100;
    opts.seed = 42;
    VerifyReport a = differential_check(P, tree, opts);
    VerifyReport b = differential_check(P, tree, opts);
    CHECK(render_verify_text(a) == render_verify_text(b));
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
        CHECK(a.records[i].assignment == b.records[i].assignment);
    CHECK(a.modes == std::vector<std::pair<long, bool>>{{11, false}});
}

TEST_CASE("parallel execution does not change the report") {
    Presentation P = Presentation::parse_file(fixture("sym6.lp"));
    CaseNode tree = split(P);
    VerifyOptions serial;
    serial.primes = {7};
    serial.threads = 1;
    VerifyOptions parallel = serial;
    parallel.threads = 4;
    CHECK(render_verify_text(differential_check(P, tree, serial)) ==
          render_verify_text(differential_check(P, tree, parallel)));
}

TEST_CASE("small primes are excluded unless opted in") {
    Presentation P = Presentation::parse_file(fixture("sym5.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {2, 3, 5};
    VerifyReport report = differential_check(P, tree, opts);
    CHECK(report.skipped_primes == std::vector<long>{2, 3});
    CHECK(report.modes.size() == 1);

    opts.allow_small_primes = true;
    VerifyReport full = differential_check(P, tree, opts);
    CHECK(full.skipped_primes.empty());
    CHECK(full.modes.size() == 3);
    CHECK(full.ok()); // this abelian family matches at 2 and 3 as well
}

TEST_CASE("recorded contents make nodes inapplicable at dividing primes") {
    Presentation P = Presentation::parse_file(fixture("p3_heis.lp"));
    CaseNode tree = split(P);
    REQUIRE(tree.result.contents.empty());
    tree.result.contents.push_back(5); // simulate an elimination that divided by 5
    VerifyOptions opts;
    opts.primes = {5, 7};
    VerifyReport report = differential_check(P, tree, opts);
    CHECK(report.uncovered == 1); // p = 5 cannot trust the node
    CHECK(report.match == 1);     // p = 7 still matches
}

TEST_CASE("non-primes are rejected") {
    Presentation P = Presentation::parse_file(fixture("sym1.lp"));
    CaseNode tree = split(P);
    VerifyOptions opts;
    opts.primes = {6};
    CHECK_THROWS_AS(differential_check(P, tree, opts), domain_error);
}
