#include <doctest.h>

#include <cmath>
#include <sstream>

#include "escode/distribution.hpp"
#include "escode/errors.hpp"
#include "escode/random.hpp"

using namespace escode;

namespace {

const std::vector<double> kSeven = {0.48, 0.30, 0.10, 0.05, 0.05, 0.01, 0.01};

} // namespace

TEST_SUITE("distribution") {

TEST_CASE("construction validates entries") {
    CHECK_THROWS_AS(make_distribution({0.5, -0.1, 0.6}, false), NegativeProbability);
    CHECK_THROWS_AS(make_distribution({}, false), EmptyDistribution);
    CHECK_THROWS_AS(make_distribution({0.0, 0.0}, false), EmptyDistribution);
    CHECK_THROWS_AS(make_distribution({0.0, 0.0}, true), EmptyDistribution);
    CHECK_THROWS_AS(make_distribution({0.5, 0.4}, false), NotNormalized);
    CHECK_NOTHROW(make_distribution({0.5, 0.5 + 5e-10}, false));
    CHECK_THROWS_AS(make_distribution({0.5, 0.5 + 5e-10}, false, 1e-12), NotNormalized);
}

TEST_CASE("normalize flag rescales") {
    const Distribution p = make_distribution({2.0, 2.0}, true);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("labels") {
    CHECK_THROWS_AS(Distribution({0.5, 0.5}, std::vector<std::string>{"a"}),
                    CardinalityMismatch);
    const Distribution unlabeled({0.5, 0.5});
    CHECK(unlabeled.label(1) == "1");
    const Distribution labeled({0.5, 0.5}, std::vector<std::string>{"x", "y"});
    CHECK(labeled.label(1) == "y");
}

TEST_CASE("support and argmax") {
    const Distribution p({0.2, 0.0, 0.8});
    CHECK(p.support() == std::vector<std::size_t>{0, 2});
    CHECK(p.support_size() == 2);
    CHECK_FALSE(p.full_support());
    CHECK(p.argmax() == 2);
    // ties resolve to the smallest index
    CHECK(Distribution({0.4, 0.4, 0.2}).argmax() == 0);
}

TEST_CASE("escort identity and fixed points") {
    const Distribution p(kSeven);
    const Distribution e1 = escort(p, 1.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(e1[i] == doctest::Approx(p[i]).epsilon(1e-15));
    const Distribution u({0.25, 0.25, 0.25, 0.25});
    for (double q : {0.2, 1.0, 3.0, 10.0}) {
        const Distribution eu = escort(u, q);
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(eu[i] == doctest::Approx(0.25).epsilon(1e-15));
    }
}

TEST_CASE("escort reference values") {
    const Distribution e2 = escort(Distribution({0.8, 0.2}), 2.0);
    CHECK(e2[0] == doctest::Approx(16.0 / 17.0).epsilon(1e-15));
    CHECK(e2[1] == doctest::Approx(1.0 / 17.0).epsilon(1e-15));

    const double expected[] = {
        0.38507701222951521, 0.277117278751213,    0.12843362109436721,
        0.079060167547993989, 0.079060167547993989, 0.025625876414458304,
        0.025625876414458304};
    const Distribution e7 = escort(Distribution(kSeven), 0.7);
    for (std::size_t i = 0; i < e7.size(); ++i)
        CHECK(e7[i] == doctest::Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("escort zero handling and q = 0") {
    const Distribution p({0.7, 0.0, 0.3});
    for (double q : {0.5, 2.0}) {
        const Distribution e = escort(p, q);
        CHECK(e[1] == 0.0);
        CHECK(e[0] > 0.0);
    }
    const Distribution e0 = escort(p, 0.0);
    CHECK(e0[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(e0[1] == 0.0);
    CHECK(e0[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(escort(p, -0.5), InvalidOrder);
}

TEST_CASE("escort output is normalized") {
    Rng rng(101);
    for (int t = 0; t < 50; ++t) {
        const Distribution p = random_distribution(rng, 2 + t % 9);
        for (double q : {0.0, 0.3, 1.7, 8.0}) {
            const Distribution e = escort(p, q);
            double sum = 0.0;
            for (std::size_t i = 0; i < e.size(); ++i) sum += e[i];
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("escort duality q <-> 1/q") {
    Rng rng(202);
    for (int t = 0; t < 100; ++t) {
        const Distribution p = random_distribution(rng, 2 + t % 7);
        for (double q : {0.25, 0.5, 2.0, 4.0}) {
            const Distribution back = escort(escort(p, q), 1.0 / q);
            for (std::size_t i = 0; i < p.size(); ++i)
                CHECK(back[i] == doctest::Approx(p[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("escort flattens below 1 and sharpens above") {
    Rng rng(303);
    for (int t = 0; t < 30; ++t) {
        const Distribution p = random_distribution(rng, 5);
        double pmin = 1.0, pmax = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            pmin = std::min(pmin, p[i]);
            pmax = std::max(pmax, p[i]);
        }
        if (pmax - pmin < 1e-6) continue;
        const Distribution flat = escort(p, 0.5);
        double fmin = 1.0, fmax = 0.0;
        for (std::size_t i = 0; i < flat.size(); ++i) {
            fmin = std::min(fmin, flat[i]);
            fmax = std::max(fmax, flat[i]);
        }
        CHECK(fmax / fmin < pmax / pmin);
        CHECK(escort(p, 3.0).argmax() == p.argmax());
    }
}

TEST_CASE("restrict_to_support") {
    const Distribution p({0.5, 0.0, 0.5},
                         std::vector<std::string>{"a", "b", "c"});
    const Distribution r = restrict_to_support(p);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == 0.5);
    CHECK(r.label(1) == "c");
    CHECK(r.full_support());
}

TEST_CASE("tsv parsing: bare and labeled records") {
    std::istringstream bare("0.5\n0.25\n0.25\n");
    const Distribution p = read_distribution_tsv(bare);
    CHECK(p.size() == 3);
    CHECK(p.label(0) == "0");

    std::istringstream labeled("# comment\na\t0.5\n\nb\t0.5\n");
    const Distribution q = read_distribution_tsv(labeled);
    CHECK(q.size() == 2);
    CHECK(q.label(0) == "a");
    CHECK(q[1] == 0.5);
}

TEST_CASE("tsv parsing: errors carry line numbers") {
    std::istringstream neg("a\t0.5\nb\t-0.2\nc\t0.7\n");
    CHECK_THROWS_WITH_AS(read_distribution_tsv(neg),
                         doctest::Contains("line 2"), ParseError);

    std::istringstream junk("a\t0.5\nb\tx9\n");
    CHECK_THROWS_WITH_AS(read_distribution_tsv(junk),
                         doctest::Contains("line 2"), ParseError);

    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(read_distribution_tsv(empty), ParseError);

    std::istringstream unnormalized("a\t0.5\nb\t0.4\n");
    CHECK_THROWS_AS(read_distribution_tsv(unnormalized), ParseError);

    std::istringstream rescale("a\t5\nb\t4\n");
    const Distribution p = read_distribution_tsv(rescale, /*normalize=*/true);
    CHECK(p[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("tsv handles scientific notation and CRLF") {
    std::istringstream in("a\t5e-1\r\nb\t0.5\r\n");
    const Distribution p = read_distribution_tsv(in);
    CHECK(p[0] == 0.5);
}

TEST_CASE("tsv round-trip") {
    const Distribution p(kSeven, std::vector<std::string>{"a", "b", "c", "d", "e",
                                                          "f", "g"});
    std::ostringstream out;
    write_distribution_tsv(out, p);
    std::istringstream in(out.str());
    const Distribution back = read_distribution_tsv(in);
    REQUIRE(back.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(back[i] == doctest::Approx(p[i]).epsilon(1e-12));
        CHECK(back.label(i) == p.label(i));
    }
}

TEST_CASE("tsv writer rejects labels that cannot round-trip") {
    CHECK_NOTHROW(check_tsv_label(""));
    CHECK_NOTHROW(check_tsv_label("a#b"));
    CHECK_NOTHROW(check_tsv_label("255"));
    CHECK_THROWS_AS(check_tsv_label("#"), Error);
    CHECK_THROWS_AS(check_tsv_label("#x"), Error);
    CHECK_THROWS_AS(check_tsv_label("a\tb"), Error);
    CHECK_THROWS_AS(check_tsv_label("a\nb"), Error);
    CHECK_THROWS_AS(check_tsv_label("a\rb"), Error);

    const Distribution p({0.5, 0.5}, std::vector<std::string>{"#", "b"});
    std::ostringstream out;
    CHECK_THROWS_AS(write_distribution_tsv(out, p), Error);
}

} // TEST_SUITE
