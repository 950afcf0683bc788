#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "escode/coder.hpp"
#include "escode/distribution.hpp"
#include "escode/entropy.hpp"
#include "escode/errors.hpp"
#include "escode/lengths.hpp"
#include "escode/random.hpp"

using namespace escode;

namespace {

const std::vector<double> kSeven = {0.48, 0.30, 0.10, 0.05, 0.05, 0.01, 0.01};

std::vector<int> sorted_lengths(const Codebook& book) {
    std::vector<int> lens;
    for (std::size_t i = 0; i < book.size(); ++i)
        lens.push_back(static_cast<int>(book.codeword(i).size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

} // namespace

TEST_SUITE("coder") {

TEST_CASE("digit alphabet") {
    for (unsigned v = 0; v < kMaxCodeBase; ++v) CHECK(digit_value(digit_char(v)) == v);
    CHECK(digit_char(0) == '0');
    CHECK(digit_char(9) == '9');
    CHECK(digit_char(10) == 'A');
    CHECK(digit_char(35) == 'Z');
    CHECK(digit_char(36) == 'a');
    CHECK(digit_char(61) == 'z');
    CHECK_THROWS_AS(digit_char(62), Error);
    CHECK_THROWS_AS(digit_value('!'), Error);
    CHECK_THROWS_AS(digit_value(' '), Error);
}

TEST_CASE("prefix freedom") {
    CHECK(is_prefix_free({"0", "10", "11"}));
    CHECK(is_prefix_free({"11", "0", "10"}));
    CHECK(is_prefix_free({"0"}));
    CHECK_FALSE(is_prefix_free({"0", "01"}));
    CHECK_FALSE(is_prefix_free({"01", "0"}));
    CHECK_FALSE(is_prefix_free({"1", "1"}));
    CHECK(is_prefix_free({"0", "1", "20", "21", "22"}));
}

TEST_CASE("codebook validation") {
    CHECK_THROWS_AS(Codebook(1, {"0"}), InvalidBase);
    CHECK_THROWS_AS(Codebook(63, {"0"}), InvalidBase);
    CHECK_THROWS_AS(Codebook(2, {}), Error);
    CHECK_THROWS_AS(Codebook(2, {"0", ""}), Error);
    CHECK_THROWS_AS(Codebook(2, {"0", "12"}), Error);  // digit 2 in base 2
    CHECK_THROWS_AS(Codebook(2, {"0", "01"}), NonPrefixCodebook);
    CHECK_THROWS_AS(Codebook(2, {"0", "10"}, std::vector<std::string>{"a"}),
                    CardinalityMismatch);

    const Codebook book(2, {"0", "10", "11"}, std::vector<std::string>{"x", "y", "z"});
    CHECK(book.alphabet_size() == 2);
    CHECK(book.size() == 3);
    CHECK(book.label(1) == "y");
    CHECK(book.codeword(2) == "11");
    const LengthVector lens = book.lengths();
    CHECK(lens[0] == 1.0);
    CHECK(lens[2] == 2.0);

    const Codebook unlabeled(2, {"0", "1"});
    CHECK(unlabeled.label(0) == "0");
    CHECK(unlabeled.label(1) == "1");
}

TEST_CASE("kraft sum") {
    CHECK(kraft_sum(LengthVector::from_ints({1, 2, 2}), 2) == 1.0);
    CHECK(kraft_sum(LengthVector::from_ints({1, 2, 3}), 2) == 0.875);
    CHECK(kraft_sum(LengthVector::from_ints({1, 1, 2}), 2) == 1.25);
    CHECK(kraft_sum(LengthVector::from_ints({1, 2, 3, 4, 5, 6, 6}), 2) == 1.0);
    CHECK(kraft_sum(LengthVector::from_ints({1, 1, 2, 2}), 3) ==
          doctest::Approx(8.0 / 9.0).epsilon(1e-15));
    CHECK(kraft_feasible(LengthVector::from_ints({1, 2, 2}), 2));
    CHECK_FALSE(kraft_feasible(LengthVector::from_ints({1, 1, 2}), 2));
    CHECK_THROWS_AS(kraft_sum(LengthVector::from_ints({1}), 1), InvalidBase);
}

TEST_CASE("huffman: binary references") {
    const Codebook dyadic = huffman(Distribution({0.5, 0.25, 0.25}), 2);
    CHECK(dyadic.codeword(0) == "0");
    CHECK(dyadic.codeword(1) == "10");
    CHECK(dyadic.codeword(2) == "11");

    CHECK(sorted_lengths(huffman(Distribution(kSeven), 2)) ==
          std::vector<int>{1, 2, 3, 4, 5, 6, 6});

    const Codebook single = huffman(Distribution({1.0}), 2);
    CHECK(single.size() == 1);
    CHECK(single.codeword(0) == "0");

    CHECK(sorted_lengths(huffman(Distribution({0.9, 0.1}), 2)) ==
          std::vector<int>{1, 1});
}

TEST_CASE("huffman: zero-probability symbols sink to the longest codewords") {
    const Codebook book = huffman(Distribution({0.5, 0.5, 0.0}), 2);
    CHECK(book.codeword(2).size() == 2);
    CHECK(sorted_lengths(book) == std::vector<int>{1, 2, 2});
    CHECK(expected_length(Distribution({0.5, 0.5, 0.0}), book.lengths()) ==
          doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("huffman: ternary with dummy padding") {
    const Codebook book = huffman(Distribution({0.25, 0.25, 0.25, 0.25}), 3);
    CHECK(sorted_lengths(book) == std::vector<int>{1, 1, 2, 2});
    CHECK(kraft_feasible(book.lengths(), 3));
}

TEST_CASE("huffman: labels carried and books deterministic") {
    const Distribution p({0.4, 0.35, 0.25},
                         std::vector<std::string>{"a", "b", "c"});
    const Codebook one = huffman(p, 2);
    const Codebook two = huffman(p, 2);
    REQUIRE(one.labels().has_value());
    CHECK((*one.labels())[2] == "c");
    CHECK(one.codewords() == two.codewords());
}

TEST_CASE("huffman: shannon sandwich on random instances") {
    Rng rng(404);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 9;
        const Distribution p = random_distribution(rng, n);
        const unsigned base = (t % 3 == 0) ? 3 : 2;
        const Codebook book = huffman(p, base);
        const double lbar = expected_length(p, book.lengths());
        const double h1 = shannon_entropy(p, base);
        CHECK(lbar >= h1 - 1e-9);
        CHECK(lbar < h1 + 1.0 + 1e-9);
        CHECK(kraft_feasible(book.lengths(), base));
    }
}

TEST_CASE("escort huffman: q = 1 is plain huffman") {
    Rng rng(505);
    for (int t = 0; t < 20; ++t) {
        const Distribution p = random_distribution(rng, 2 + t % 7);
        CHECK(escort_huffman(p, 1.0, 2).codewords() == huffman(p, 2).codewords());
    }
}

TEST_CASE("escort huffman: reference columns") {
    const Distribution p(kSeven);
    struct Column {
        double q;
        std::vector<int> lengths;
    };
    const Column columns[] = {
        {1.0, {1, 2, 3, 4, 5, 6, 6}},
        {0.7, {1, 2, 4, 4, 4, 5, 5}},
        {0.4, {2, 2, 3, 3, 3, 4, 4}},
    };
    for (const Column& col : columns) {
        const Codebook book = escort_huffman(p, col.q, 2);
        const double m_built = escort_mean_length(p, book.lengths(), col.q);
        const double m_ref =
            escort_mean_length(p, LengthVector::from_ints(col.lengths), col.q);
        // the book is one optimal solution; ties may permute the multiset
        // but never change the optimal value
        const bool same_multiset = sorted_lengths(book) == col.lengths;
        CHECK((same_multiset || std::abs(m_built - m_ref) <= 1e-12));
        CHECK(m_built <= m_ref + 1e-12);
    }
}

TEST_CASE("escort huffman: sandwich for the virtual source") {
    Rng rng(606);
    for (int t = 0; t < 60; ++t) {
        const Distribution p = random_distribution(rng, 2 + t % 8);
        for (double q : {0.3, 0.7, 1.5, 3.0}) {
            const Distribution esc = escort(p, q);
            const double m = escort_mean_length(p, escort_huffman(p, q, 2).lengths(), q);
            const double h1p = shannon_entropy(esc, 2);
            CHECK(m >= h1p - 1e-9);
            CHECK(m < h1p + 1.0 + 1e-9);
        }
    }
}

TEST_CASE("code_from_lengths: canonical assignment") {
    const Codebook a = code_from_lengths(LengthVector::from_ints({1, 2, 2}), 2);
    CHECK(a.codeword(0) == "0");
    CHECK(a.codeword(1) == "10");
    CHECK(a.codeword(2) == "11");

    const Codebook b = code_from_lengths(LengthVector::from_ints({2, 2, 2, 2}), 2);
    CHECK(b.codeword(0) == "00");
    CHECK(b.codeword(1) == "01");
    CHECK(b.codeword(2) == "10");
    CHECK(b.codeword(3) == "11");

    // shorter lengths are served first regardless of symbol order
    const Codebook c = code_from_lengths(LengthVector::from_ints({2, 1}), 2);
    CHECK(c.codeword(0) == "10");
    CHECK(c.codeword(1) == "0");

    const Codebook t = code_from_lengths(LengthVector::from_ints({1, 1, 2, 2}), 3);
    CHECK(t.codeword(0) == "0");
    CHECK(t.codeword(1) == "1");
    CHECK(t.codeword(2) == "20");
    CHECK(t.codeword(3) == "21");

    CHECK_THROWS_AS(code_from_lengths(LengthVector({1.5, 2.0}), 2), NonIntegerLength);
    CHECK_THROWS_AS(code_from_lengths(LengthVector::from_ints({1, 1, 2}), 2),
                    KraftViolation);
}

TEST_CASE("code_from_lengths: lengths beyond the exact-integer window") {
    const Codebook deep = code_from_lengths(LengthVector::from_ints({1, 2, 63}), 2);
    CHECK(deep.codeword(2).size() == 63);
    CHECK(is_prefix_free(deep.codewords()));
    CHECK_THROWS_AS(code_from_lengths(LengthVector::from_ints({1, 1, 63}), 2),
                    KraftViolation);
}

TEST_CASE("code_from_lengths: random lengths realize prefix-free books") {
    Rng rng(707);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 10;
        const unsigned base = (t % 4 == 0) ? 3 : 2;
        const std::vector<int> lens = random_kraft_lengths(rng, n, base);
        const Codebook book = code_from_lengths(LengthVector::from_ints(lens), base);
        CHECK(is_prefix_free(book.codewords()));
        for (std::size_t i = 0; i < n; ++i)
            CHECK(book.codeword(i).size() == static_cast<std::size_t>(lens[i]));
    }
}

TEST_CASE("exhaustive optimal: references and guards") {
    const auto [lens, m] = exhaustive_optimal(Distribution({0.5, 0.25, 0.25}), 1.0, 2, 4);
    CHECK(m == doctest::Approx(1.5).epsilon(1e-15));
    std::vector<double> got = lens.values();
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<double>{1.0, 2.0, 2.0});

    const Distribution p(kSeven);
    const auto [opt_lens, opt_m] = exhaustive_optimal(p, 0.4, 2, 8);
    const double m_huff =
        escort_mean_length(p, escort_huffman(p, 0.4, 2).lengths(), 0.4);
    CHECK(opt_m == doctest::Approx(m_huff).epsilon(1e-13));

    const Distribution nine(std::vector<double>(9, 1.0 / 9));
    CHECK_THROWS_AS(exhaustive_optimal(nine, 1.0, 2, 8), InstanceTooLarge);
    CHECK_THROWS_AS(exhaustive_optimal(p, 1.0, 2, 0), InstanceTooLarge);
    CHECK_THROWS_AS(exhaustive_optimal(p, 1.0, 2, 13), InstanceTooLarge);
    CHECK_THROWS_AS(exhaustive_optimal(p, 1.0, 62, 12), InstanceTooLarge);
    // four symbols cannot fit in depth-1 binary codewords
    CHECK_THROWS_AS(
        exhaustive_optimal(Distribution({0.25, 0.25, 0.25, 0.25}), 1.0, 2, 1),
        InstanceTooLarge);
}

TEST_CASE("exhaustive optimal: agrees with huffman across q") {
    Rng rng(808);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + t % 5;
        const Distribution p = random_distribution(rng, n);
        for (double q : {0.3, 0.7, 1.0, 1.5, 3.0}) {
            const double m_huff =
                escort_mean_length(p, escort_huffman(p, q, 2).lengths(), q);
            const auto [lens, m_opt] = exhaustive_optimal(p, q, 2, 8);
            CHECK(m_huff == doctest::Approx(m_opt).epsilon(1e-12));
        }
    }
}

TEST_CASE("codebook tsv round-trip") {
    const Codebook book(3, {"0", "1", "20", "21"},
                        std::vector<std::string>{"a", "b", "c", "d"});
    std::ostringstream out;
    write_codebook_tsv(out, book);
    std::istringstream in(out.str());
    const Codebook back = read_codebook_tsv(in);
    CHECK(back.alphabet_size() == 3);
    CHECK(back.codewords() == book.codewords());
    REQUIRE(back.labels().has_value());
    CHECK(*back.labels() == *book.labels());
}

TEST_CASE("codebook tsv writer rejects labels that cannot round-trip") {
    const Codebook book(2, {"0", "10"}, std::vector<std::string>{"#", "b"});
    std::ostringstream out;
    CHECK_THROWS_AS(write_codebook_tsv(out, book), Error);
}

TEST_CASE("codebook tsv parsing") {
    {
        std::istringstream in("# a comment\n\n#D=2\na\t0\r\nb\t10\nb2\t11\n");
        const Codebook book = read_codebook_tsv(in);
        CHECK(book.alphabet_size() == 2);
        CHECK(book.size() == 3);
        CHECK(book.codeword(1) == "10");
        CHECK(book.label(2) == "b2");
    }
    {
        // the first #D= header wins; later ones are plain comments
        std::istringstream in("#D=2\n#D=3\na\t0\nb\t1\n");
        CHECK(read_codebook_tsv(in).alphabet_size() == 2);
    }
    {
        std::istringstream in("a\t0\n");
        CHECK_THROWS_WITH_AS(read_codebook_tsv(in),
                             doctest::Contains("line 1"), ParseError);
    }
    {
        std::istringstream in("#D=2\na\t0\nnot a record\n");
        CHECK_THROWS_WITH_AS(read_codebook_tsv(in),
                             doctest::Contains("line 3"), ParseError);
    }
    {
        std::istringstream in("#D=2\na\t0\nb\t21\n");
        CHECK_THROWS_WITH_AS(read_codebook_tsv(in),
                             doctest::Contains("line 3"), ParseError);
    }
    {
        std::istringstream in("#D=2\na\t0x\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=1\na\t0\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=65\na\t0\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=two\na\t0\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=2\na\t\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=2\n# only comments\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_AS(read_codebook_tsv(in), ParseError);
    }
    {
        std::istringstream in("#D=2\na\t0\nb\t01\n");
        CHECK_THROWS_AS(read_codebook_tsv(in), NonPrefixCodebook);
    }
}

} // TEST_SUITE
