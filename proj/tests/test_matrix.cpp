#include <catch2/catch_amalgamated.hpp>

#include "lynum/matrix.hpp"
#include "support/naive_linalg.hpp"

using namespace lynum;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0) m.set(i, j, mpq_class(rows[i][j]));
    return m;
}

// simple deterministic generator for property tests
struct Rng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

ExactMatrix random_matrix(Rng& rng, int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long v = rng.small(-4, 4);
            if (v != 0) m.set(i, j, mpq_class(v));
        }
    return m;
}

} // namespace

TEST_CASE("field spec accepts 0 and primes only") {
    CHECK_NOTHROW(FieldSpec(0));
    CHECK_NOTHROW(FieldSpec(2));
    CHECK_NOTHROW(FieldSpec(3));
    CHECK_NOTHROW(FieldSpec(101));
    CHECK_THROWS_AS(FieldSpec(1), InvalidField);
    CHECK_THROWS_AS(FieldSpec(4), InvalidField);
    CHECK_THROWS_AS(FieldSpec(91), InvalidField); // 7*13
}

TEST_CASE("rank basics") {
    FieldSpec q(0);
    CHECK(rank(ExactMatrix::identity(2), q) == 2);
    CHECK(rank(ExactMatrix::zero(3, 4), q) == 0);
    // [[2]] over F_2 is the zero matrix
    ExactMatrix two = from_rows({{2}});
    CHECK(rank(two, FieldSpec(2)) == 0);
    CHECK(rank(two, q) == 1);
}

TEST_CASE("kernel basics") {
    FieldSpec q(0);
    ExactMatrix m = from_rows({{1, 1}});
    ExactMatrix k = kernel_basis(m, q);
    REQUIRE(k.cols() == 1);
    // spans (1,-1): the two coordinates are negatives of each other
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK(k.at(0, 0) != 0);
    CHECK(multiply(m, k, q).is_zero());

    CHECK(kernel_basis(ExactMatrix::identity(3), q).cols() == 0);

    ExactMatrix m2 = from_rows({{1, 2}, {2, 4}});
    ExactMatrix k2 = kernel_basis(m2, q);
    REQUIRE(k2.cols() == 1);
    CHECK(multiply(m2, k2, q).is_zero());
    // proportional to (2,-1)
    CHECK(k2.at(0, 0) == mpq_class(-2) * k2.at(1, 0));
}

TEST_CASE("kernel dimension formula and transpose rank, random matrices") {
    Rng rng{0x9e3779b97f4a7c15ull};
    for (const auto& f : {FieldSpec(0), FieldSpec(2), FieldSpec(5)}) {
        for (int iter = 0; iter < 25; ++iter) {
            int rows = 1 + static_cast<int>(rng.next() % 6);
            int cols = 1 + static_cast<int>(rng.next() % 6);
            ExactMatrix m = random_matrix(rng, rows, cols);
            int r = rank(m, f);
            CHECK(r == testsupport::naive_rank(m, f));
            CHECK(r == rank(m.transpose(), f));
            CHECK(kernel_basis(m, f).cols() == cols - r);
            ExactMatrix prod = multiply(m, kernel_basis(m, f), f);
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("rank is deterministic across repeated runs") {
    Rng rng{42};
    ExactMatrix m = random_matrix(rng, 6, 7);
    FieldSpec q(0);
    ExactMatrix k1 = kernel_basis(m, q);
    ExactMatrix k2 = kernel_basis(m, q);
    CHECK(k1 == k2);
}

TEST_CASE("entries must be valid in the field") {
    ExactMatrix m(1, 1);
    m.set(0, 0, mpq_class(1, 3)); // denominator 3
    CHECK_THROWS_AS(rank(m, FieldSpec(3)), InvalidField);
    CHECK(rank(m, FieldSpec(2)) == 1);
}

TEST_CASE("multiply matches hand results") {
    FieldSpec q(0);
    ExactMatrix a = from_rows({{1, 2}, {0, 1}});
    ExactMatrix b = from_rows({{1, 0}, {-1, 1}});
    ExactMatrix ab = multiply(a, b, q);
    CHECK(ab.at(0, 0) == -1);
    CHECK(ab.at(0, 1) == 2);
    CHECK(ab.at(1, 0) == -1);
    CHECK(ab.at(1, 1) == 1);
}
