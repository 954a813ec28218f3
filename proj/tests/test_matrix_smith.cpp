#include "ellsw/smith.hpp"

#include "ellsw/errors.hpp"

#include <doctest.h>

#include <random>

using namespace ellsw;

namespace {

int_matrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<bigint> entries;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        cols = row.size();
        for (long long v : row)
            entries.emplace_back(v);
    }
    return {rows.size(), cols, std::move(entries)};
}

void check_snf_invariants(const int_matrix& a, const smith_decomposition& s) {
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.d.is_diagonal());
    const std::size_t k = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const bigint& a0 = s.d.at(i, i);
        const bigint& a1 = s.d.at(i + 1, i + 1);
        CHECK(a0 >= 0);
        if (a0 == 0)
            CHECK(a1 == 0); // zeros last
        else
            CHECK(a1 % a0 == 0);
    }
}

} // namespace

TEST_CASE("smith normal form of the identity") {
    const int_matrix a = int_matrix::identity(2);
    const smith_decomposition s = smith_normal_form(a);
    CHECK(s.d == int_matrix::identity(2));
    CHECK(s.u == int_matrix::identity(2));
    CHECK(s.v == int_matrix::identity(2));
}

TEST_CASE("smith normal form of [[6,4],[4,6]]") {
    const int_matrix a = from_rows({{6, 4}, {4, 6}});
    const smith_decomposition s = smith_normal_form(a);
    check_snf_invariants(a, s);
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 10);
    CHECK(abs(determinant(s.d)) == abs(determinant(a)));
    CHECK(abs(determinant(a)) == 20);
}

TEST_CASE("smith normal form of a single relation [[3,-3]]") {
    const int_matrix a = from_rows({{3, -3}});
    const smith_decomposition s = smith_normal_form(a);
    check_snf_invariants(a, s);
    CHECK(s.d.at(0, 0) == 3);
    CHECK(s.d.at(0, 1) == 0);
}

TEST_CASE("smith normal form is deterministic") {
    const int_matrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    const smith_decomposition s1 = smith_normal_form(a);
    const smith_decomposition s2 = smith_normal_form(a);
    CHECK(s1.u == s2.u);
    CHECK(s1.d == s2.d);
    CHECK(s1.v == s2.v);
    check_snf_invariants(a, s1);
}

TEST_CASE("smith normal form property suite on random matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        int_matrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = entry(rng);
        check_snf_invariants(a, smith_normal_form(a));
    }
}

TEST_CASE("determinant by Bareiss elimination") {
    CHECK(determinant(int_matrix::identity(4)) == 1);
    CHECK(determinant(from_rows({{6, 4}, {4, 6}})) == 20);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
    CHECK_THROWS_AS(determinant(int_matrix(2, 3)), precondition_error);
}
