#include <gtest/gtest.h>

#include <limits>

#include "hypermat/hypermatrix.hpp"
#include "hypermat/matrix.hpp"
#include "oracles.hpp"

using namespace hypermat;

namespace {

std::vector<Int> iota_ints(index_t n) {
    std::vector<Int> v;
    for (index_t k = 1; k <= n; ++k) v.emplace_back(static_cast<std::int64_t>(k));
    return v;
}

}  // namespace

TEST(Shape, RejectsZeroDimension) { EXPECT_THROW(Shape({2, 0, 3}), shape_error); }

TEST(Shape, RejectsOverflowingSize) {
    const index_t big = std::numeric_limits<index_t>::max() / 2;
    EXPECT_THROW(Shape({big, 3}), overflow_error);
}

TEST(Shape, ScalarHasOrderZeroAndSizeOne) {
    const Shape s;
    EXPECT_EQ(s.order(), 0u);
    EXPECT_EQ(s.size(), 1u);
}

TEST(Linearize, Examples) {
    const Shape s{2, 3, 2};
    EXPECT_EQ(linearize(s, MultiIndex{1, 2, 1}), 3u);
    EXPECT_EQ(linearize(s, MultiIndex{1, 1, 1}), 1u);
    EXPECT_EQ(linearize(s, MultiIndex{2, 3, 2}), 12u);
}

TEST(Linearize, BoundsErrorNamesAxis) {
    try {
        linearize(Shape{2, 3, 2}, MultiIndex{1, 4, 1});
        FAIL() << "expected bounds_error";
    } catch (const bounds_error& e) {
        EXPECT_NE(std::string(e.what()).find("axis 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(linearize(Shape{2, 3}, MultiIndex{1}), bounds_error);
    EXPECT_THROW(linearize(Shape{2, 3}, MultiIndex{0, 1}), bounds_error);
}

TEST(Delinearize, Examples) {
    EXPECT_EQ(delinearize(Shape{2, 3, 2}, 3), (MultiIndex{1, 2, 1}));
    EXPECT_EQ(delinearize(Shape{2, 3, 2}, 1), (MultiIndex{1, 1, 1}));
    EXPECT_EQ(delinearize(Shape{5}, 4), (MultiIndex{4}));
    EXPECT_THROW(delinearize(Shape{2, 2}, 0), bounds_error);
    EXPECT_THROW(delinearize(Shape{2, 2}, 5), bounds_error);
}

TEST(Linearize, RoundTripExhaustive) {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Shape s = rng.shape(5, 6, 10000);
        for (index_t r = 1; r <= s.size(); ++r) ASSERT_EQ(linearize(s, delinearize(s, r)), r);
    }
}

TEST(Linearize, MatchesStrideOracleAndIdOrder) {
    // Every pair p ≺ q (lexicographic, first index most significant) must satisfy rank(p) < rank(q).
    for (const auto& dims : std::vector<std::vector<index_t>>{{2, 3, 2}, {3, 1, 2, 2}, {4, 3}, {1}, {2, 2, 2, 2}}) {
        const Shape s(dims);
        const auto idx = oracle::all_indices(dims);
        for (index_t p = 0; p < idx.size(); ++p) {
            ASSERT_EQ(linearize(s, idx[p]), oracle::offset(dims, idx[p]) + 1);
            for (index_t q = p + 1; q < idx.size(); ++q) ASSERT_LT(linearize(s, idx[p]), linearize(s, idx[q]));
        }
    }
}

TEST(IndexRange, VisitsRanksInOrder) {
    const Shape s{2, 2};
    index_t expected = 1;
    for (const MultiIndex& idx : index_range(s)) EXPECT_EQ(linearize(s, idx), expected++);
    EXPECT_EQ(expected, 5u);
}

TEST(Hypermatrix, FromFlatLayout) {
    const auto m = from_flat(Shape{2, 2}, iota_ints(4));
    EXPECT_EQ(m.at({1, 1}), Int{1});
    EXPECT_EQ(m.at({1, 2}), Int{2});
    EXPECT_EQ(m.at({2, 1}), Int{3});
    EXPECT_EQ(m.at({2, 2}), Int{4});

    const auto s = from_flat(Shape{}, std::vector<Int>{Int{7}});
    EXPECT_EQ(s.order(), 0u);
    EXPECT_EQ(s.at(std::span<const index_t>{}), Int{7});

    EXPECT_THROW(from_flat(Shape{2, 2}, iota_ints(3)), shape_error);
}

TEST(Hypermatrix, IdOrderOfOrderThreeExample) {
    // a_{111}, a_{112}, a_{121}, ... : the value k sits at the k-th index in ID order.
    const auto a = from_flat(Shape{2, 3, 2}, iota_ints(12));
    EXPECT_EQ(a.at({1, 2, 1}), Int{3});
    EXPECT_EQ(a.at({2, 3, 2}), Int{12});
    EXPECT_EQ(a.flat(), iota_ints(12));
}

TEST(Hypermatrix, ForEachVisitsInIdOrder) {
    const auto a = from_flat(Shape{2, 3, 2}, iota_ints(12));
    std::int64_t expected = 1;
    a.for_each([&](const MultiIndex& idx, const Int& v) {
        EXPECT_EQ(v, Int{expected});
        EXPECT_EQ(linearize(a.shape(), idx), static_cast<index_t>(expected));
        ++expected;
    });
}

TEST(Hypermatrix, IdentityEntry) {
    const auto id = Hypermatrix<Int>::generate(Shape{2, 2}, [](const MultiIndex& i) { return i[0] == i[1] ? 1 : 0; });
    EXPECT_EQ(id.at({1, 2}), Int{0});
    EXPECT_EQ(id.at({2, 2}), Int{1});
    EXPECT_THROW((void)id.at({3, 1}), bounds_error);
}

TEST(ApproxEqual, Examples) {
    const auto a = from_flat(Shape{2}, std::vector<Int>{Int{1}, Int{2}});
    EXPECT_TRUE(approx_equal(a, a));
    EXPECT_FALSE(approx_equal(from_flat(Shape{1}, std::vector<Int>{Int{1}}),
                              from_flat(Shape{1}, std::vector<Int>{Int{2}})));
    EXPECT_TRUE(approx_equal(from_flat(Shape{1}, std::vector<double>{1.0}),
                             from_flat(Shape{1}, std::vector<double>{1.0 + 1e-15}), 1e-12));
    EXPECT_FALSE(approx_equal(from_flat(Shape{1}, std::vector<double>{1.0}),
                              from_flat(Shape{1}, std::vector<double>{1.0 + 1e-9}), 1e-12));
    EXPECT_THROW(approx_equal(a, from_flat(Shape{1, 2}, std::vector<Int>{Int{1}, Int{2}})), shape_error);
}

TEST(Hypermatrix, FlatReadBackIsBitExact) {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape s = rng.shape(4, 5);
        const auto data = rng.reals(s.size());
        const auto h = from_flat(s, data);
        ASSERT_EQ(h.flat(), data);
    }
}

TEST(Int, OverflowThrows) {
    const Int big{std::numeric_limits<std::int64_t>::max()};
    EXPECT_THROW(big + Int{1}, overflow_error);
    EXPECT_THROW(big * Int{2}, overflow_error);
    EXPECT_THROW(Int{std::numeric_limits<std::int64_t>::min()} - Int{1}, overflow_error);
    EXPECT_EQ(Int{6} * Int{-7}, Int{-42});
}

TEST(Matrix, ProductAndTranspose) {
    const Matrix<Int> a{{1, 2}, {3, 4}};
    const Matrix<Int> b{{0, 1}, {1, 0}};
    EXPECT_EQ(matmul(a, b), (Matrix<Int>{{2, 1}, {4, 3}}));
    EXPECT_EQ(transpose(a), (Matrix<Int>{{1, 3}, {2, 4}}));
    EXPECT_THROW(matmul(a, Matrix<Int>(3, 1)), shape_error);
}
