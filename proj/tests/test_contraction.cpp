#include <gtest/gtest.h>

#include "hypermat/contraction.hpp"
#include "oracles.hpp"

using namespace hypermat;

namespace {

std::vector<Int> ints(std::initializer_list<std::int64_t> v) {
    std::vector<Int> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

/// Random shapes A, B and a spec pairing s axes of equal dim; B reuses A's dims on paired axes.
struct Case {
    Hypermatrix<Int> a, b;
    ContractionSpec spec;
};

Case random_case(oracle::Rng& rng) {
    const Shape sa = rng.shape(4, 5, 200);
    const index_t s = rng.uniform(0, sa.order());
    const auto a_axes = rng.axes(sa.order(), s);
    const index_t db = rng.uniform(std::max<index_t>(s, 1), 4);
    const auto b_axes = rng.axes(db, s);
    std::vector<index_t> bd(db, 0);
    for (index_t t = 0; t < s; ++t) bd[b_axes[t] - 1] = sa.dim(a_axes[t]);
    for (index_t& n : bd)
        if (n == 0) n = rng.uniform(1, 4);
    return {rng.int_hm(sa), rng.int_hm(Shape(bd)), {a_axes, b_axes}};
}

}  // namespace

TEST(Contraction, MatrixProduct) {
    const Matrix<Int> a{{1, 2}, {3, 4}}, b{{5, 6}, {7, 8}};
    const auto ha = Hypermatrix<Int>(Shape{2, 2}, a.flat()), hb = Hypermatrix<Int>(Shape{2, 2}, b.flat());
    EXPECT_EQ(contract_bruteforce(ha, hb, {{2}, {1}}).flat(), matmul(a, b).flat());
    EXPECT_EQ(contract_via_expression(ha, hb, {{2}, {1}}).flat(), matmul(a, b).flat());
}

TEST(Contraction, PairingTwoAxesOutOfOrder) {
    oracle::Rng rng(41);
    const auto a = rng.int_hm(Shape{2, 3, 4}), b = rng.int_hm(Shape{4, 5, 3});
    const ContractionSpec spec{{2, 3}, {3, 1}};
    const auto c = contract_bruteforce(a, b, spec);
    ASSERT_EQ(c.shape(), (Shape{2, 5}));
    for (index_t i1 = 1; i1 <= 2; ++i1)
        for (index_t j2 = 1; j2 <= 5; ++j2) {
            Int acc{0};
            for (index_t k2 = 1; k2 <= 3; ++k2)
                for (index_t k3 = 1; k3 <= 4; ++k3) acc += a.at({i1, k2, k3}) * b.at({k3, j2, k2});
            ASSERT_EQ(c.at({i1, j2}), acc);
        }
    const Matrix<Int> mc = matmul(matrix_expression(a, {1}, {2, 3}).mat, matrix_expression(b, {3, 1}, {2}).mat);
    EXPECT_EQ(mc.flat(), c.flat());
    EXPECT_EQ(contract_via_expression(a, b, spec), c);
}

TEST(Contraction, SquaredNormAndOuterProduct) {
    const auto v = Hypermatrix<Int>(Shape{3}, ints({1, 2, 3}));
    const auto n2 = contract_bruteforce(v, v, {{1}, {1}});
    EXPECT_EQ(n2.order(), 0u);
    EXPECT_EQ(n2.flat(), ints({14}));
    EXPECT_EQ(contract_via_expression(v, v, {{1}, {1}}), n2);

    const auto w = Hypermatrix<Int>(Shape{2}, ints({10, 20}));
    const auto outer = contract_bruteforce(v, w, {});
    EXPECT_EQ(outer.shape(), (Shape{3, 2}));
    EXPECT_EQ(outer.flat(), ints({10, 20, 20, 40, 30, 60}));
    EXPECT_EQ(contract_via_expression(v, w, {}), outer);
}

TEST(Contraction, Errors) {
    const auto a = Hypermatrix<Int>::zeros(Shape{2, 3}), b = Hypermatrix<Int>::zeros(Shape{3, 2});
    EXPECT_THROW(contract_bruteforce(a, b, {{1}, {1}}), shape_error);
    EXPECT_THROW(contract_bruteforce(a, b, {{1, 2}, {2}}), shape_error);
    EXPECT_THROW(contract_bruteforce(a, b, {{2, 2}, {1, 1}}), shape_error);
    EXPECT_THROW(contract_via_expression(a, b, {{3}, {1}}), bounds_error);
}

TEST(Contraction, ExpressionRouteMatchesOracle) {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const Case c = random_case(rng);
        const auto expected = oracle::contract(c.a, c.b, c.spec.a_axes, c.spec.b_axes);
        ASSERT_EQ(contract_bruteforce(c.a, c.b, c.spec), expected);
        ASSERT_EQ(contract_via_expression(c.a, c.b, c.spec), expected);
    }
}

TEST(Contraction, FloatBackendAgrees) {
    oracle::Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const Case c = random_case(rng);
        const auto a = to_float(c.a), b = to_float(c.b);
        ASSERT_TRUE(approx_equal(contract_via_expression(a, b, c.spec), contract_bruteforce(a, b, c.spec)));
    }
}

TEST(OntoContract, Examples) {
    const auto a = Hypermatrix<Int>(Shape{2, 3}, ints({1, 2, 3, 4, 5, 6}));
    const auto x = Hypermatrix<Int>(Shape{3}, ints({1, 0, -1}));
    for (auto m : {OntoMethod::expression, OntoMethod::stp}) {
        EXPECT_EQ(onto_contract(a, x, {2}, m).flat(), ints({-2, -2}));
        const auto full = onto_contract(a, a, {1, 2}, m);
        EXPECT_EQ(full.order(), 0u);
        EXPECT_EQ(full.flat(), ints({91}));
    }
    EXPECT_THROW(onto_contract(a, x, {1}, OntoMethod::expression), shape_error);
    EXPECT_THROW(onto_contract(a, a, {2, 1}, OntoMethod::stp), shape_error);
}

TEST(OntoContract, BothMethodsMatchBruteForce) {
    oracle::Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const Shape s = rng.shape(4, 5, 256);
        const auto a = rng.int_hm(s);
        auto rs = rng.axes(s.order(), rng.uniform(1, s.order()));
        std::sort(rs.begin(), rs.end());
        const auto b = rng.int_hm(sub_shape(s, rs));
        IndexTuple bax;
        for (index_t k = 1; k <= rs.size(); ++k) bax.push_back(k);
        const auto expected = contract_bruteforce(a, b, {rs, bax});
        ASSERT_EQ(onto_contract(a, b, rs, OntoMethod::expression), expected);
        ASSERT_EQ(onto_contract(a, b, rs, OntoMethod::stp), expected);
    }
}

TEST(HyperVector, Expand) {
    const auto e = hypervector_expand(HyperVector<Int>{{oracle::basis<Int>(2, 1), oracle::basis<Int>(3, 2)}});
    EXPECT_EQ(e.shape(), (Shape{2, 3}));
    EXPECT_EQ(e.flat(), ints({0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(hypervector_expand(HyperVector<Int>{{ints({1, 2}), ints({1, 1})}}).flat(), ints({1, 1, 2, 2}));
    EXPECT_EQ(hypervector_expand(HyperVector<Int>{{ints({4, 5, 6})}}).flat(), ints({4, 5, 6}));
    EXPECT_THROW(hypervector_expand(HyperVector<Int>{{ints({1}), {}}}), shape_error);

    oracle::Rng rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape s = rng.shape(4, 4, 256);
        std::vector<std::vector<Int>> xs;
        for (index_t n : s.dims()) xs.push_back(rng.ints(n));
        const auto h = hypervector_expand(HyperVector<Int>{xs});
        ASSERT_EQ(h.flat(), oracle::kron_vectors(xs));
        h.for_each([&](const MultiIndex& idx, Int v) {
            Int p{1};
            for (index_t k = 0; k < idx.size(); ++k) p *= xs[k][idx[k] - 1];
            ASSERT_EQ(v, p);
        });
    }
}

TEST(Multilinear, ScalarExamples) {
    oracle::Rng rng(46);
    const auto pi = rng.int_hm(Shape{2, 3, 2});
    for (const MultiIndex& idx : index_range(pi.shape())) {
        std::vector<std::vector<Int>> xs;
        for (index_t k = 0; k < 3; ++k) xs.push_back(oracle::basis<Int>(pi.shape().dims()[k], idx[k]));
        ASSERT_EQ(eval_multilinear_scalar(pi, xs), pi.at(idx));
    }
    const auto ones = Hypermatrix<Int>(Shape{2, 3, 4}, std::vector<Int>(24, Int{1}));
    EXPECT_EQ(eval_multilinear_scalar(ones, {ints({1, 1}), ints({1, 1, 1}), ints({1, 1, 1, 1})}), Int{24});
    EXPECT_THROW(eval_multilinear_scalar(ones, {ints({1, 1})}), shape_error);
    EXPECT_THROW(eval_multilinear_scalar(ones, {ints({1, 1}), ints({1, 1}), ints({1, 1, 1, 1})}), shape_error);
}

TEST(Multilinear, ScalarMatchesBruteSumAndOntoContraction) {
    oracle::Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Shape s = rng.shape(4, 4, 256);
        const auto pi = rng.int_hm(s);
        std::vector<std::vector<Int>> xs;
        for (index_t n : s.dims()) xs.push_back(rng.ints(n));
        Int brute{0};
        pi.for_each([&](const MultiIndex& idx, Int c) {
            Int p = c;
            for (index_t k = 0; k < idx.size(); ++k) p *= xs[k][idx[k] - 1];
            brute += p;
        });
        const Int got = eval_multilinear_scalar(pi, xs);
        ASSERT_EQ(got, brute);
        IndexTuple all;
        for (index_t k = 1; k <= s.order(); ++k) all.push_back(k);
        ASSERT_EQ(onto_contract(pi, hypervector_expand(HyperVector<Int>{xs}), all, OntoMethod::stp).flat(),
                  std::vector<Int>{got});
    }
}

TEST(Multilinear, AdditiveAndHomogeneousInEachArgument) {
    oracle::Rng rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        const Shape s = rng.shape(4, 4, 256);
        const auto pi = rng.int_hm(s);
        std::vector<std::vector<Int>> xs;
        for (index_t n : s.dims()) xs.push_back(rng.ints(n));
        const index_t k = rng.uniform(0, s.order() - 1);
        const auto y = rng.ints(s.dims()[k]);
        const Int lambda = rng.int_value();
        auto with = [&](std::vector<Int> v) {
            auto copy = xs;
            copy[k] = std::move(v);
            return eval_multilinear_scalar(pi, copy);
        };
        std::vector<Int> scaled;
        for (const Int& v : xs[k]) scaled.push_back(lambda * v);
        ASSERT_EQ(with(vec_add(xs[k], y)), with(xs[k]) + with(y));
        ASSERT_EQ(with(scaled), lambda * with(xs[k]));
    }
}

TEST(Multilinear, VectorBasisInputsReadColumns) {
    oracle::Rng rng(49);
    const auto c = rng.int_hm(Shape{3, 2, 4});
    const auto m = matrix_expression(c, {3}, {1, 2});
    index_t col = 1;
    for (index_t i = 1; i <= 3; ++i)
        for (index_t j = 1; j <= 2; ++j, ++col) {
            const auto out = eval_multilinear_vector(m, {oracle::basis<Int>(3, i), oracle::basis<Int>(2, j)});
            for (index_t r = 1; r <= 4; ++r) ASSERT_EQ(out[r - 1], m.mat.at(r, col));
        }
    EXPECT_THROW(eval_multilinear_vector(matrix_expression(c, {2, 3}, {1}), {ints({1, 2, 3})}), shape_error);
    EXPECT_THROW(eval_multilinear_vector(m, {ints({1, 2, 3})}), shape_error);
    EXPECT_THROW(eval_multilinear_vector(m, {ints({1, 2}), ints({1, 2})}), shape_error);
}

TEST(EvalTensor, IdentityAndBasis) {
    const auto id = Hypermatrix<Int>(Shape{3, 3}, ints({1, 0, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(eval_tensor(id, {ints({1, 2, 3})}, {ints({4, 5, 6})}), Int{32});

    oracle::Rng rng(50);
    const auto mu = rng.int_hm(Shape{2, 2, 2});
    for (const MultiIndex& idx : index_range(mu.shape())) {
        const Int got = eval_tensor(mu, {oracle::basis<Int>(2, idx[2])},
                                    {oracle::basis<Int>(2, idx[0]), oracle::basis<Int>(2, idx[1])});
        ASSERT_EQ(got, mu.at(idx));
    }
    EXPECT_THROW(eval_tensor(mu, {}, {ints({1, 0})}), shape_error);
    EXPECT_THROW(eval_tensor(mu, {ints({1, 0, 0})}, {ints({1, 0}), ints({1, 0})}), shape_error);
}

TEST(EvalTensor, MatchesBruteForceSum) {
    oracle::Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const index_t n = rng.uniform(1, 3), r = rng.uniform(0, 3), s = rng.uniform(0, 3);
        if (r + s == 0) continue;
        const auto omega = rng.int_hm(Shape(std::vector<index_t>(r + s, n)));
        std::vector<std::vector<Int>> xs, ws;
        for (index_t k = 0; k < r; ++k) xs.push_back(rng.ints(n));
        for (index_t k = 0; k < s; ++k) ws.push_back(rng.ints(n));
        Int brute{0};
        omega.for_each([&](const MultiIndex& idx, Int c) {
            Int p = c;
            for (index_t k = 0; k < r; ++k) p *= xs[k][idx[k] - 1];
            for (index_t k = 0; k < s; ++k) p *= ws[k][idx[r + k] - 1];
            brute += p;
        });
        ASSERT_EQ(eval_tensor(omega, ws, xs), brute) << "n=" << n << " r=" << r << " s=" << s;
    }
}

TEST(Operators, UnaryIsMatrixVectorForOrderOne) {
    const auto a = Hypermatrix<Int>(Shape{2, 2}, ints({1, 2, 3, 4}));
    const auto x = Hypermatrix<Int>(Shape{2}, ints({5, 6}));
    // A ×²₁ x with a_{ij} x_j summed over j.
    EXPECT_EQ(unary_apply(a, x).flat(), ints({17, 39}));
    EXPECT_THROW(unary_apply(Hypermatrix<Int>::zeros(Shape{2, 3}), x), shape_error);
}

TEST(Operators, BinaryMatchesTripleSum) {
    oracle::Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const Shape block = rng.shape(2, 3, 9);
        const index_t d = block.order();
        std::vector<index_t> ad;
        for (int rep = 0; rep < 3; ++rep) ad.insert(ad.end(), block.dims().begin(), block.dims().end());
        const auto a = rng.int_hm(Shape(ad));
        const auto b = rng.int_hm(block), c = rng.int_hm(block);
        const auto got = binary_apply(a, b, c);
        ASSERT_EQ(got.shape(), block);
        for (const MultiIndex& i : index_range(block)) {
            Int acc{0};
            for (const MultiIndex& j : index_range(block))
                for (const MultiIndex& k : index_range(block)) {
                    MultiIndex full(i);
                    full.insert(full.end(), j.begin(), j.end());
                    full.insert(full.end(), k.begin(), k.end());
                    // The innermost contraction pairs the last block with B, then the middle one with C.
                    acc += a.at(full) * b.at(k) * c.at(j);
                }
            ASSERT_EQ(got.at(i), acc) << "d=" << d;
        }
    }
}

TEST(Operators, KaryGeneralizesBinary) {
    oracle::Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const Shape block = rng.shape(2, 3, 6);
        std::vector<index_t> ad3, ad4;
        for (int rep = 0; rep < 3; ++rep) ad3.insert(ad3.end(), block.dims().begin(), block.dims().end());
        ad4 = ad3;
        ad4.insert(ad4.end(), block.dims().begin(), block.dims().end());
        const auto a3 = rng.int_hm(Shape(ad3));
        const auto b = rng.int_hm(block), c = rng.int_hm(block), e = rng.int_hm(block);
        ASSERT_EQ(kary_apply(a3, {b, c}), binary_apply(a3, b, c));

        const auto a4 = rng.int_hm(Shape(ad4));
        const auto got = kary_apply(a4, {b, c, e});
        for (const MultiIndex& i : index_range(block)) {
            Int acc{0};
            for (const MultiIndex& j : index_range(block))
                for (const MultiIndex& k : index_range(block))
                    for (const MultiIndex& l : index_range(block)) {
                        MultiIndex full(i);
                        for (const MultiIndex* part : {&j, &k, &l}) full.insert(full.end(), part->begin(), part->end());
                        acc += a4.at(full) * b.at(l) * c.at(k) * e.at(j);
                    }
            ASSERT_EQ(got.at(i), acc);
        }
    }
    EXPECT_THROW(kary_apply(Hypermatrix<Int>::zeros(Shape{2, 2}), {}), shape_error);
}
