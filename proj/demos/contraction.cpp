// Contracts two order-3 hypermatrices by direct summation and through matrix expressions.
#include <iostream>
#include <random>

#include "hypermat/hypermat.hpp"

using namespace hypermat;

int main() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-3, 3);
    auto fill = [&](const MultiIndex&) { return Int{dist(rng)}; };
    const auto a = Hypermatrix<Int>::generate(Shape{2, 3, 4}, fill);
    const auto b = Hypermatrix<Int>::generate(Shape{4, 5, 3}, fill);

    const ContractionSpec spec{{2, 3}, {3, 1}};
    const auto brute = contract_bruteforce(a, b, spec);
    const auto expr = contract_via_expression(a, b, spec);
    std::cout << "C has shape " << brute.shape().to_string() << "; methods agree: " << std::boolalpha
              << (brute == expr) << "\n";
    for (index_t i = 1; i <= 2; ++i) {
        for (index_t j = 1; j <= 5; ++j) std::cout << " " << brute.at({i, j});
        std::cout << "\n";
    }

    const std::vector<double> x{1, 2, 3}, y{-1, 0, 4};
    const auto z = cross_product(x, y);
    std::cout << "x cross y = (" << z[0] << ", " << z[1] << ", " << z[2] << ")\n";
}
