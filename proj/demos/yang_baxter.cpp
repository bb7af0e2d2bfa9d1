// Evaluates both sides of the Yang-Baxter equation for a diagonal R and a random R.
#include <iostream>
#include <random>

#include "hypermat/hypermat.hpp"

using namespace hypermat;

int main() {
    const index_t n = 2;
    const Shape s{n, n, n, n};
    // r_{ijkl} = 1 when all four indices agree: a solution.
    const auto diagonal = Hypermatrix<double>::generate(s, [](const MultiIndex& i) {
        return i[0] == i[1] && i[1] == i[2] && i[2] == i[3] ? 1.0 : 0.0;
    });
    std::cout << "diagonal R residual: " << ybe_residual(make_ybe(diagonal)) << "\n";

    std::mt19937_64 rng(1);
    std::normal_distribution<double> dist;
    const auto random = Hypermatrix<double>::generate(s, [&](const MultiIndex&) { return dist(rng); });
    const auto inst = make_ybe(random);
    std::cout << "random R residual (brute force): " << ybe_residual(inst, YbeMethod::bruteforce) << "\n";
    std::cout << "random R residual (matrix form): " << ybe_residual(inst, YbeMethod::matrix) << "\n";
}
