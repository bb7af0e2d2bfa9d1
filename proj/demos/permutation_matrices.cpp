// Builds σ-permutation matrices and uses them to transpose and re-partition a hypermatrix.
#include <iostream>

#include "hypermat/hypermat.hpp"

using namespace hypermat;

int main() {
    const Shape dims{2, 3, 5};
    for (const Permutation& sigma : all_permutations(3))
        std::cout << "W" << sigma.to_string() << " = " << print_delta(build_perm_matrix(dims, sigma)) << "\n";

    std::vector<Int> data;
    for (std::int64_t k = 1; k <= 12; ++k) data.emplace_back(k);
    const Hypermatrix<Int> a = from_flat(Shape{2, 3, 2}, data);

    const Hypermatrix<Int> at = sigma_transpose_via_perm(a, Permutation{2, 1, 3});
    std::cout << "A^(2,1,3) has shape " << at.shape().to_string() << ", entry (2,1,2) = " << at.at({2, 1, 2})
              << "\n";

    const MatrixExpression<Int> m = vec_to_matrix_form(a.flat(), a.shape(), {2});
    std::cout << "M_A with rows " << tuple_to_string(m.rows) << ":\n";
    for (index_t i = 1; i <= m.mat.rows(); ++i) {
        for (index_t j = 1; j <= m.mat.cols(); ++j) std::cout << " " << m.mat.at(i, j);
        std::cout << "\n";
    }
}
