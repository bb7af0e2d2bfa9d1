#pragma once

#include "applications.hpp"
#include "appendix.hpp"
#include "contraction.hpp"
#include "error.hpp"
#include "expression.hpp"
#include "hypermatrix.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "scalar.hpp"
#include "shape.hpp"
#include "stp.hpp"
