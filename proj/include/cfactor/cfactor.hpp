#pragma once

// Exact-arithmetic toolkit for tensor products of linear recurrence
// operators and the inverse problem of recovering the factors.

#include "cfactor/dense_poly.hpp"
#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/grid.hpp"
#include "cfactor/grid_search.hpp"
#include "cfactor/io.hpp"
#include "cfactor/lincomb.hpp"
#include "cfactor/multiplicity.hpp"
#include "cfactor/oracle.hpp"
#include "cfactor/rational.hpp"
#include "cfactor/sequences.hpp"
#include "cfactor/tensor.hpp"
