#pragma once

// qjord: exact computer algebra for Jordanian quantum (super)algebras —
// representation catalog, nonlinear deformation maps, q -> 1 contraction of
// R-matrices, and machine verification of the algebra/coalgebra/R-matrix
// identity suites.

#include "builtins.hpp"
#include "contraction.hpp"
#include "deform.hpp"
#include "export.hpp"
#include "expression.hpp"
#include "graded_matrix.hpp"
#include "presentation.hpp"
#include "rational.hpp"
#include "reps.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "verify.hpp"
