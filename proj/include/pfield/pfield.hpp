#pragma once

// Umbrella header: exact Poisson brackets on the rational function field in
// two variables, and the decision procedures built on top of them.

#include "pfield/bipoly.hpp"
#include "pfield/classify.hpp"
#include "pfield/errors.hpp"
#include "pfield/factored.hpp"
#include "pfield/flagbounds.hpp"
#include "pfield/io.hpp"
#include "pfield/isomaut.hpp"
#include "pfield/linalg.hpp"
#include "pfield/logderiv.hpp"
#include "pfield/poisson.hpp"
#include "pfield/poly1.hpp"
#include "pfield/ratfunc.hpp"
#include "pfield/rational.hpp"
#include "pfield/scalar.hpp"
#include "pfield/unipoly_roots.hpp"
#include "pfield/valuation.hpp"
