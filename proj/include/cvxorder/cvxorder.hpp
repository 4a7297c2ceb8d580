#pragma once

// Exact-arithmetic decision of convex stochastic order between finitely
// supported measures on Q^d, with separating max-affine witnesses,
// projection-wise certification over all directions in R^2, and the
// bundled counterexample where the two notions disagree.

#include "cvxorder/certificate_io.hpp"
#include "cvxorder/lp.hpp"
#include "cvxorder/measure.hpp"
#include "cvxorder/measure_io.hpp"
#include "cvxorder/order1d.hpp"
#include "cvxorder/ordernd.hpp"
#include "cvxorder/point.hpp"
#include "cvxorder/projcert.hpp"
#include "cvxorder/rational.hpp"
#include "cvxorder/repro.hpp"
