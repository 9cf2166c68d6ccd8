#pragma once

#include <vector>

#include "cinf/rational.hpp"
#include "cinf/unipoly.hpp"

namespace cinf {

// Convention B_n = B_n(0), so B_1 = -1/2. Generating function z / (e^z - 1).
Rational bernoulli_number(unsigned n);

// B_n(t) = sum_k C(n,k) B_k t^(n-k).
UniPoly bernoulli_polynomial(unsigned n);

// Coefficients of z^0 .. z^max_order in z (e^{zt} - 1) / (e^z - 1), computed by formal division
// of truncated exponential series. Entry n is a polynomial in t.
std::vector<UniPoly> exp_series_ratio(unsigned max_order);

}  // namespace cinf
