#pragma once

// Reference computations that share no code with the library beyond Rational.

#include <random>
#include <vector>

#include "cinf/rational.hpp"

namespace oracle {

// Akiyama-Tanigawa produces B_n with B_1 = +1/2; flip to the B_1 = -1/2 convention.
inline cinf::Rational bernoulli(unsigned n) {
  std::vector<cinf::Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = cinf::Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = cinf::Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  return n == 1 ? -a[0] : a[0];
}

// Integral of t1^a t2^b dt1 dt2 over {t1, t2 >= 0, t1 + t2 <= 1}, by expanding (1 - t1)^{b+1}.
inline cinf::Rational triangle_integral(unsigned a, unsigned b) {
  cinf::Rational out;
  for (unsigned k = 0; k <= b + 1; ++k) {
    cinf::Rational term(cinf::binomial(b + 1, k));
    term *= cinf::Rational(1, a + k + 1);
    if (k % 2 == 1) term = -term;
    out += term;
  }
  return out * cinf::Rational(1, b + 1);
}

inline cinf::Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 25);
  return cinf::Rational(cinf::BigInt(num(rng)), cinf::BigInt(den(rng)));
}

}  // namespace oracle
