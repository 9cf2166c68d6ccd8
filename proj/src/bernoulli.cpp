#include "cinf/bernoulli.hpp"

#include <stdexcept>

namespace cinf {

Rational bernoulli_number(unsigned n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / Rational(static_cast<long>(m + 1));
  }
  return b[n];
}

UniPoly bernoulli_polynomial(unsigned n) {
  std::vector<Rational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) coeffs[n - k] = Rational(binomial(n, k)) * bernoulli_number(k);
  return UniPoly(std::move(coeffs));
}

std::vector<UniPoly> exp_series_ratio(unsigned max_order) {
  if (max_order < 1) throw std::invalid_argument("exp_series_ratio needs max_order >= 1");
  // (e^{zt} - 1)/z = sum_k z^k t^(k+1)/(k+1)!,  (e^z - 1)/z = sum_k z^k/(k+1)!.
  // Quotient Q = N/D is solved term by term: Q_k = N_k - sum_{j=1}^{k} D_j Q_{k-j}  (D_0 = 1).
  const unsigned terms = max_order;  // Q_0 .. Q_{max_order-1}
  std::vector<UniPoly> quotient;
  quotient.reserve(terms);
  for (unsigned k = 0; k < terms; ++k) {
    UniPoly q = UniPoly::monomial(k + 1, Rational(BigInt(1), factorial(k + 1)));
    for (unsigned j = 1; j <= k; ++j) q -= quotient[k - j] * Rational(BigInt(1), factorial(j + 1));
    quotient.push_back(std::move(q));
  }
  std::vector<UniPoly> series(max_order + 1);
  for (unsigned n = 1; n <= max_order; ++n) series[n] = quotient[n - 1];
  return series;
}

}  // namespace cinf
