#include "qfock/interpolate.hpp"

#include <map>

namespace qfock {

Laurent fit_polynomial_in_q(const std::vector<std::pair<long, mpz_class>>& points,
                            int degree_bound) {
  QF_CHECK(degree_bound >= 0, "negative degree bound");
  QF_CHECK((int)points.size() >= degree_bound + 1,
           "not enough sample points for degree bound");
  const size_t m = points.size();
  // Lagrange over Q: coeffs[k] of Q^k.
  std::vector<mpq_class> coeffs(m, 0);
  for (size_t i = 0; i < m; ++i) {
    // Basis polynomial prod_{j != i} (Q - x_j) / (x_i - x_j), built as
    // integer coefficient list then scaled.
    std::vector<mpz_class> num(1, 1);
    mpz_class den = 1;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      QF_CHECK(points[i].first != points[j].first, "repeated sample point");
      std::vector<mpz_class> nx(num.size() + 1, 0);
      for (size_t k = 0; k < num.size(); ++k) {
        nx[k + 1] += num[k];
        nx[k] -= num[k] * points[j].first;
      }
      num = std::move(nx);
      den *= mpz_class(points[i].first) - mpz_class(points[j].first);
    }
    mpq_class scale(points[i].second, den);
    scale.canonicalize();
    for (size_t k = 0; k < num.size(); ++k) coeffs[k] += scale * num[k];
  }
  Laurent r;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    QF_CHECK(coeffs[k].get_den() == 1, "count fit is not integral");
    QF_CHECK((int)k <= degree_bound, "count fit exceeds degree bound");
    r += Laurent(coeffs[k].get_num(), (int)k);
  }
  return r;
}

}  // namespace qfock
