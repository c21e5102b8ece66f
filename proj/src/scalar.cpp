#include "bandinv/scalar.hpp"

#include <cmath>
#include <vector>

#include "bandinv/error.hpp"

namespace bandinv::scalar {

BandMatrix jacobi_from_spectrum(const SpectralFunction& sigma) {
  if (sigma.n() != 1) throw Error(Errc::InvalidArgument, "scalar reconstruction needs n = 1");
  const std::size_t big_n = sigma.dim();
  std::vector<double> x, w;
  for (const Jump& j : sigma.jumps()) {
    x.push_back(j.x);
    w.push_back(j.alpha[0] * j.alpha[0]);
  }

  // Monic orthogonal polynomials evaluated at the nodes:
  // pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1}.
  std::vector<double> prev(big_n, 0.0), cur(big_n, 1.0), next(big_n);
  std::vector<double> a(big_n), b(big_n, 0.0);
  double norm_prev = 1.0;
  for (std::size_t k = 0; k < big_n; ++k) {
    double nrm = 0.0, mom = 0.0;
    for (std::size_t t = 0; t < big_n; ++t) {
      nrm += w[t] * cur[t] * cur[t];
      mom += w[t] * x[t] * cur[t] * cur[t];
    }
    a[k] = mom / nrm;
    if (k > 0) b[k] = nrm / norm_prev;
    for (std::size_t t = 0; t < big_n; ++t) next[t] = (x[t] - a[k]) * cur[t] - b[k] * prev[t];
    prev.swap(cur);
    cur.swap(next);
    norm_prev = nrm;
  }

  std::vector<std::vector<double>> diags(2);
  diags[0] = a;
  for (std::size_t k = 1; k < big_n; ++k) diags[1].push_back(std::sqrt(b[k]));
  return BandMatrix(1, std::move(diags));
}

}  // namespace bandinv::scalar
