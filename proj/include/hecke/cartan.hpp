#pragma once

#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// The dominant coweight lambda with g in K.p^lambda.K, where K is the
// standard maximal compact.  Read off the minimal valuations of k x k minors:
// their successive differences are the elementary divisor exponents.
// Requires det(g) == 1.
Coweight cartan(const QMatrix& g, long p);

// log_p of the denominator of g: the smallest e >= 0 with p^e g integral at p.
// Equals -min coordinate of cartan(g).
long denominator_exponent(const QMatrix& g, long p);

// Transversal of box(B)/N(Z_p) for the lower unipotent subgroup N: one
// unipotent lower-triangular rep per coset, strictly lower entries a/p^B with
// 0 <= a < p^B.  Exactly p^{B n(n-1)/2} matrices.
std::vector<QMatrix> unipotent_reps(int n, long p, int B);

// One representative b per single coset b.K inside K.p^lambda.K, each of the
// form H/p^sigma with H an integral column Hermite form and sigma = -min(lambda).
// lambda must be dominant.  Canonical: no two reps share a coset.
std::vector<QMatrix> coset_reps(const Coweight& lambda, long p);

// |K.p^lambda.K / K|, by enumeration
Int coset_count(const Coweight& lambda, long p);

struct ConvolutionTerm {
  Coweight nu;
  Int coeff;
};

struct Convolution {
  Coweight lambda;
  Coweight mu;
  long p;
  std::vector<ConvolutionTerm> terms;  // increasing in nu, coeffs all positive

  // nullptr when nu does not appear
  const Int* coeff(const Coweight& nu) const;
};

// Structure constants of 1_{K.p^lambda.K} * 1_{K.p^mu.K} = sum_nu c^nu 1_{K.p^nu.K}
// (convolution over the group, Haar normalized with vol(K) = 1).  Routed to an
// integer fast path (parallel when built with OpenMP) when entry bounds allow.
Convolution double_coset_convolve(const Coweight& lambda, const Coweight& mu, long p);

// same values, all-rational serial evaluation; kept as the testing reference
Convolution double_coset_convolve_reference(const Coweight& lambda, const Coweight& mu,
                                            long p);

}  // namespace hecke
