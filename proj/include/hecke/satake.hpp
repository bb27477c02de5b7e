#pragma once

#include <map>
#include <vector>

#include "hecke/torus.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// The transform chi_lambda of every double coset class in a box, computed in
// one sweep:  chi_lambda(t) = p^{delta_exponent(t)/2} * #{u in the unipotent
// transversal of depth B : class(z_t u) = lambda}, with B = 2 * radius by
// default (counts are stable from there on; see the depth-stability test).
// Construction verifies Weyl invariance and the unit leading coefficient
// chi_lambda(lambda) = p^{delta_exponent(lambda)/2} of every member.
class SatakeFamily {
 public:
  SatakeFamily(int n, long p, int radius, bool parallel = true, int box_exponent = -1);

  int rank() const { return n_; }
  long prime() const { return p_; }
  int radius() const { return a_; }

  // throws InvalidArgument when lambda is not a dominant element of the box
  const TorusFunction& chi(const Coweight& lambda) const;
  const std::vector<Coweight>& lambdas() const { return doms_; }

 private:
  int n_;
  long p_;
  int a_;
  std::vector<Coweight> doms_;
  std::map<Coweight, TorusFunction> chi_;
};

// single transform; builds a family of radius ||lambda||_inf
TorusFunction satake_chi(const Coweight& lambda, long p);

// direct rational-arithmetic evaluation over an explicit matrix transversal;
// slow, kept as the testing reference for the integer sweep
TorusFunction satake_chi_reference(const Coweight& lambda, long p, int box_exponent = -1);

// Expansion f = sum_lambda a_lambda chi_lambda of a Weyl-invariant f by
// back-substitution in decreasing order of leading terms.  Exact; throws
// InvalidArgument if f is not in the span of the family.
std::map<Coweight, ExactComplex> to_chi_basis(const TorusFunction& f,
                                              const SatakeFamily& fam);

TorusFunction from_chi_basis(const std::map<Coweight, ExactComplex>& coeff,
                             const SatakeFamily& fam);

}  // namespace hecke
