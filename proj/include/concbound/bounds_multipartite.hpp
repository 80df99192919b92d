#pragma once

#include <array>
#include <map>

#include "concbound/bounds_bipartite.hpp"

namespace concbound {

/// Coefficient triple x = (u, v, w) for the three splits 1|23, 2|13, 3|12.
class TripleCoefficients {
 public:
  TripleCoefficients(std::vector<Complex> u, std::vector<Complex> v, std::vector<Complex> w);

  static TripleCoefficients ones(int k);

  /// Splits a flat (u, v, w) list of length 3k.
  static TripleCoefficients from_flat(const std::vector<Complex>& flat);

  const std::vector<Complex>& u() const { return u_; }
  const std::vector<Complex>& v() const { return v_; }
  const std::vector<Complex>& w() const { return w_; }
  int size() const { return static_cast<int>(u_.size()); }
  std::vector<Complex> flat() const;

 private:
  std::vector<Complex> u_, v_, w_;
};

/// Generator families for 1|23, 2|13, 3|12 aligned by index t.
using GeneratorTriple = std::array<GeneratorSet, 3>;

using TripleAssignments = std::map<SubsetSelector, TripleCoefficients>;

/// Per-split assignments for the bipartition-wise bound, split order 1|23,
/// 2|13, 3|12.
using SplitAssignments = std::array<Assignments, 3>;

/// sqrt(3 - (Tr rho_1^2 + Tr rho_2^2 + Tr rho_3^2)).
double ctau_pure(const PureState& psi);

/// S_tot = sum_s (u_s J^{1|23}_{t_s} + v_s J^{2|13}_{t_s} + w_s J^{3|12}_{t_s}).
CMatrix combine_triple(const GeneratorTriple& gens, const SubsetSelector& t, const TripleCoefficients& x);

double delta_tot_k(const DensityMatrix& rho, const GeneratorTriple& gens, const SubsetSelector& t,
                   const TripleCoefficients& x);

/// N / (6 k^2 C(N, k)) * sum over assigned subsets of (Delta_tot)^2, a lower
/// bound on C_tau(rho)^2. With the single-member example families N = k = 1.
BoundReport observation2_bound(const DensityMatrix& rho, const GeneratorTriple& gens, int k,
                               const TripleAssignments& assignments);

/// 1/2 * N / (k^2 C(N, k)) * sum over splits and subsets of Delta^2, i.e. half
/// the sum of the three bipartite aggregates.
BoundReport observation3_bound(const DensityMatrix& rho, const GeneratorTriple& gens, int k,
                               const SplitAssignments& assignments);

}  // namespace concbound
