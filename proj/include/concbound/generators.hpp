#pragma once

#include <array>
#include <string>
#include <vector>

#include "concbound/types.hpp"

namespace concbound {

/// Two-sided split of a multipartite system into complementary party sets.
class Bipartition {
 public:
  Bipartition(std::vector<int> side_a, int parties);

  /// Parses labels such as "1|23" or "2|13" (parties numbered from 1).
  static Bipartition parse(const std::string& label, int parties);

  /// Party `i` (0-based) against everyone else.
  static Bipartition single(int party, int parties);

  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }
  int parties() const { return parties_; }
  std::string label() const;

  bool operator==(const Bipartition&) const = default;

 private:
  std::vector<int> side_a_;
  std::vector<int> side_b_;
  int parties_;
};

/// The three one-vs-two splits of a tripartite system, in the order
/// 1|23, 2|13, 3|12.
std::array<Bipartition, 3> tripartite_splits();

/// Generator position: index pairs (i<j) on side A and (k<l) on side B.
struct GeneratorIndex {
  std::array<int, 2> a_pair;
  std::array<int, 2> b_pair;
};

/// Ordered family of symmetric operators J_t = L_alpha (x) S_beta, each
/// embedded in the full Hilbert space of the state it acts on.
class GeneratorSet {
 public:
  GeneratorSet(std::vector<CMatrix> operators, std::vector<GeneratorIndex> index, std::string split_label,
               int dim_a, int dim_b);

  int count() const { return static_cast<int>(operators_.size()); }
  const CMatrix& operator[](int t) const { return operators_.at(static_cast<std::size_t>(t)); }
  const std::vector<CMatrix>& operators() const { return operators_; }
  const std::vector<GeneratorIndex>& index_map() const { return index_; }
  const std::string& split_label() const { return split_label_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dimension() const { return operators_.empty() ? 0 : static_cast<int>(operators_.front().rows()); }

 private:
  std::vector<CMatrix> operators_;
  std::vector<GeneratorIndex> index_;
  std::string split_label_;
  int dim_a_;
  int dim_b_;
};

/// N = m n (m-1) (n-1) / 4.
int generator_count(int m, int n);

/// SO(d) generators |i><j| - |j><i| for i < j, lexicographic.
std::vector<CMatrix> so_generators(int d);

/// All L_alpha (x) S_beta on an m x n system, lexicographic in (alpha, beta).
GeneratorSet bipartite_generators(int m, int n);

/// Generators of the d vs d^2 split of a d x d x d system, embedded in the
/// full d^3 space. The pair side keeps its parties in increasing order.
GeneratorSet tripartite_generators(int d, const Bipartition& split);

/// The three aligned canonical families for 1|23, 2|13, 3|12.
std::array<GeneratorSet, 3> tripartite_generator_triple(int d);

/// Operator acting on the tensor factors listed in `order` (most significant
/// first), re-expressed in the canonical factor order of `dims`.
CMatrix embed_ordered(const CMatrix& op, const Dims& dims, const std::vector<int>& order);

enum class ExampleFamily { Ghz, W };

/// Hand-picked three-qubit operators J^{i|jk} = S^(i) (x) L^(jk), one per
/// split in the order 1|23, 2|13, 3|12. The pair (j, k) follows the cyclic
/// order (2,3), (3,1), (1,2).
std::array<CMatrix, 3> example_operators(ExampleFamily family);

/// Wraps each example operator as a single-member family so it can be used
/// wherever a canonical triple is accepted.
std::array<GeneratorSet, 3> example_generator_triple(ExampleFamily family);

}  // namespace concbound
