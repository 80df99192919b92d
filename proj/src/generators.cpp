#include "concbound/generators.hpp"

#include <algorithm>
#include <set>

#include "concbound/numerics.hpp"
#include "concbound/states.hpp"

namespace concbound {

Bipartition::Bipartition(std::vector<int> side_a, int parties) : parties_(parties) {
  if (parties < 2) throw Error(ErrorCode::BadSplit, "need at least two parties");
  std::set<int> a;
  for (int s : side_a) {
    if (s < 0 || s >= parties || !a.insert(s).second) throw Error(ErrorCode::BadSplit, "bad party index");
  }
  if (a.empty() || static_cast<int>(a.size()) == parties) throw Error(ErrorCode::BadSplit, "both sides must be nonempty");
  side_a_.assign(a.begin(), a.end());
  for (int s = 0; s < parties; ++s) {
    if (!a.count(s)) side_b_.push_back(s);
  }
}

Bipartition Bipartition::parse(const std::string& label, int parties) {
  const auto bar = label.find('|');
  if (bar == std::string::npos) throw Error(ErrorCode::BadSplit, "expected A|B, got " + label);
  std::vector<int> a;
  std::set<int> all;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i == bar) continue;
    const char c = label[i];
    if (c < '1' || c > '9') throw Error(ErrorCode::BadSplit, "bad label " + label);
    const int party = c - '1';
    if (!all.insert(party).second) throw Error(ErrorCode::BadSplit, "repeated party in " + label);
    if (i < bar) a.push_back(party);
  }
  if (static_cast<int>(all.size()) != parties) throw Error(ErrorCode::BadSplit, "label must cover all parties");
  return Bipartition(a, parties);
}

Bipartition Bipartition::single(int party, int parties) { return Bipartition({party}, parties); }

std::string Bipartition::label() const {
  std::string out;
  for (int s : side_a_) out += char('1' + s);
  out += '|';
  for (int s : side_b_) out += char('1' + s);
  return out;
}

std::array<Bipartition, 3> tripartite_splits() {
  return {Bipartition::single(0, 3), Bipartition::single(1, 3), Bipartition::single(2, 3)};
}

GeneratorSet::GeneratorSet(std::vector<CMatrix> operators, std::vector<GeneratorIndex> index, std::string split_label,
                           int dim_a, int dim_b)
    : operators_(std::move(operators)), index_(std::move(index)), split_label_(std::move(split_label)),
      dim_a_(dim_a), dim_b_(dim_b) {
  if (index_.size() != operators_.size()) throw Error(ErrorCode::LengthMismatch, "index map size");
  for (const auto& op : operators_) {
    if (symmetry_defect(op) != 0.0) throw Error(ErrorCode::NotSymmetric, "generator is not symmetric");
  }
}

int generator_count(int m, int n) { return m * n * (m - 1) * (n - 1) / 4; }

namespace {

std::vector<std::array<int, 2>> ordered_pairs(int d) {
  std::vector<std::array<int, 2>> out;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) out.push_back({i, j});
  }
  return out;
}

}  // namespace

std::vector<CMatrix> so_generators(int d) {
  if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d = " + std::to_string(d));
  std::vector<CMatrix> out;
  for (auto [i, j] : ordered_pairs(d)) {
    CMatrix l = CMatrix::Zero(d, d);
    l(i, j) = 1.0;
    l(j, i) = -1.0;
    out.push_back(std::move(l));
  }
  return out;
}

GeneratorSet bipartite_generators(int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorCode::DimensionTooSmall, "need m, n >= 2");
  const auto la = so_generators(m);
  const auto sb = so_generators(n);
  const auto pa = ordered_pairs(m);
  const auto pb = ordered_pairs(n);
  std::vector<CMatrix> ops;
  std::vector<GeneratorIndex> index;
  for (std::size_t a = 0; a < la.size(); ++a) {
    for (std::size_t b = 0; b < sb.size(); ++b) {
      ops.push_back(kron(la[a], sb[b]));
      index.push_back({pa[a], pb[b]});
    }
  }
  return GeneratorSet(std::move(ops), std::move(index), "1|2", m, n);
}

CMatrix embed_ordered(const CMatrix& op, const Dims& dims, const std::vector<int>& order) {
  const int n = total_dimension(dims);
  if (op.rows() != n || op.cols() != n) throw Error(ErrorCode::DimensionMismatch, "operator vs dims");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    if (sorted[s] != static_cast<int>(s) || sorted.size() != dims.size()) {
      throw Error(ErrorCode::BadSubsystemIndex, "order must be a permutation of the factors");
    }
  }
  // perm[canonical index] = index in the `order` layout
  std::vector<int> perm(n);
  for (int c = 0; c < n; ++c) {
    std::vector<int> digit(dims.size());
    int rem = c;
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
      digit[s] = rem % dims[s];
      rem /= dims[s];
    }
    int idx = 0;
    for (int f : order) idx = idx * dims[f] + digit[f];
    perm[c] = idx;
  }
  CMatrix out(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = op(perm[r], perm[c]);
  }
  return out;
}

GeneratorSet tripartite_generators(int d, const Bipartition& split) {
  if (split.parties() != 3 || split.side_a().size() != 1) {
    throw Error(ErrorCode::BadSplit, "expected one of 1|23, 2|13, 3|12");
  }
  const GeneratorSet flat = bipartite_generators(d, d * d);
  std::vector<int> order = split.side_a();
  order.insert(order.end(), split.side_b().begin(), split.side_b().end());
  const Dims dims{d, d, d};
  std::vector<CMatrix> ops;
  for (const auto& op : flat.operators()) ops.push_back(embed_ordered(op, dims, order));
  return GeneratorSet(std::move(ops), flat.index_map(), split.label(), d, d * d);
}

std::array<GeneratorSet, 3> tripartite_generator_triple(int d) {
  const auto splits = tripartite_splits();
  return {tripartite_generators(d, splits[0]), tripartite_generators(d, splits[1]),
          tripartite_generators(d, splits[2])};
}

std::array<CMatrix, 3> example_operators(ExampleFamily family) {
  CMatrix single = CMatrix::Zero(2, 2);
  single(0, 1) = 1.0;
  single(1, 0) = -1.0;
  CMatrix pair = CMatrix::Zero(4, 4);
  if (family == ExampleFamily::Ghz) {
    pair(0, 3) = 1.0;  // |00><11|
    pair(3, 0) = -1.0;
  } else {
    pair(0, 2) = 1.0;  // |00><10|
    pair(2, 0) = -1.0;
  }
  const CMatrix local = kron(single, pair);
  const Dims dims{2, 2, 2};
  std::array<CMatrix, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[static_cast<std::size_t>(i)] = embed_ordered(local, dims, {i, (i + 1) % 3, (i + 2) % 3});
  }
  return out;
}

std::array<GeneratorSet, 3> example_generator_triple(ExampleFamily family) {
  const auto ops = example_operators(family);
  const auto splits = tripartite_splits();
  const std::array<int, 2> pair_index = family == ExampleFamily::Ghz ? std::array{0, 3} : std::array{0, 2};
  auto wrap = [&](int i) {
    return GeneratorSet({ops[static_cast<std::size_t>(i)]}, {GeneratorIndex{{0, 1}, pair_index}},
                        splits[static_cast<std::size_t>(i)].label(), 2, 4);
  };
  return {wrap(0), wrap(1), wrap(2)};
}

}  // namespace concbound
