// Copyright 2026 The pmgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pmgraph/counting.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "pmgraph/adjacency.hpp"
#include "pmgraph/error.hpp"

namespace pmgraph {

namespace {

template <class T>
void check_hafnian_input(const Matrix<T>& m, const CounterLimits& limits) {
  if (!m.is_square()) throw DomainError("hafnian needs a square matrix");
  if (m.rows() % 2 != 0) throw DomainError("hafnian needs an even order, got " + std::to_string(m.rows()));
  if (m.rows() > 64 || (!limits.override_limits && m.rows() > limits.max_hafnian_order)) {
    throw ScaleLimitError("hafnian order " + std::to_string(m.rows()) + " exceeds the limit");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != T{}) throw DomainError("hafnian needs a zero diagonal");
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw DomainError("hafnian needs a symmetric matrix");
    }
  }
}

template <class T, class Acc>
class HafnianExpansion {
 public:
  explicit HafnianExpansion(const Matrix<T>& m) : m_(m) {}

  Acc run() {
    const std::size_t n = m_.rows();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return expand(all);
  }

 private:
  Acc expand(std::uint64_t remaining) {
    if (remaining == 0) return Acc(1);
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const int i = std::countr_zero(remaining);
    const std::uint64_t rest = remaining & (remaining - 1);
    Acc sum(0);
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      const T& a = m_(i, j);
      if (a == T{}) continue;
      sum += Acc(a) * expand(rest & ~(std::uint64_t{1} << j));
    }
    memo_.emplace(remaining, sum);
    return sum;
  }

  const Matrix<T>& m_;
  std::unordered_map<std::uint64_t, Acc> memo_;
};

template <class T>
void check_permanent_input(const Matrix<T>& m, const CounterLimits& limits) {
  if (!m.is_square()) {
    throw DomainError("permanent needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
  }
  if (m.rows() > 62 || (!limits.override_limits && m.rows() > limits.max_permanent_order)) {
    throw ScaleLimitError("permanent order " + std::to_string(m.rows()) + " exceeds the limit");
  }
}

// perm(A) = (-1)^n sum_{S subset cols} (-1)^{|S|} prod_i sum_{j in S} a_ij
template <class RowSum, class Acc, class T>
Acc ryser(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Acc(1);
  std::vector<RowSum> row_sums(n, RowSum(0));
  Acc total(0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    gray ^= std::uint64_t{1} << j;
    const bool added = (gray >> j) & 1U;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sums[i] += RowSum(m(i, j));
      } else {
        row_sums[i] -= RowSum(m(i, j));
      }
    }
    Acc product(1);
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      if (row_sums[i] == RowSum(0)) {
        zero = true;
      } else {
        product *= Acc(row_sums[i]);
      }
    }
    if (zero) continue;
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return n % 2 == 0 ? total : Acc(-total);
}

}  // namespace

BigInt hafnian(const IntMatrix& m, const CounterLimits& limits) {
  check_hafnian_input(m, limits);
  return HafnianExpansion<std::int64_t, BigInt>(m).run();
}

std::complex<double> hafnian(const ComplexMatrix& m, const CounterLimits& limits) {
  check_hafnian_input(m, limits);
  return HafnianExpansion<std::complex<double>, std::complex<double>>(m).run();
}

BigInt permanent(const IntMatrix& m, const CounterLimits& limits) {
  check_permanent_input(m, limits);
  // Row sums stay in 64 bits as long as every |entry| <= 2^56 / n.
  constexpr std::int64_t kEntryBound = std::int64_t{1} << 56;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t a = m(i, j);
      if (a > kEntryBound / 64 || a < -kEntryBound / 64) {
        throw DomainError("permanent entry magnitude too large for exact row sums");
      }
    }
  }
  return ryser<std::int64_t, BigInt>(m);
}

std::complex<double> permanent(const ComplexMatrix& m, const CounterLimits& limits) {
  check_permanent_input(m, limits);
  return ryser<std::complex<double>, std::complex<double>>(m);
}

MatrixCount count_pm_via_matrix(const ExperimentGraph& g, const CounterLimits& limits) {
  if (g.measured_count() != 0) {
    throw DomainError("matrix counting does not model measured vertices");
  }
  MatrixCount out;
  if (g.vertex_count() % 2 != 0) {
    out.hafnian = 0;
  } else {
    out.hafnian = hafnian(adjacency(g).entries, limits);
  }
  Bipartition parts;
  try {
    parts = two_color(g);
  } catch (const NotBipartiteError&) {
    return out;
  }
  if (parts.x.size() == parts.y.size()) {
    out.permanent = permanent(biadjacency(g, parts).entries, limits);
    if (*out.permanent != out.hafnian) {
      throw std::logic_error("hafnian and permanent disagree on a bipartite graph");
    }
  }
  return out;
}

}  // namespace pmgraph
