// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netbell/errors.hpp"

namespace netbell {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Index kMaxKronDim = Index{1} << 14;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

inline CMatrix identity(Index dim) { return CMatrix::Identity(dim, dim); }

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_y() {
  const Complex i{0.0, 1.0};
  CMatrix m(2, 2);
  m << 0, -i, i, 0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double hermiticity_defect(const CMatrix& m) {
  return max_abs(m - m.adjoint());
}

inline bool is_power_of_two(Index d) { return d > 0 && (d & (d - 1)) == 0; }

inline int qubit_count(Index dim) {
  if (!is_power_of_two(dim)) {
    throw ShapeError("dimension " + std::to_string(dim) +
                     " is not a power of two");
  }
  int q = 0;
  while ((Index{1} << q) < dim) ++q;
  return q;
}

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeError(std::string(what) + " must be a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw ContractError(std::string(what) + " has non-finite entries");
  }
}

/// Entry ((i*b+k),(j*b+l)) = a(i,j) b(k,l).
inline CMatrix kron(const CMatrix& a, const CMatrix& b,
                    Index max_dim = kMaxKronDim) {
  require_square(a, "kron operand");
  require_square(b, "kron operand");
  if (a.rows() > max_dim / b.rows()) {
    throw CapacityError("kron result dimension exceeds " +
                        std::to_string(max_dim));
  }
  return Eigen::kroneckerProduct(a, b).eval();
}

inline CMatrix kron_all(const std::vector<CMatrix>& factors,
                        Index max_dim = kMaxKronDim) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f, max_dim);
  return out;
}

inline CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  return a * b + b * a;
}

/// Cos(angle) I - i sin(angle) (axis . sigma); axis is normalized here.
inline CMatrix rotation(double ax, double ay, double az, double angle) {
  const double norm = std::sqrt(ax * ax + ay * ay + az * az);
  if (!(norm > 0.0)) throw DomainError("rotation axis must be nonzero");
  const Complex i{0.0, 1.0};
  CMatrix gen = (ax * pauli_x() + ay * pauli_y() + az * pauli_z()) / norm;
  return std::cos(angle) * identity(2) - i * std::sin(angle) * gen;
}

/// Ordered list of labelled qubit blocks. Qubit 0 is the most significant.
class QubitLayout {
 public:
  struct Block {
    std::string party;
    std::string role;
    int qubits;
  };

  QubitLayout() = default;
  explicit QubitLayout(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
      if (b.qubits <= 0) {
        throw ShapeError("block " + b.party + " needs a positive qubit count");
      }
      offsets_.push_back(total_);
      total_ += b.qubits;
    }
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  int total_qubits() const { return total_; }
  Index dim() const { return Index{1} << total_; }
  int offset(std::size_t block) const { return offsets_.at(block); }

  std::vector<int> qubits_of(std::size_t block) const {
    std::vector<int> q;
    for (int i = 0; i < blocks_.at(block).qubits; ++i) q.push_back(offsets_[block] + i);
    return q;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> offsets_;
  int total_ = 0;
};

/// Acts as `op` on `qubits` (first listed is the most significant) and as the
/// identity on the remaining qubits of a `total_qubits` register.
inline CMatrix embed_qubits(const CMatrix& op, int total_qubits,
                            const std::vector<int>& qubits) {
  require_square(op, "embedded operator");
  const int k = static_cast<int>(qubits.size());
  if (op.rows() != (Index{1} << k)) {
    throw ShapeError("operator of dim " + std::to_string(op.rows()) +
                     " cannot act on " + std::to_string(k) + " qubits");
  }
  if (total_qubits > 30) throw CapacityError("register too large");
  const Index dim = Index{1} << total_qubits;
  if (dim > kMaxKronDim) throw CapacityError("register dimension too large");
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> bit(k);
  for (int t = 0; t < k; ++t) {
    const int q = qubits[t];
    if (q < 0 || q >= total_qubits) throw ShapeError("qubit index out of range");
    bit[t] = std::uint64_t{1} << (total_qubits - 1 - q);
    if (mask & bit[t]) throw ShapeError("repeated qubit in embedding");
    mask |= bit[t];
  }
  const Index sub = Index{1} << k;
  std::vector<std::uint64_t> scatter(sub, 0);
  for (Index s = 0; s < sub; ++s) {
    for (int t = 0; t < k; ++t) {
      if (s & (Index{1} << (k - 1 - t))) scatter[s] |= bit[t];
    }
  }
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Index rest = 0; rest < dim; ++rest) {
    if (static_cast<std::uint64_t>(rest) & mask) continue;
    for (Index r = 0; r < sub; ++r) {
      for (Index c = 0; c < sub; ++c) {
        out(rest | scatter[r], rest | scatter[c]) = op(r, c);
      }
    }
  }
  return out;
}

inline CMatrix embed(const CMatrix& op, const QubitLayout& layout,
                     std::size_t block) {
  if (block >= layout.blocks().size()) throw ShapeError("no such block");
  const Index want = Index{1} << layout.blocks()[block].qubits;
  if (op.rows() != want || op.cols() != want) {
    throw ShapeError("operator dim " + std::to_string(op.rows()) +
                     " does not match block " + layout.blocks()[block].party +
                     " of dim " + std::to_string(want));
  }
  return embed_qubits(op, layout.total_qubits(), layout.qubits_of(block));
}

class DensityOp;

/// Normalized pure state.
class Ket {
 public:
  explicit Ket(CVector amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.size() == 0 || !amp_.allFinite()) {
      throw ContractError("ket needs finite amplitudes");
    }
    if (std::abs(amp_.norm() - 1.0) > kNormTol) {
      throw ContractError("ket is not normalized");
    }
  }

  /// |index> in a register of `dim` states.
  static Ket basis(Index dim, Index index) {
    if (index < 0 || index >= dim) throw ShapeError("basis index out of range");
    CVector v = CVector::Zero(dim);
    v(index) = 1.0;
    return Ket(std::move(v));
  }

  const CVector& amplitudes() const { return amp_; }
  Index dim() const { return amp_.size(); }
  inline DensityOp projector() const;

 private:
  CVector amp_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOp {
 public:
  explicit DensityOp(CMatrix m) : m_(std::move(m)) {
    require_square(m_, "density operator");
    if (hermiticity_defect(m_) > kNormTol) {
      throw ContractError("density operator is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kNormTol) {
      throw ContractError("density operator trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
      throw ContractError("density operator has a negative eigenvalue");
    }
  }

  const CMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
};

inline DensityOp Ket::projector() const {
  return DensityOp(amp_ * amp_.adjoint());
}

inline void require_observable(const CMatrix& op, Index dim) {
  require_square(op, "observable");
  if (op.rows() != dim) {
    throw ShapeError("operator dim " + std::to_string(op.rows()) +
                     " does not match state dim " + std::to_string(dim));
  }
  if (hermiticity_defect(op) > kHermitianTol) {
    throw ContractError("expectation needs a Hermitian operator");
  }
}

inline double real_part_checked(Complex z) {
  if (std::abs(z.imag()) > kHermitianTol) {
    throw ContractError("expectation has an imaginary residue");
  }
  return z.real();
}

inline double expectation(const Ket& state, const CMatrix& op) {
  require_observable(op, state.dim());
  return real_part_checked(state.amplitudes().dot(op * state.amplitudes()));
}

inline double expectation(const DensityOp& state, const CMatrix& op) {
  require_observable(op, state.dim());
  return real_part_checked(state.matrix().cwiseProduct(op.transpose()).sum());
}

/// ||op |psi>||.
inline double action_norm(const Ket& state, const CMatrix& op) {
  require_square(op, "operator");
  if (op.rows() != state.dim()) throw ShapeError("operator/state dim mismatch");
  return (op * state.amplitudes()).norm();
}

using QubitPair = std::pair<int, int>;

namespace detail {

inline std::uint64_t qubit_bit(int total, int q) {
  return std::uint64_t{1} << (total - 1 - q);
}

inline void check_pairs(int total, const std::vector<QubitPair>& pairs) {
  if (total <= 0) throw ShapeError("register needs at least one qubit");
  if (total > 30 || (Index{1} << total) > kMaxKronDim) {
    throw CapacityError("register of " + std::to_string(total) +
                        " qubits exceeds the dimension limit");
  }
  std::uint64_t seen = 0;
  for (const auto& [a, b] : pairs) {
    for (int q : {a, b}) {
      if (q < 0 || q >= total) throw ShapeError("pair qubit out of range");
      const auto m = qubit_bit(total, q);
      if (seen & m) throw ShapeError("qubit used by two pairs");
      seen |= m;
    }
  }
}

inline std::uint64_t unpaired_mask(int total, const std::vector<QubitPair>& pairs) {
  std::uint64_t all = (std::uint64_t{1} << total) - 1;
  for (const auto& [a, b] : pairs) {
    all &= ~qubit_bit(total, a);
    all &= ~qubit_bit(total, b);
  }
  return all;
}

}  // namespace detail

/// Each listed pair holds (|00>+|11>)/sqrt2; unpaired qubits are |0>.
inline Ket paired_ket(int total_qubits, const std::vector<QubitPair>& pairs) {
  detail::check_pairs(total_qubits, pairs);
  const Index dim = Index{1} << total_qubits;
  const std::uint64_t free = detail::unpaired_mask(total_qubits, pairs);
  const double amp = std::pow(0.5, 0.5 * static_cast<double>(pairs.size()));
  CVector v = CVector::Zero(dim);
  for (Index x = 0; x < dim; ++x) {
    const auto ux = static_cast<std::uint64_t>(x);
    if (ux & free) continue;
    bool ok = true;
    for (const auto& [a, b] : pairs) {
      if (((ux & detail::qubit_bit(total_qubits, a)) != 0) !=
          ((ux & detail::qubit_bit(total_qubits, b)) != 0)) {
        ok = false;
        break;
      }
    }
    if (ok) v(x) = amp;
  }
  return Ket(std::move(v));
}

/// Pairs qubit i of the left block with qubit i of the right block.
inline Ket bell_pairs(int n_pairs) {
  if (n_pairs < 1) throw DomainError("bell_pairs needs at least one pair");
  std::vector<QubitPair> pairs;
  for (int i = 0; i < n_pairs; ++i) pairs.emplace_back(i, n_pairs + i);
  return paired_ket(2 * n_pairs, pairs);
}

inline CMatrix werner_matrix(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("visibility must lie in [0,1]");
  }
  CVector phi = CVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  return v * (phi * phi.adjoint()) + (1.0 - v) * identity(4) / 4.0;
}

/// v |phi+><phi+| + (1-v) I/4.
inline DensityOp werner(double v) { return DensityOp(werner_matrix(v)); }

/// Tensor product of werner(visibility[p]) over the listed pairs, with the
/// unpaired qubits in |0><0|.
inline DensityOp paired_density(int total_qubits,
                                const std::vector<QubitPair>& pairs,
                                const std::vector<double>& visibility) {
  detail::check_pairs(total_qubits, pairs);
  if (visibility.size() != pairs.size()) {
    throw ShapeError("one visibility per pair is required");
  }
  std::vector<CMatrix> w;
  for (double v : visibility) w.push_back(werner_matrix(v));
  const Index dim = Index{1} << total_qubits;
  const std::uint64_t free = detail::unpaired_mask(total_qubits, pairs);
  auto local = [&](std::uint64_t x, const QubitPair& p) {
    const int hi = (x & detail::qubit_bit(total_qubits, p.first)) ? 1 : 0;
    const int lo = (x & detail::qubit_bit(total_qubits, p.second)) ? 1 : 0;
    return 2 * hi + lo;
  };
  CMatrix rho = CMatrix::Zero(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    if (ur & free) continue;
    for (Index c = 0; c < dim; ++c) {
      const auto uc = static_cast<std::uint64_t>(c);
      if (uc & free) continue;
      Complex e = 1.0;
      for (std::size_t p = 0; p < pairs.size() && e != Complex(0.0); ++p) {
        e *= w[p](local(ur, pairs[p]), local(uc, pairs[p]));
      }
      rho(r, c) = e;
    }
  }
  return DensityOp(std::move(rho));
}

}  // namespace netbell
