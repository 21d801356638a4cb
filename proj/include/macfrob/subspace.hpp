#pragma once

#include "macfrob/bigint.hpp"
#include "macfrob/errors.hpp"
#include "macfrob/field.hpp"
#include "macfrob/linalg.hpp"
#include "macfrob/monomial.hpp"

#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

namespace macfrob {

/// A u-dimensional subspace of S_d over an exact field. Rows are the
/// coefficient vectors of a basis of forms, columns indexed by the
/// interned monomial rank of a GradedBasis (descending term order).
/// The basis is kept in reduced row echelon form, so row r's first
/// nonzero column is the r-th leading monomial.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace(F field, BasisPtr basis, MatrixRows<F> rows)
      : field_(std::move(field)), basis_(std::move(basis)), rows_(std::move(rows)) {
    for (const auto& row : rows_) {
      if (row.size() != basis_->dimension())
        throw std::invalid_argument("coefficient vector length must equal dim S_d");
    }
    canonicalize();
  }

  static Subspace from_forms(F field, int n, int d, MatrixRows<F> forms,
                             TermOrder order = TermOrder::Lex) {
    return Subspace(std::move(field), make_basis(n, d, order), std::move(forms));
  }

  /// Uniform random u-dimensional subspace over GF(p), redrawn until the
  /// rows are independent. Deterministic for a given seed.
  static Subspace random(F field, int n, int d, std::size_t u, std::uint64_t seed,
                         TermOrder order = TermOrder::Lex) {
    if constexpr (!std::is_same_v<F, PrimeField>) {
      throw std::invalid_argument("random sampling requires a prime field");
    } else {
      BasisPtr basis = make_basis(n, d, order);
      if (u > basis->dimension())
        throw std::invalid_argument("requested dimension exceeds dim S_d");
      std::mt19937_64 eng(seed);
      const std::uint64_t p = field.modulus();
      for (int attempt = 0; attempt < 256; ++attempt) {
        MatrixRows<F> rows(u, std::vector<Elem>(basis->dimension()));
        for (auto& row : rows) {
          for (auto& cell : row) cell = static_cast<Elem>(eng() % p);
        }
        if (matrix_rank(field, rows) == u) return Subspace(field, basis, std::move(rows));
      }
      throw std::runtime_error("failed to draw a full-rank subspace after 256 attempts");
    }
  }

  const F& field() const noexcept { return field_; }
  const GradedBasis& basis() const noexcept { return *basis_; }
  int arity() const noexcept { return basis_->arity(); }
  int degree() const noexcept { return basis_->degree(); }
  TermOrder order() const noexcept { return basis_->order(); }
  std::size_t dim() const noexcept { return rows_.size(); }
  const MatrixRows<F>& rows() const noexcept { return rows_; }

  bool is_monomial() const {
    for (const auto& row : rows_) {
      std::size_t nz = 0;
      for (const auto& cell : row) {
        if (!field_.is_zero(cell)) ++nz;
      }
      if (nz != 1) return false;
    }
    return true;
  }

  /// dim V^j: exact rank of the matrix of all degree-j products of the
  /// basis rows inside S_{jd}. Throws SizeCapError when the product
  /// matrix would exceed caps.matrix_cells.
  std::int64_t power_dimension(int j, const Caps& caps = default_caps()) const {
    if (j < 1) throw std::invalid_argument("power requires j >= 1");
    const std::size_t u = dim();
    if (u == 0) return 0;
    const int n = arity();
    const int d = degree();
    BigInt combos = binomial(static_cast<std::int64_t>(u) + j - 1, j);
    BigInt target = dim_graded_component(n, j * d);
    if (combos * target > BigInt(caps.matrix_cells)) {
      throw SizeCapError("product matrix too large: " + (combos * target).str() +
                         " cells; raise the cap, lower j, or use the monomial fast path");
    }
    std::vector<BasisPtr> bases(static_cast<std::size_t>(j) + 1);
    bases[1] = basis_;
    for (int k = 2; k <= j; ++k) bases[static_cast<std::size_t>(k)] = make_basis(n, k * d, order());
    auto sparse = sparse_rows();

    MatrixRows<F> products;
    products.reserve(static_cast<std::size_t>(to_int64_checked(combos, "product count")));
    // Multisets i_1 <= ... <= i_j of row indices, sharing prefix products.
    auto dfs = [&](auto&& self, std::size_t start, int level, const std::vector<Elem>& partial) -> void {
      if (level == j) {
        products.push_back(partial);
        return;
      }
      for (std::size_t i = start; i < u; ++i) {
        self(self, i, level + 1,
             multiply_dense_sparse(partial, *bases[static_cast<std::size_t>(level)], sparse[i],
                                   *bases[static_cast<std::size_t>(level) + 1]));
      }
    };
    for (std::size_t i = 0; i < u; ++i) {
      std::vector<Elem> dense(rows_[i]);
      dfs(dfs, i, 1, dense);
    }
    return static_cast<std::int64_t>(reduced_row_echelon(field_, products));
  }

  /// dim S_jV: exact rank of { m * f : m a degree-j monomial, f a basis
  /// row } inside S_{d+j}; j = 0 returns u.
  std::int64_t ideal_growth_dimension(int j, const Caps& caps = default_caps()) const {
    if (j < 0) throw std::invalid_argument("ideal growth requires j >= 0");
    if (j == 0) return static_cast<std::int64_t>(dim());
    const int n = arity();
    const int d = degree();
    BigInt nrows = dim_graded_component(n, j) * BigInt(dim());
    BigInt target = dim_graded_component(n, d + j);
    if (nrows * target > BigInt(caps.matrix_cells)) {
      throw SizeCapError("ideal-growth matrix too large: " + (nrows * target).str() + " cells");
    }
    GradedBasis sj(n, j, order());
    BasisPtr out_basis = make_basis(n, d + j, order());
    auto sparse = sparse_rows();
    MatrixRows<F> products;
    products.reserve(sj.dimension() * dim());
    for (const Monomial& m : sj.monomials()) {
      for (const auto& row : sparse) {
        std::vector<Elem> prod(out_basis->dimension(), field_.zero());
        for (const auto& [rk, c] : row) {
          prod[out_basis->rank_of(basis_->monomial(rk) * m)] = c;
        }
        products.push_back(std::move(prod));
      }
    }
    return static_cast<std::int64_t>(reduced_row_echelon(field_, products));
  }

  /// Leading monomials of the echelon basis under `ord`; exactly u
  /// monomials. Recanonicalizes when `ord` differs from the stored order.
  MonomialSpace initial_space(TermOrder ord) const {
    if (ord == order() ||
        (compare_equivalent(ord, order()))) {
      return MonomialSpace(arity(), degree(), leading_monomials(*basis_, rows_));
    }
    BasisPtr nb = make_basis(arity(), degree(), ord);
    std::vector<std::size_t> perm(nb->dimension());
    for (std::size_t c = 0; c < nb->dimension(); ++c) perm[c] = basis_->rank_of(nb->monomial(c));
    MatrixRows<F> rows(rows_.size(), std::vector<Elem>(nb->dimension()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < nb->dimension(); ++c) rows[r][c] = rows_[r][perm[c]];
    }
    std::size_t rank = reduced_row_echelon(field_, rows);
    rows.resize(rank);
    return MonomialSpace(arity(), degree(), leading_monomials(*nb, rows));
  }

  MonomialSpace initial_space() const { return initial_space(order()); }

  /// Subspace spanned by f(Ax) for each basis form f; A must be an
  /// invertible n x n matrix over the field.
  Subspace change_of_coordinates(const MatrixRows<F>& a) const {
    const int n = arity();
    if (a.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("coordinate change must be n x n");
    for (const auto& row : a) {
      if (row.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("coordinate change must be n x n");
    }
    if (matrix_rank(field_, a) != static_cast<std::size_t>(n))
      throw std::invalid_argument("coordinate change matrix is singular");

    const int d = degree();
    std::vector<BasisPtr> bases(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k < d; ++k) bases[static_cast<std::size_t>(k)] = make_basis(n, k, order());
    bases[static_cast<std::size_t>(d)] = basis_;

    const std::size_t dim_sd = basis_->dimension();
    // Column c of the substitution map: the expansion of basis monomial c at Ax.
    MatrixRows<F> phi(dim_sd);
    for (std::size_t c = 0; c < dim_sd; ++c) {
      const Monomial& m = basis_->monomial(c);
      std::vector<Elem> vec(1, field_.one());  // degree-0 component
      int k = 0;
      for (int var = 0; var < n; ++var) {
        for (Exponent e = 0; e < m.exponent(var); ++e) {
          vec = multiply_dense_linear(vec, *bases[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(var)],
                                      *bases[static_cast<std::size_t>(k) + 1]);
          ++k;
        }
      }
      phi[c] = std::move(vec);
    }
    MatrixRows<F> out(rows_.size(), std::vector<Elem>(dim_sd, field_.zero()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < dim_sd; ++c) {
        if (field_.is_zero(rows_[r][c])) continue;
        for (std::size_t t = 0; t < dim_sd; ++t) {
          if (!field_.is_zero(phi[c][t]))
            out[r][t] = field_.add(out[r][t], field_.mul(rows_[r][c], phi[c][t]));
        }
      }
    }
    Subspace result(field_, basis_, std::move(out));
    if (result.dim() != dim()) throw std::logic_error("coordinate change changed the dimension");
    return result;
  }

  bool operator==(const Subspace& rhs) const {
    return basis_->arity() == rhs.basis_->arity() && basis_->degree() == rhs.basis_->degree() &&
           basis_->order() == rhs.basis_->order() && rows_ == rhs.rows_;
  }

 private:
  using SparseRow = std::vector<std::pair<std::size_t, Elem>>;

  void canonicalize() {
    std::size_t rank = reduced_row_echelon(field_, rows_);
    rows_.resize(rank);
  }

  std::vector<SparseRow> sparse_rows() const {
    std::vector<SparseRow> out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (!field_.is_zero(rows_[r][c])) out[r].emplace_back(c, rows_[r][c]);
      }
    }
    return out;
  }

  std::vector<Elem> multiply_dense_sparse(const std::vector<Elem>& dense, const GradedBasis& from,
                                          const SparseRow& row, const GradedBasis& to) const {
    std::vector<Elem> out(to.dimension(), field_.zero());
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (field_.is_zero(dense[idx])) continue;
      const Monomial& m = from.monomial(idx);
      for (const auto& [rk, c] : row) {
        std::size_t t = to.rank_of(m * basis_->monomial(rk));
        out[t] = field_.add(out[t], field_.mul(dense[idx], c));
      }
    }
    return out;
  }

  std::vector<Elem> multiply_dense_linear(const std::vector<Elem>& dense, const GradedBasis& from,
                                          const std::vector<Elem>& linear,
                                          const GradedBasis& to) const {
    std::vector<Elem> out(to.dimension(), field_.zero());
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
      if (field_.is_zero(dense[idx])) continue;
      const Monomial& m = from.monomial(idx);
      for (std::size_t var = 0; var < linear.size(); ++var) {
        if (field_.is_zero(linear[var])) continue;
        std::size_t t = to.rank_of(m * Monomial::variable(from.arity(), static_cast<int>(var)));
        out[t] = field_.add(out[t], field_.mul(dense[idx], linear[var]));
      }
    }
    return out;
  }

  static std::vector<Monomial> leading_monomials(const GradedBasis& basis,
                                                 const MatrixRows<F>& rows) {
    std::vector<Monomial> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (!(row[c] == 0)) {
          out.push_back(basis.monomial(c));
          break;
        }
      }
    }
    return out;
  }

  // RevLex and DegRevLex coincide on one graded component.
  static bool compare_equivalent(TermOrder a, TermOrder b) {
    auto norm = [](TermOrder o) { return o == TermOrder::DegRevLex ? TermOrder::RevLex : o; };
    return norm(a) == norm(b);
  }

  F field_;
  BasisPtr basis_;
  MatrixRows<F> rows_;
};

/// The span of a monomial space as a Subspace (one unit row per member).
template <class F>
Subspace<F> subspace_of_monomials(F field, const MonomialSpace& w,
                                  TermOrder order = TermOrder::Lex) {
  BasisPtr basis = make_basis(w.arity(), w.degree(), order);
  MatrixRows<F> rows(w.dim(), std::vector<typename F::Elem>(basis->dimension(), field.zero()));
  for (std::size_t r = 0; r < w.dim(); ++r) {
    rows[r][basis->rank_of(w.members()[r])] = field.one();
  }
  return Subspace<F>(std::move(field), std::move(basis), std::move(rows));
}

using AnySubspace = std::variant<Subspace<PrimeField>, Subspace<RationalField>>;

inline std::size_t any_dim(const AnySubspace& v) {
  return std::visit([](const auto& s) { return s.dim(); }, v);
}
inline std::int64_t any_power_dimension(const AnySubspace& v, int j,
                                        const Caps& caps = default_caps()) {
  return std::visit([&](const auto& s) { return s.power_dimension(j, caps); }, v);
}
inline std::int64_t any_ideal_growth_dimension(const AnySubspace& v, int j,
                                               const Caps& caps = default_caps()) {
  return std::visit([&](const auto& s) { return s.ideal_growth_dimension(j, caps); }, v);
}
inline MonomialSpace any_initial_space(const AnySubspace& v, TermOrder order) {
  return std::visit([&](const auto& s) { return s.initial_space(order); }, v);
}
inline FieldSpec any_field_spec(const AnySubspace& v) {
  return std::visit([](const auto& s) { return s.field().spec(); }, v);
}

}  // namespace macfrob
