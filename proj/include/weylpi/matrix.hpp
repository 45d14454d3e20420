#pragma once
// Exact dense linear algebra over Q and F_p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weylpi/scalar.hpp"

namespace weylpi {

class ExactMatrix {
public:
    ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    /// Integer entries, converted into `field`.
    static ExactMatrix from_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// M v
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;  // row-major
};

struct EliminationOptions {
    /// Over Q: clear denominators and run Bareiss elimination on integers.
    bool fraction_free = false;
    /// Over Q: number of random primes tried first. A prime whose rank is
    /// already min(rows, cols) settles the answer; otherwise exact elimination runs.
    int screening_primes = 0;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero entry,
/// scanning columns left to right). Pivot columns are appended to `pivots`.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const ExactMatrix& m, const EliminationOptions& opts = {});

/// Basis of {v : M v = 0}, one vector per non-pivot column f taken in increasing
/// order, normalized so that v[f] = 1 and v vanishes on the other free columns.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

/// Sparse integer row: (column, value) pairs.
using SparseIntRow = std::vector<std::pair<std::uint32_t, long>>;

/// Incremental row echelon form over F_p (p < 2^32), dense rows.
/// Row operations go through the simd kernels.
class ModularEchelon {
public:
    ModularEchelon(std::uint32_t p, std::size_t cols);

    /// Reduces the row against the stored pivots; returns true when it was
    /// independent (and is then stored).
    bool add_row(std::vector<std::uint32_t> row);
    bool add_row(const SparseIntRow& row);

    std::size_t rank() const noexcept { return pivot_rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

private:
    std::uint32_t p_;
    std::size_t cols_;
    std::vector<std::int64_t> pivot_of_;  // column -> index into pivot_rows_, or -1
    std::vector<std::vector<std::uint32_t>> pivot_rows_;
};

/// Incremental row echelon form over Q for integer rows. Rows are kept
/// primitive over Z, so no fractions appear.
class RationalEchelon {
public:
    explicit RationalEchelon(std::size_t cols);

    bool add_row(const SparseIntRow& row);
    std::size_t rank() const noexcept { return pivot_rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t cols_;
    std::vector<std::int64_t> pivot_of_;
    std::vector<std::vector<mpz_class>> pivot_rows_;
};

/// Rank over F_p of integer rows.
std::size_t modular_rank(std::span<const SparseIntRow> rows, std::size_t cols, std::uint32_t p);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Fixed list of primes just below 2^26 used for screening.
std::span<const std::uint32_t> screening_primes();

}  // namespace weylpi
