#include "weylpi/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "weylpi/simd/kernels.hpp"

namespace weylpi {

ExactMatrix::ExactMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
    const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(field, rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < ncols; ++c) {
            if (rows[r][c] != 0) m(r, c) = Scalar(field, rows[r][c]);
        }
    }
    return m;
}

std::vector<Scalar> ExactMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Scalar> out(rows_, Scalar(field_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

ExactMatrix rref(const ExactMatrix& input, std::vector<std::size_t>* pivots) {
    ExactMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
        }
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j) {
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

namespace {

std::size_t rank_modular_field(const ExactMatrix& m) {
    const auto p = static_cast<std::uint32_t>(m.field().characteristic());
    ModularEchelon ech(p, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::uint32_t> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = static_cast<std::uint32_t>(m(r, c).residue());
        ech.add_row(std::move(row));
    }
    return ech.rank();
}

std::size_t rank_gauss(const ExactMatrix& input) {
    ExactMatrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(piv, j));
        }
        const Scalar inv = m(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

// Bareiss elimination on the integer matrix obtained by clearing row denominators.
std::size_t rank_bareiss(const ExactMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), input(i, j).rational().get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            const mpq_class& q = input(i, j).rational();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Rank of the reduction mod p, or nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_prime(const ExactMatrix& m, std::uint32_t p) {
    const FieldSpec fp = FieldSpec::prime(p);
    ModularEchelon ech(p, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::uint32_t> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            try {
                row[c] = static_cast<std::uint32_t>(Scalar(fp, m(r, c).rational()).residue());
            } catch (const DivisionByZero&) {
                return std::nullopt;
            }
        }
        ech.add_row(std::move(row));
    }
    return ech.rank();
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const EliminationOptions& opts) {
    if (!m.field().is_rational()) return rank_modular_field(m);
    const std::size_t full = std::min(m.rows(), m.cols());
    const auto primes = screening_primes();
    for (int i = 0; i < opts.screening_primes && i < static_cast<int>(primes.size()); ++i) {
        // rank over Q is at least the rank of any reduction.
        if (auto rp = rank_mod_prime(m, primes[static_cast<std::size_t>(i)]); rp && *rp == full) return full;
    }
    return opts.fraction_free ? rank_bareiss(m) : rank_gauss(m);
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    const ExactMatrix red = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(m.field()));
        v[f] = Scalar::one(m.field());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw DivisionByZero();
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

ModularEchelon::ModularEchelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols), pivot_of_(cols, -1) {}

bool ModularEchelon::add_row(std::vector<std::uint32_t> row) {
    row.resize(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        const std::uint32_t v = row[c];
        if (v == 0) continue;
        const auto idx = pivot_of_[c];
        if (idx < 0) {
            const std::span<std::uint32_t> tail(row.data() + c, cols_ - c);
            simd::scale_mod(tail, mod_inverse(v, p_), p_);
            pivot_of_[c] = static_cast<std::int64_t>(pivot_rows_.size());
            pivot_rows_.push_back(std::move(row));
            return true;
        }
        const auto& prow = pivot_rows_[static_cast<std::size_t>(idx)];
        simd::axpy_mod(std::span<std::uint32_t>(row.data() + c, cols_ - c),
                       std::span<const std::uint32_t>(prow.data() + c, cols_ - c), p_ - v, p_);
    }
    return false;
}

bool ModularEchelon::add_row(const SparseIntRow& row) {
    std::vector<std::uint32_t> dense(cols_, 0);
    const auto p = static_cast<long>(p_);
    for (const auto& [c, v] : row) {
        long r = v % p;
        if (r < 0) r += p;
        dense[c] = static_cast<std::uint32_t>((dense[c] + static_cast<std::uint64_t>(r)) % p_);
    }
    return add_row(std::move(dense));
}

RationalEchelon::RationalEchelon(std::size_t cols) : cols_(cols), pivot_of_(cols, -1) {}

bool RationalEchelon::add_row(const SparseIntRow& sparse) {
    std::vector<mpz_class> row(cols_);
    for (const auto& [c, v] : sparse) row[c] += v;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(row[c]) == 0) continue;
        const auto idx = pivot_of_[c];
        if (idx < 0) {
            mpz_class g = 0;
            for (std::size_t j = c; j < cols_; ++j) {
                if (sgn(row[j]) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
            }
            if (sgn(row[c]) < 0) g = -g;
            for (std::size_t j = c; j < cols_; ++j) {
                if (sgn(row[j]) != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
            }
            pivot_of_[c] = static_cast<std::int64_t>(pivot_rows_.size());
            pivot_rows_.push_back(std::move(row));
            return true;
        }
        // row <- a*row - b*prow with a = prow[c]/g, b = row[c]/g
        const auto& prow = pivot_rows_[static_cast<std::size_t>(idx)];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), row[c].get_mpz_t(), prow[c].get_mpz_t());
        const mpz_class a = prow[c] / g, b = row[c] / g;
        for (std::size_t j = c; j < cols_; ++j) {
            if (sgn(prow[j]) == 0) {
                if (sgn(row[j]) != 0) row[j] *= a;
            } else {
                row[j] = a * row[j] - b * prow[j];
            }
        }
    }
    return false;
}

std::size_t modular_rank(std::span<const SparseIntRow> rows, std::size_t cols, std::uint32_t p) {
    ModularEchelon ech(p, cols);
    for (const auto& r : rows) {
        ech.add_row(r);
        if (ech.rank() == cols) break;
    }
    return ech.rank();
}

std::span<const std::uint32_t> screening_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> out;
        for (std::uint32_t n = simd::kMaxVectorModulus - 1; out.size() < 8; n -= 2) {
            if (is_prime(n)) out.push_back(n);
        }
        return out;
    }();
    return primes;
}

}  // namespace weylpi
