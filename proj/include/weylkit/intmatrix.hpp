#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylkit/rational.hpp"

namespace weylkit {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Int> col(std::size_t c) const;
    std::vector<Int> row(std::size_t r) const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact rank over Q.
std::size_t rank(const IntMatrix& m);

// Basis of the integer kernel lattice {a : m a = 0}, one column per basis
// vector, normalized to column Hermite form (transpose-of-row-HNF) so output
// is canonical. Full-rank injective maps return a matrix with zero columns.
// The basis generates the full lattice, not merely a finite-index sublattice.
IntMatrix integer_kernel(const IntMatrix& m);

// Row-style Hermite normal form (upper echelon, positive pivots, entries
// above a pivot reduced into [0, pivot)).
IntMatrix hermite_rows(const IntMatrix& m);

// Diagonal of the Smith normal form (invariant factors, non-negative,
// each dividing the next; trailing zeros trimmed).
std::vector<Int> smith_invariants(const IntMatrix& m);

// One particular rational solution of m x = rhs with free variables set to
// zero; pivots chosen leftmost-first. Throws domain_error naming the failing
// row when inconsistent.
std::vector<Rat> solve_rational(const IntMatrix& m, const std::vector<Rat>& rhs);

// m v for rational v.
std::vector<Rat> mat_apply(const IntMatrix& m, const std::vector<Rat>& v);

}  // namespace weylkit
