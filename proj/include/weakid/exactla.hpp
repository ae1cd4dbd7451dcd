#pragma once

// Exact sparse linear algebra over the rationals.
//
// Every rank, kernel and subspace comparison in the toolkit goes through
// this header. Vectors live in a column universe [0, ambient); the mapping
// from columns to words or monomials is owned by the caller.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weakid::exactla {

// mpq_class keeps numerator/denominator canonical (gcd 1, denominator > 0)
// after every arithmetic operation.
using Rational = mpq_class;

using Column = std::uint32_t;

struct Entry {
    Column col;
    Rational value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector with strictly increasing column indices and no stored zeros.
class SparseVec {
public:
    SparseVec() = default;

    /// Builds a vector from arbitrary entries: canonicalizes, sorts, sums
    /// duplicates and drops zeros.
    static SparseVec from_entries(std::vector<Entry> entries);
    /// Trusts the caller that entries are sorted, unique and nonzero.
    static SparseVec from_sorted(std::vector<Entry> entries);
    static SparseVec unit(Column col);

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t nnz() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::optional<Column> leading() const noexcept;
    Rational coeff(Column col) const;
    Column max_column() const noexcept { return entries_.empty() ? 0 : entries_.back().col; }

    SparseVec scaled(const Rational& s) const;
    /// this + s * other
    SparseVec axpy(const Rational& s, const SparseVec& other) const;
    /// Multiplies by the smallest positive rational making the leading entry 1.
    SparseVec normalized() const;

    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    std::vector<Entry> entries_;
};

/// Reduced row-echelon basis of a subspace of Q^ambient.
///
/// Rows are kept sorted by pivot column, every pivot entry is 1 and pivot
/// columns are zero in all other rows. Because the RREF of a subspace is
/// unique, two Subspace objects compare equal iff they span the same space.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    std::span<const SparseVec> rows() const noexcept { return rows_; }
    std::span<const Column> pivots() const noexcept { return pivots_; }
    std::optional<std::size_t> row_of_pivot(Column col) const;

    /// Residue of v modulo the subspace; it has no entries in pivot columns.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const;

    /// Adds v to the span, keeping the RREF. Returns true when the dimension
    /// grew.
    bool insert(const SparseVec& v);

    /// Adopts rows that are already in RREF. Validates the shape.
    static Subspace from_rref(std::vector<SparseVec> rows, std::size_t ambient);

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    void check_column(Column c) const;

    std::size_t ambient_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<Column> pivots_;
    // pivot_row_[c] = row index + 1, or 0 when c is not a pivot column
    std::vector<std::uint32_t> pivot_row_;
};

/// RREF basis of the span of `vectors`. Rows are fed in order of leading
/// column, shortest row first among equal leads.
Subspace echelonize(std::span<const SparseVec> vectors, std::size_t ambient);

/// Columns of a [rows x ncols] matrix: {v : M v = 0}, returned in RREF.
Subspace kernel_basis(std::span<const SparseVec> rows, std::size_t ncols);

bool subspace_contains(const Subspace& s, const SparseVec& v);
bool subspace_equal(const Subspace& a, const Subspace& b);
/// true iff every basis row of `small` lies in `big`.
bool subspace_includes(const Subspace& big, const Subspace& small);

/// RREF basis of a ∩ b (Zassenhaus).
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

std::size_t rank(std::span<const SparseVec> vectors, std::size_t ambient);

// ---------------------------------------------------------------------------
// Modular arithmetic self-check path. Never used as a primary result.

struct ModRow {
    Column pivot;
    std::vector<std::pair<Column, std::uint64_t>> entries;

    friend bool operator==(const ModRow&, const ModRow&) = default;
};

bool is_prime_u64(std::uint64_t n);
/// Deterministically derives `count` distinct primes in [2^61, 2^62) from `seed`.
std::vector<std::uint64_t> pick_primes_62bit(std::size_t count, std::uint64_t seed);

/// Image of a rational in Z/p. Throws if p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

/// RREF over Z/p of the reductions of `vectors`.
std::vector<ModRow> rref_mod(std::span<const SparseVec> vectors, std::uint64_t p);
std::size_t rank_mod(std::span<const SparseVec> vectors, std::uint64_t p);
/// Rows of an exact RREF reduced mod p.
std::vector<ModRow> reduce_rref_mod(const Subspace& s, std::uint64_t p);

/// Recomputes the rank modulo two 62-bit primes and compares with the exact
/// rank of `s`.
bool modular_rank_agrees(std::span<const SparseVec> vectors, const Subspace& s,
                         std::uint64_t seed = 0x5eed);

std::string to_string(const SparseVec& v);

} // namespace weakid::exactla
