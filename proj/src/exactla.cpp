#include "weakid/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weakid::exactla {

namespace {

// Dense scratch row reused across reductions on one thread.
class Accumulator {
public:
    void reset(std::size_t n)
    {
        if (buf_.size() < n) {
            buf_.resize(n);
            mark_.resize(n, 0);
        }
    }

    void add(Column c, const Rational& v)
    {
        touch(c);
        mpq_add(buf_[c].get_mpq_t(), buf_[c].get_mpq_t(), v.get_mpq_t());
    }

    // buf[c] -= a * b
    void sub_mul(Column c, const Rational& a, const Rational& b)
    {
        touch(c);
        mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        mpq_sub(buf_[c].get_mpq_t(), buf_[c].get_mpq_t(), tmp_.get_mpq_t());
    }

    SparseVec take()
    {
        std::sort(touched_.begin(), touched_.end());
        std::vector<Entry> out;
        out.reserve(touched_.size());
        for (Column c : touched_) {
            if (sgn(buf_[c]) != 0) {
                out.push_back({c, buf_[c]});
                buf_[c] = 0;
            }
            mark_[c] = 0;
        }
        touched_.clear();
        return SparseVec::from_sorted(std::move(out));
    }

private:
    void touch(Column c)
    {
        if (!mark_[c]) {
            mark_[c] = 1;
            touched_.push_back(c);
        }
    }

    std::vector<Rational> buf_;
    std::vector<std::uint8_t> mark_;
    std::vector<Column> touched_;
    Rational tmp_;
};

Accumulator& scratch()
{
    thread_local Accumulator acc;
    return acc;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace

// ---------------------------------------------------------------------------
// SparseVec

SparseVec SparseVec::from_entries(std::vector<Entry> entries)
{
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.col < b.col; });
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        e.value.canonicalize();
        if (!out.empty() && out.back().col == e.col)
            out.back().value += e.value;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const Entry& e) { return sgn(e.value) == 0; });
    SparseVec v;
    v.entries_ = std::move(out);
    return v;
}

SparseVec SparseVec::from_sorted(std::vector<Entry> entries)
{
    SparseVec v;
    v.entries_ = std::move(entries);
    return v;
}

SparseVec SparseVec::unit(Column col) { return from_sorted({{col, Rational(1)}}); }

std::optional<Column> SparseVec::leading() const noexcept
{
    if (entries_.empty())
        return std::nullopt;
    return entries_.front().col;
}

Rational SparseVec::coeff(Column col) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, Column c) { return e.col < c; });
    if (it != entries_.end() && it->col == col)
        return it->value;
    return 0;
}

SparseVec SparseVec::scaled(const Rational& s) const
{
    if (sgn(s) == 0)
        return {};
    std::vector<Entry> out = entries_;
    for (auto& e : out)
        e.value *= s;
    return from_sorted(std::move(out));
}

SparseVec SparseVec::axpy(const Rational& s, const SparseVec& other) const
{
    if (sgn(s) == 0)
        return *this;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    Rational t;
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->col < b->col)) {
            out.push_back(*a++);
        } else if (a == entries_.end() || b->col < a->col) {
            out.push_back({b->col, s * b->value});
            ++b;
        } else {
            t = a->value + s * b->value;
            if (sgn(t) != 0)
                out.push_back({a->col, t});
            ++a;
            ++b;
        }
    }
    return from_sorted(std::move(out));
}

SparseVec SparseVec::normalized() const
{
    if (entries_.empty())
        return {};
    Rational inv = 1 / entries_.front().value;
    return scaled(inv);
}

std::string to_string(const SparseVec& v)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& e : v.entries()) {
        if (!first)
            os << ", ";
        first = false;
        os << e.col << ':' << e.value.get_str();
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, 0) {}

void Subspace::check_column(Column c) const
{
    if (c >= ambient_)
        throw std::out_of_range("column " + std::to_string(c) + " outside ambient space of dimension " +
                                std::to_string(ambient_));
}

std::optional<std::size_t> Subspace::row_of_pivot(Column col) const
{
    if (col >= ambient_ || pivot_row_[col] == 0)
        return std::nullopt;
    return pivot_row_[col] - 1;
}

SparseVec Subspace::reduce(const SparseVec& v) const
{
    if (!v.empty())
        check_column(v.max_column());
    bool hit = false;
    for (const auto& e : v.entries())
        if (pivot_row_[e.col]) {
            hit = true;
            break;
        }
    if (!hit)
        return v;

    // Rows are zero in every foreign pivot column, so subtracting v[c] * row_c
    // for each pivot c in supp(v) leaves the remaining pivot coefficients
    // untouched: one pass suffices.
    Accumulator& acc = scratch();
    acc.reset(ambient_);
    for (const auto& e : v.entries()) {
        const std::uint32_t r = pivot_row_[e.col];
        if (!r) {
            acc.add(e.col, e.value);
            continue;
        }
        const auto row = rows_[r - 1].entries();
        for (std::size_t k = 1; k < row.size(); ++k)
            acc.sub_mul(row[k].col, e.value, row[k].value);
    }
    return acc.take();
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::insert(const SparseVec& v)
{
    SparseVec r = reduce(v);
    if (r.empty())
        return false;
    r = r.normalized();
    const Column p = *r.leading();

    for (auto& row : rows_) {
        Rational c = row.coeff(p);
        if (sgn(c) != 0)
            row = row.axpy(-c, r);
    }

    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    for (std::size_t k = pos; k < pivots_.size(); ++k)
        pivot_row_[pivots_[k]] = static_cast<std::uint32_t>(k + 1);
    return true;
}

Subspace Subspace::from_rref(std::vector<SparseVec> rows, std::size_t ambient)
{
    Subspace s(ambient);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& row = rows[k];
        if (row.empty() || row.entries().front().value != 1)
            throw std::logic_error("from_rref: row without unit pivot");
        s.check_column(row.max_column());
        const Column p = *row.leading();
        if (!s.pivots_.empty() && s.pivots_.back() >= p)
            throw std::logic_error("from_rref: pivots not increasing");
        s.pivots_.push_back(p);
        s.pivot_row_[p] = static_cast<std::uint32_t>(k + 1);
    }
    for (const auto& row : rows)
        for (std::size_t k = 1; k < row.nnz(); ++k)
            if (s.pivot_row_[row.entries()[k].col])
                throw std::logic_error("from_rref: pivot column not cleared");
    s.rows_ = std::move(rows);
    return s;
}

// ---------------------------------------------------------------------------
// Free functions

Subspace echelonize(std::span<const SparseVec> vectors, std::size_t ambient)
{
    std::vector<std::size_t> order(vectors.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& va = vectors[a];
        const auto& vb = vectors[b];
        if (va.empty() || vb.empty())
            return !va.empty() && vb.empty();
        if (*va.leading() != *vb.leading())
            return *va.leading() < *vb.leading();
        return va.nnz() < vb.nnz();
    });
    Subspace s(ambient);
    for (std::size_t i : order) {
        if (vectors[i].empty())
            continue;
        s.insert(vectors[i]);
        if (s.dim() == ambient)
            break;
    }
    return s;
}

Subspace kernel_basis(std::span<const SparseVec> rows, std::size_t ncols)
{
    // Eliminate with the column order reversed: then every free column f
    // yields a kernel vector e_f - sum c_r e_{p_r} whose other entries sit in
    // pivot columns to the right of f. Those vectors are the RREF of the
    // kernel in the natural order.
    const auto flip = [ncols](Column c) { return static_cast<Column>(ncols - 1 - c); };
    std::vector<SparseVec> reversed;
    reversed.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.empty())
            continue;
        if (r.max_column() >= ncols)
            throw std::out_of_range("kernel_basis: column index out of range");
        std::vector<Entry> e;
        e.reserve(r.nnz());
        for (auto it = r.entries().rbegin(); it != r.entries().rend(); ++it)
            e.push_back({flip(it->col), it->value});
        reversed.push_back(SparseVec::from_sorted(std::move(e)));
    }
    const Subspace image = echelonize(reversed, ncols);

    std::vector<std::vector<Entry>> kern(ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (Column p : image.pivots())
        is_pivot[p] = true;
    for (std::size_t k = 0; k < image.dim(); ++k) {
        const auto row = image.rows()[k].entries();
        const Column p = row.front().col;
        for (std::size_t j = 1; j < row.size(); ++j)
            kern[row[j].col].push_back({flip(p), -row[j].value});
    }

    std::vector<SparseVec> out;
    out.reserve(ncols - image.dim());
    for (std::size_t fo = 0; fo < ncols; ++fo) {
        const Column f = flip(static_cast<Column>(fo));
        if (is_pivot[f])
            continue;
        auto& e = kern[f];
        e.push_back({static_cast<Column>(fo), Rational(1)});
        std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        out.push_back(SparseVec::from_sorted(std::move(e)));
    }
    return Subspace::from_rref(std::move(out), ncols);
}

bool subspace_contains(const Subspace& s, const SparseVec& v) { return s.contains(v); }

bool subspace_equal(const Subspace& a, const Subspace& b) { return a == b; }

bool subspace_includes(const Subspace& big, const Subspace& small)
{
    if (small.dim() > big.dim())
        return false;
    for (const auto& r : small.rows())
        if (!big.contains(r))
            return false;
    return true;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace_intersection: ambient spaces differ");
    const auto n = static_cast<Column>(a.ambient());
    // rows (a_i | a_i) and (b_j | 0); rows of the echelon form that vanish on
    // the first block carry a basis of the intersection in the second.
    std::vector<SparseVec> rows;
    rows.reserve(a.dim() + b.dim());
    for (const auto& r : a.rows()) {
        std::vector<Entry> e(r.entries().begin(), r.entries().end());
        for (const auto& x : r.entries())
            e.push_back({x.col + n, x.value});
        rows.push_back(SparseVec::from_sorted(std::move(e)));
    }
    for (const auto& r : b.rows())
        rows.push_back(r);
    const Subspace z = echelonize(rows, 2 * a.ambient());
    std::vector<SparseVec> out;
    for (const auto& r : z.rows()) {
        if (*r.leading() < n)
            continue;
        std::vector<Entry> e;
        for (const auto& x : r.entries())
            e.push_back({x.col - n, x.value});
        out.push_back(SparseVec::from_sorted(std::move(e)));
    }
    // Those rows are already reduced against each other.
    return Subspace::from_rref(std::move(out), a.ambient());
}

std::size_t rank(std::span<const SparseVec> vectors, std::size_t ambient)
{
    return echelonize(vectors, ambient).dim();
}

// ---------------------------------------------------------------------------
// Modular path

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic for all 64-bit n.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> pick_primes_62bit(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
    std::vector<std::uint64_t> out;
    while (out.size() < count) {
        std::uint64_t c = dist(rng) | 1ULL;
        while (!is_prime_u64(c))
            c += 2;
        if (c < (1ULL << 62) && std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    return out;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p)
{
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0)
        throw std::domain_error("reduce_mod: prime divides denominator");
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return mulmod(num, invmod(den, p), p);
}

std::vector<ModRow> rref_mod(std::span<const SparseVec> vectors, std::uint64_t p)
{
    std::size_t width = 0;
    for (const auto& v : vectors)
        if (!v.empty())
            width = std::max<std::size_t>(width, v.max_column() + 1);

    std::vector<ModRow> rows;
    std::vector<std::int64_t> pivot_of(width, -1);
    std::vector<std::uint64_t> dense(width, 0);

    for (const auto& v : vectors) {
        std::fill(dense.begin(), dense.end(), 0);
        for (const auto& e : v.entries())
            dense[e.col] = reduce_mod(e.value, p);
        // Left-to-right elimination against the current (reduced) rows.
        for (std::size_t c = 0; c < width; ++c) {
            if (dense[c] == 0 || pivot_of[c] < 0)
                continue;
            const std::uint64_t f = dense[c];
            for (const auto& [col, val] : rows[static_cast<std::size_t>(pivot_of[c])].entries)
                dense[col] = (dense[col] + p - mulmod(f, val, p)) % p;
        }
        std::size_t lead = width;
        for (std::size_t c = 0; c < width; ++c)
            if (dense[c]) {
                lead = c;
                break;
            }
        if (lead == width)
            continue;
        const std::uint64_t inv = invmod(dense[lead], p);
        ModRow nr{static_cast<Column>(lead), {}};
        for (std::size_t c = lead; c < width; ++c)
            if (dense[c])
                nr.entries.emplace_back(static_cast<Column>(c), mulmod(dense[c], inv, p));
        // Clear the new pivot from existing rows.
        for (auto& row : rows) {
            auto it = std::find_if(row.entries.begin(), row.entries.end(),
                                   [lead](const auto& e) { return e.first == lead; });
            if (it == row.entries.end())
                continue;
            const std::uint64_t f = it->second;
            std::vector<std::uint64_t> tmp(width, 0);
            for (const auto& [col, val] : row.entries)
                tmp[col] = val;
            for (const auto& [col, val] : nr.entries)
                tmp[col] = (tmp[col] + p - mulmod(f, val, p)) % p;
            row.entries.clear();
            for (std::size_t c = 0; c < width; ++c)
                if (tmp[c])
                    row.entries.emplace_back(static_cast<Column>(c), tmp[c]);
        }
        pivot_of[lead] = static_cast<std::int64_t>(rows.size());
        rows.push_back(std::move(nr));
    }
    std::sort(rows.begin(), rows.end(), [](const ModRow& a, const ModRow& b) { return a.pivot < b.pivot; });
    return rows;
}

std::size_t rank_mod(std::span<const SparseVec> vectors, std::uint64_t p) { return rref_mod(vectors, p).size(); }

std::vector<ModRow> reduce_rref_mod(const Subspace& s, std::uint64_t p)
{
    std::vector<ModRow> out;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        ModRow r{s.pivots()[k], {}};
        for (const auto& e : s.rows()[k].entries())
            r.entries.emplace_back(e.col, reduce_mod(e.value, p));
        out.push_back(std::move(r));
    }
    return out;
}

bool modular_rank_agrees(std::span<const SparseVec> vectors, const Subspace& s, std::uint64_t seed)
{
    for (std::uint64_t p : pick_primes_62bit(2, seed))
        if (rank_mod(vectors, p) != s.dim())
            return false;
    return true;
}

} // namespace weakid::exactla
