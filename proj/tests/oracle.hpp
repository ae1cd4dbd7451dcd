#pragma once

// Oracles that share no code with the library, and random generators for
// property checks.

#include "weakid/freealg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;

// Dense Gaussian elimination over Q.
inline std::size_t rank(std::vector<std::vector<Q>> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Coefficient rows of polynomials over the union of their words.
inline std::vector<std::vector<Q>> dense_rows(const std::vector<weakid::freealg::NcPoly>& polys)
{
    std::map<weakid::freealg::Word, std::size_t> cols;
    for (const auto& f : polys)
        for (const auto& [w, c] : f.terms())
            cols.emplace(w, 0);
    std::size_t k = 0;
    for (auto& [w, i] : cols)
        i = k++;
    std::vector<std::vector<Q>> m;
    for (const auto& f : polys) {
        std::vector<Q> row(cols.size());
        for (const auto& [w, c] : f.terms())
            row[cols.at(w)] = c;
        m.push_back(std::move(row));
    }
    return m;
}

inline std::size_t rank(const std::vector<weakid::freealg::NcPoly>& polys) { return rank(dense_rows(polys)); }

inline std::uint64_t factorial(unsigned n)
{
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Permutations of {0..n-1} without fixed points, counted by brute force.
inline std::uint64_t derangements(unsigned n)
{
    std::vector<unsigned> p(n);
    for (unsigned i = 0; i < n; ++i)
        p[i] = i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (unsigned i = 0; i < n; ++i)
            ok = ok && p[i] != i;
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Standard Young tableaux of shape `shape`, by removing corners.
inline std::uint64_t syt_count(std::vector<unsigned> shape)
{
    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();
    if (shape.empty())
        return 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner)
            continue;
        auto s = shape;
        --s[i];
        total += syt_count(s);
    }
    return total;
}

// 2x2 rational matrices, entries m[2r+c].
using M2 = std::array<Q, 4>;

inline M2 mul(const M2& a, const M2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline M2 eval(const weakid::freealg::NcPoly& f, const std::vector<M2>& xs)
{
    M2 out{0, 0, 0, 0};
    for (const auto& [w, c] : f.terms()) {
        M2 p{1, 0, 0, 1};
        for (auto l : w.letters)
            p = mul(p, xs.at(l - 1));
        for (int i = 0; i < 4; ++i)
            out[i] += c * p[i];
    }
    return out;
}

inline bool is_zero(const M2& m) { return m[0] == 0 && m[1] == 0 && m[2] == 0 && m[3] == 0; }

// Vanishing at every assignment of E11, E12 + E21, E22 to x1..xn: decides
// weak identities among multilinear polynomials.
inline bool vanishes_on_symmetric_basis(const weakid::freealg::NcPoly& f, unsigned n)
{
    const M2 basis[3] = {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    std::vector<M2> xs(n);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i)
        total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < n; ++i, c /= 3)
            xs[i] = basis[c % 3];
        if (!is_zero(eval(f, xs)))
            return false;
    }
    return true;
}

// Coefficient of t^m in (1-t)^-2 (1-t^2)^-1: sum over j of (m - 2j + 1).
inline long long h1_coefficient(unsigned m)
{
    if (m == 0)
        return 1;
    if (m < 2)
        return 0;
    const unsigned k = m - 2;
    long long s = 0;
    for (unsigned j = 0; 2 * j <= k; ++j)
        s += k - 2 * j + 1;
    return s;
}

} // namespace oracle


namespace prop {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random polynomial in x1..xvars: up to `terms` words of length <= maxdeg,
/// small integer or half-integer coefficients.
inline weakid::freealg::NcPoly poly(Rng& rng, unsigned vars, unsigned maxdeg, unsigned terms)
{
    weakid::freealg::NcPoly f;
    const int t = uniform(rng, 0, static_cast<int>(terms));
    for (int i = 0; i < t; ++i) {
        weakid::freealg::Word w;
        const int d = uniform(rng, 0, static_cast<int>(maxdeg));
        for (int k = 0; k < d; ++k)
            w.letters.push_back(static_cast<weakid::freealg::Letter>(uniform(rng, 1, static_cast<int>(vars))));
        mpq_class c(uniform(rng, -3, 3), uniform(rng, 1, 2));
        c.canonicalize();
        f.add_term(w, c);
    }
    return f;
}

/// Random multilinear polynomial in x1..xn.
inline weakid::freealg::NcPoly multilinear(Rng& rng, unsigned n, unsigned terms)
{
    std::vector<weakid::freealg::Letter> l(n);
    for (unsigned i = 0; i < n; ++i)
        l[i] = static_cast<weakid::freealg::Letter>(i + 1);
    weakid::freealg::NcPoly f;
    for (unsigned i = 0; i < terms; ++i) {
        std::shuffle(l.begin(), l.end(), rng);
        f.add_term(weakid::freealg::Word(l), uniform(rng, -3, 3));
    }
    return f;
}

inline std::vector<weakid::freealg::Letter> permutation(Rng& rng, unsigned n)
{
    std::vector<weakid::freealg::Letter> s(n);
    for (unsigned i = 0; i < n; ++i)
        s[i] = static_cast<weakid::freealg::Letter>(i + 1);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

} // namespace prop
