#pragma once

// Multilinear components of the free special Jordan algebra SJ inside the
// free associative algebra, and the reversible (symmetric) elements.

#include "weakid/exactla.hpp"
#include "weakid/freealg.hpp"

#include <memory>
#include <span>
#include <vector>

namespace weakid::jordan {

using freealg::Letter;
using freealg::NcPoly;
using freealg::Word;

/// A subspace of the multilinear component on `varset`.
struct JordanSpan {
    std::vector<Letter> varset; // sorted
    freealg::WordIndex words;   // all |varset|! multilinear words
    exactla::Subspace elements;
    std::vector<NcPoly> basis;  // elements' rows as polynomials

    std::size_t dim() const noexcept { return elements.dim(); }
};

/// w + w*; equals 2w for palindromes.
NcPoly reversible(const Word& w);

/// Circle-closure of the variables, restricted to the multilinear component
/// on `varset`. Memoized per variable set; safe to call concurrently.
std::shared_ptr<const JordanSpan> sj_multilinear_span(std::span<const Letter> varset);
std::shared_ptr<const JordanSpan> sj_multilinear_span(std::initializer_list<Letter> varset);

/// Span of w + w* over the multilinear words on `varset`.
JordanSpan reversible_span(std::span<const Letter> varset);

/// SJ and the reversible elements coincide on `varset`. Throws for more than
/// three variables, where the statement is false in general.
bool cohn_check(std::span<const Letter> varset);

struct ProductSpanReport {
    unsigned n = 0;
    std::size_t family_size = 0;
    std::size_t rank = 0;
    std::size_t target = 0; // n!
    bool holds() const noexcept { return rank == target; }
};

/// Rank of {u} and {u [v, w]} with u, v, w multilinear SJ elements on
/// complementary subsets of {1..n} (u possibly the unit) inside P_n.
ProductSpanReport product_span_report(unsigned n);
bool corollary2_check(unsigned n);

} // namespace weakid::jordan
