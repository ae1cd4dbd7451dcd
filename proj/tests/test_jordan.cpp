#include "support.hpp"

#include "weakid/jordan.hpp"

#include <set>

using namespace weakid;
using namespace weakid::jordan;
using freealg::circ;

namespace {

NcPoly w(std::initializer_list<Letter> l, exactla::Rational c = 1) { return NcPoly(Word(l), c); }

// Every fully parenthesized circle monomial in the letters of `vars`, each
// used once. Shares nothing with the library's recursion over bases.
std::vector<NcPoly> circle_monomials(const std::vector<Letter>& vars)
{
    if (vars.size() == 1)
        return {NcPoly::var(vars[0])};
    std::vector<NcPoly> out;
    const std::size_t n = vars.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<Letter> a, b;
        for (std::size_t i = 0; i < n; ++i)
            (mask >> i & 1 ? a : b).push_back(vars[i]);
        for (const auto& f : circle_monomials(a))
            for (const auto& g : circle_monomials(b))
                out.push_back(circ(f, g));
    }
    return out;
}

std::vector<Letter> upto(unsigned n)
{
    std::vector<Letter> v;
    for (unsigned i = 1; i <= n; ++i)
        v.push_back(static_cast<Letter>(i));
    return v;
}

} // namespace

TEST_CASE("reversible")
{
    CHECK(reversible(Word{1, 2}) == w({1, 2}) + w({2, 1}));
    CHECK(reversible(Word{1}) == w({1}, 2));
    CHECK(reversible(Word{1, 2, 3}) == w({1, 2, 3}) + w({3, 2, 1}));
}

TEST_CASE("SJ multilinear dimensions")
{
    CHECK(sj_multilinear_span({1})->dim() == 1);
    CHECK(sj_multilinear_span({1, 2})->dim() == 1);
    CHECK(sj_multilinear_span({1, 2, 3})->dim() == 3);
    CHECK(reversible_span(upto(3)).dim() == 3);
    CHECK(reversible_span(upto(4)).dim() == 12);
}

TEST_CASE("SJ on four variables has dimension 11, codimension 1 in the symmetric elements")
{
    const auto sj = sj_multilinear_span({1, 2, 3, 4});
    CHECK(sj->dim() == 11);
    CHECK(oracle::rank(circle_monomials(upto(4))) == 11);
    // The tetrad x1x2x3x4 + x4x3x2x1 is the missing direction.
    const NcPoly tetrad = reversible(Word{1, 2, 3, 4});
    CHECK_FALSE(sj->elements.contains(sj->words.to_sparse(tetrad)));
    std::vector<NcPoly> with_tetrad = sj->basis;
    with_tetrad.push_back(tetrad);
    CHECK(oracle::rank(with_tetrad) == 12);
}

TEST_CASE("SJ on five variables")
{
    CHECK(sj_multilinear_span(upto(5))->dim() == oracle::rank(circle_monomials(upto(5))));
    CHECK(sj_multilinear_span(upto(5))->dim() == 55);
}

TEST_CASE("SJ elements are symmetric and live inside the reversible span")
{
    for (unsigned n = 1; n <= 5; ++n) {
        const auto sj = sj_multilinear_span(upto(n));
        const auto h = reversible_span(upto(n));
        CHECK(exactla::subspace_includes(h.elements, sj->elements));
        for (const auto& b : sj->basis)
            CHECK(freealg::involution(b) == b);
    }
}

TEST_CASE("circle closure")
{
    const auto a = sj_multilinear_span({1, 3});
    const auto b = sj_multilinear_span({2, 4, 5});
    const auto u = sj_multilinear_span({1, 2, 3, 4, 5});
    for (const auto& f : a->basis)
        for (const auto& g : b->basis)
            CHECK(u->elements.contains(u->words.to_sparse(circ(f, g))));
}

TEST_CASE("spans over arbitrary variable sets")
{
    const auto s = sj_multilinear_span({3, 7});
    CHECK(s->varset == std::vector<Letter>{3, 7});
    REQUIRE(s->dim() == 1);
    CHECK(s->basis[0] == w({3, 7}) + w({7, 3}));
    CHECK(sj_multilinear_span({7, 3}) == s);
    CHECK_THROWS_AS(sj_multilinear_span({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sj_multilinear_span(std::vector<Letter>{}), std::invalid_argument);
}

TEST_CASE("Cohn")
{
    CHECK(cohn_check(std::vector<Letter>{1}));
    CHECK(cohn_check(std::vector<Letter>{1, 2}));
    CHECK(cohn_check(std::vector<Letter>{1, 2, 3}));
    CHECK_THROWS_AS(cohn_check(std::vector<Letter>{1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("u and u[v,w] spanning P_n")
{
    // x1x2 = (x1 o x2)/2 + [x1,x2]/2
    CHECK(corollary2_check(1));
    CHECK(corollary2_check(2));
    CHECK(corollary2_check(3));
    const auto r3 = product_span_report(3);
    CHECK(r3.rank == 6);
    CHECK(r3.target == 6);
    CHECK_THROWS_AS(corollary2_check(0), std::invalid_argument);
    CHECK_THROWS_AS(corollary2_check(6), std::invalid_argument);
}

TEST_CASE("u and u[v,w] with SJ alphabets fall short from four variables")
{
    // Same family built from the SJ spans by hand, ranked by the dense oracle.
    const unsigned n = 4;
    std::vector<NcPoly> family = sj_multilinear_span(upto(n))->basis;
    for (std::uint32_t um = 0; um < (1u << n); ++um) {
        std::vector<Letter> U, R;
        for (unsigned i = 0; i < n; ++i)
            (um >> i & 1 ? U : R).push_back(static_cast<Letter>(i + 1));
        if (R.size() < 2)
            continue;
        std::vector<NcPoly> us = U.empty() ? std::vector<NcPoly>{NcPoly::unit()} : sj_multilinear_span(U)->basis;
        for (std::uint32_t vm = 1; vm + 1 < (1u << R.size()); ++vm) {
            std::vector<Letter> V, W;
            for (std::size_t i = 0; i < R.size(); ++i)
                (vm >> i & 1 ? V : W).push_back(R[i]);
            for (const auto& v : sj_multilinear_span(V)->basis)
                for (const auto& ww : sj_multilinear_span(W)->basis)
                    for (const auto& u : us)
                        family.push_back(u * freealg::comm(v, ww));
        }
    }
    const std::size_t r = oracle::rank(family);
    CHECK(r == 23);
    const auto rep = product_span_report(4);
    CHECK(rep.rank == r);
    CHECK(rep.target == 24);
    CHECK_FALSE(rep.holds());
    CHECK(product_span_report(5).rank == 115);
}
