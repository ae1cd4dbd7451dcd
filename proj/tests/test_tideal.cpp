#include "support.hpp"

#include "weakid/tideal.hpp"

using namespace weakid;
using namespace weakid::tideal;
using freealg::circ;
using freealg::comm;
using freealg::left_normed;

namespace {

NcPoly x(unsigned i) { return NcPoly::var(static_cast<freealg::Letter>(i)); }

GeneratorSet metabelian_only() { return GeneratorSet({{"metabelian", freealg::metabelian_poly(), 4}}); }

// All relabelings of a multilinear polynomial in x1..xn.
std::vector<NcPoly> orbit(const NcPoly& f, unsigned n)
{
    std::vector<freealg::Letter> s(n);
    for (unsigned i = 0; i < n; ++i)
        s[i] = static_cast<freealg::Letter>(i + 1);
    std::vector<NcPoly> out;
    do
        out.push_back(freealg::relabel(f, s));
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

NcPoly as_poly(unsigned n, const exactla::SparseVec& v) { return freealg::p_index(n).to_poly(v); }

} // namespace

TEST_CASE("generator sets")
{
    const GeneratorSet g = GeneratorSet::standard();
    REQUIRE(g.generators().size() == 2);
    CHECK(g.max_arity() == 4);
    for (std::size_t k = 0; k < 2; ++k)
        for (unsigned p = 0; p < 4; ++p)
            CHECK(g.vanishes_on_unit(k, p));
    const GeneratorSet c({{"comm", comm(x(1), x(2)), 2}});
    CHECK(c.vanishes_on_unit(0, 0)); // [1, x] = 0
    const GeneratorSet q({{"sq", x(1) * x(2) * x(3) + x(2) * x(3) * x(1), 3}});
    CHECK_FALSE(q.vanishes_on_unit(0, 1));
    CHECK_THROWS_AS(GeneratorSet({{"bad", x(1) * x(1), 2}}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSet({{"bad", comm(x(1), x(3)), 2}}), std::invalid_argument);
}

TEST_CASE("degree four spans are the relabeling orbits")
{
    const Subspace m = consequences_span(metabelian_only(), 4);
    CHECK(m.dim() == oracle::rank(orbit(freealg::metabelian_poly(), 4)));
    const NcPoly gen = comm(x(1), x(2)) * comm(x(3), x(4)) - comm(x(3), x(4)) * comm(x(1), x(2));
    CHECK(m.contains(freealg::p_index(4).to_sparse(gen)));

    auto both = orbit(freealg::metabelian_poly(), 4);
    const auto s4 = orbit(freealg::standard_poly(4), 4);
    both.insert(both.end(), s4.begin(), s4.end());
    CHECK(standard_engine().span(4).dim() == oracle::rank(both));
    CHECK(standard_engine().span(4).dim() == 4);
}

TEST_CASE("degrees below the generators")
{
    CHECK(standard_engine().span(3).dim() == 0);
    CHECK(standard_engine().span(1).dim() == 0);
    // a generator with unit-sensitive slots reaches lower degrees
    const GeneratorSet c({{"sq", x(1) * x(2) * x(3) + x(2) * x(3) * x(1), 3}});
    CHECK(consequences_span(c, 2).dim() > 0);
}

TEST_CASE("Jordan substitution into the metabelian identity")
{
    // x1 -> x1 o x4 in [[x1,x2],[x3,x5]]
    const NcPoly sub = comm(comm(circ(x(1), x(4)), x(2)), comm(x(3), x(5)));
    ConsequenceEngine e(metabelian_only(), 5);
    const Subspace& s5 = e.span(5);
    const auto& idx = freealg::p_index(5);
    CHECK(s5.contains(idx.to_sparse(sub)));
    const Subspace core_span = exactla::echelonize(e.core(5), idx.size());
    CHECK(core_span.contains(idx.to_sparse(sub)));
    // the rearranged form [x1,x2] o [x3,x4,x1]
    CHECK(e.is_consequence(circ(comm(x(1), x(2)), left_normed({x(3), x(4), x(1)}))));
}

TEST_CASE("consequences")
{
    auto& e = standard_engine();
    NcPoly alt3, alt4;
    for (const auto& s : orbit(freealg::NcPoly(freealg::Word{1, 2, 3}, 1), 3)) {
        const auto& w = s.terms().begin()->first.letters;
        const int sign = freealg::relabel(freealg::standard_poly(3), std::vector<freealg::Letter>(w.begin(), w.end())) ==
                                 freealg::standard_poly(3)
                             ? 1
                             : -1;
        alt3 += exactla::Rational(sign) * comm(x(w[0]), x(w[1])) * comm(x(w[2]), x(4));
    }
    for (const auto& s : orbit(freealg::NcPoly(freealg::Word{1, 2, 3, 4}, 1), 4)) {
        const auto& w = s.terms().begin()->first.letters;
        const int sign = freealg::relabel(freealg::standard_poly(4), std::vector<freealg::Letter>(w.begin(), w.end())) ==
                                 freealg::standard_poly(4)
                             ? 1
                             : -1;
        alt4 += exactla::Rational(sign) * comm(x(w[0]), x(w[1])) * comm(x(w[2]), x(w[3]));
    }
    CHECK_FALSE(alt3.is_zero());
    CHECK_FALSE(alt4.is_zero());
    CHECK(e.is_consequence(alt3));
    CHECK(e.is_consequence(alt4));

    const NcPoly exchange = left_normed({x(1), x(2), x(4)}) * comm(x(3), x(5)) -
                        left_normed({x(1), x(3), x(4)}) * comm(x(2), x(5)) +
                        left_normed({x(2), x(3), x(4)}) * comm(x(1), x(5));
    CHECK(e.is_consequence(exchange));
    CHECK(is_consequence(exchange, GeneratorSet::standard()));

    CHECK_FALSE(e.is_consequence(comm(x(1), x(2))));
    CHECK_FALSE(e.is_consequence(freealg::standard_poly(3)));
    CHECK(e.is_consequence(NcPoly()));
    // x1 S4 is a consequence; x1 [x1,x2] is not
    CHECK(e.is_consequence(x(5) * freealg::standard_poly(4)));
    CHECK(e.is_consequence(x(1) * freealg::standard_poly(4) - x(2) * freealg::metabelian_poly()));
    CHECK_FALSE(e.is_consequence(x(1) * comm(x(1), x(2))));
}

TEST_CASE("non-homogeneous input is split into components")
{
    auto& e = standard_engine();
    CHECK(e.is_consequence(freealg::standard_poly(4) + freealg::metabelian_poly() * x(5)));
    CHECK_FALSE(e.is_consequence(freealg::standard_poly(4) + comm(x(1), x(2))));
}

TEST_CASE("consequences are weak identities")
{
    for (unsigned n = 4; n <= 5; ++n) {
        CAPTURE(n);
        for (const auto& row : standard_engine().span(n).rows())
            CHECK(oracle::vanishes_on_symmetric_basis(as_poly(n, row), n));
    }
}

TEST_CASE("degree cap")
{
    ConsequenceEngine e(GeneratorSet::standard(), 5);
    CHECK_THROWS_AS(e.span(6), std::out_of_range);
    NcPoly big = freealg::standard_poly(4) * x(5) * x(6);
    CHECK_THROWS_AS(e.is_consequence(big), std::out_of_range);
}

TEST_CASE("theorem at degrees four and five")
{
    const DegreeReport r4 = verify_theorem(4);
    CHECK(r4.dim_P == 24);
    CHECK(r4.dim_kernel == 4);
    CHECK(r4.dim_consequences == 4);
    CHECK(r4.containment);
    CHECK(r4.equal);
    CHECK(r4.passed());
    CHECK(r4.dim_gamma == 9);
    CHECK(r4.dim_gamma_kernel == 4);
    CHECK(r4.decomposition.render() == "M(3,1) + M(2^2)");
    CHECK(r4.timings_ms.count("total") == 1);

    const DegreeReport r5 = verify_theorem(5, {Space::Proper, true});
    CHECK(r5.space == Space::Proper);
    CHECK(r5.dim_P == 44);
    CHECK(r5.dim_kernel == 35);
    CHECK(r5.dim_consequences == 35);
    CHECK(r5.passed());
    CHECK(r5.decomposition.render() == "M(4,1) + M(3,2)");

    const DegreeReport r5f = verify_theorem(5, {Space::FullP, false});
    CHECK(r5f.dim_kernel == 55);
    CHECK(r5f.passed());
    CHECK(r5f.decomposition.mult.empty());

    CHECK_THROWS(verify_theorem(3));
    CHECK_THROWS(verify_theorem(8));
}

TEST_CASE("containment failure is reported, not thrown")
{
    // the commutator generates far more than the weak identities
    const GeneratorSet c({{"comm", comm(x(1), x(2)), 2}});
    ConsequenceEngine e(c, 4);
    const DegreeReport r = verify_theorem(4, e, {Space::FullP, false});
    CHECK_FALSE(r.containment);
    CHECK_FALSE(r.passed());
}
