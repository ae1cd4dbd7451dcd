#include "support.hpp"

#include "weakid/matrep.hpp"
#include "weakid/series.hpp"

using namespace weakid;
using namespace weakid::series;
using repthy::Partition;

namespace {

std::vector<mpz_class> z(std::initializer_list<long> l)
{
    std::vector<mpz_class> v;
    for (long x : l)
        v.emplace_back(x);
    return v;
}

repthy::Decomposition dec(std::initializer_list<std::pair<Partition, unsigned>> l)
{
    repthy::Decomposition d;
    for (const auto& [p, m] : l)
        d.mult[p] = m;
    return d;
}

} // namespace

TEST_CASE("truncated series arithmetic")
{
    const TruncSeries a(z({1, 2, 3}), 2), b(z({0, 1}), 2);
    CHECK((a + b).coefficients() == z({1, 3, 3}));
    CHECK((a - a) == TruncSeries(2));
    CHECK((a * b).coefficients() == z({0, 1, 2}));
    CHECK(b.shifted(1).coefficients() == z({0, 0, 1}));
    CHECK(TruncSeries(z({1, 2, 3, 4, 5}), 2).order() == 2);
    CHECK(a.render() == "[1, 2, 3]");
    CHECK(a.decimal() == std::vector<std::string>{"1", "2", "3"});
    // 1/(1-t) = 1 + t + t^2 + ...
    CHECK(one_minus_t_pow(1, 5).inverse().coefficients() == z({1, 1, 1, 1, 1, 1}));
    CHECK(one_minus_t_pow(2, 4).coefficients() == z({1, 0, -1, 0, 0}));
    CHECK((a * a.inverse()) == TruncSeries(z({1}), 2));
    CHECK_THROWS_AS(b.inverse(), std::invalid_argument);
    CHECK_THROWS_AS(TruncSeries(z({2, 1}), 1).inverse(), std::invalid_argument);
    // mixed orders truncate to the smaller one
    CHECK((a + TruncSeries(z({1, 1, 1, 1}), 3)).coefficients() == z({2, 3, 4}));
}

TEST_CASE("closed forms")
{
    const std::vector<mpz_class> expected = z({1, 0, 1, 2, 4, 6, 9, 12, 16});
    CHECK(h1_closed_form(8).coefficients() == expected);
    for (unsigned m = 0; m <= 20; ++m)
        CHECK(h1_closed_form(20)[m] == static_cast<long>(oracle::h1_coefficient(m)));
    CHECK(gl2_sum_form(20) == h1_closed_form(20));
    CHECK(family_count_bound(20) == h1_closed_form(20));
}

TEST_CASE("the repeated-factor display disagrees with its summation")
{
    const TruncSeries r = repeated_factor_form(8);
    CHECK(r.coefficients() == z({1, 0, 1, 4, 10, 20, 35, 56, 84}));
    CHECK(r[3] == 4);
    CHECK(h1_closed_form(8)[3] == 2);
    CHECK_FALSE(r == h1_closed_form(8));
}

TEST_CASE("bigraded dimensions of B2")
{
    CHECK(bigraded(0).size() == 1);
    CHECK(bigraded(0)[0].dim == 1);
    for (const auto& b : bigraded(1))
        CHECK(b.dim == 0);
    // dim B2^(n) = 2^(n-2) for n >= 2: the proper part of the free algebra of rank 2
    for (unsigned n = 2; n <= 7; ++n) {
        std::size_t total = 0;
        for (const auto& b : bigraded(n)) {
            CHECK(b.dx + b.dy == n);
            total += b.dim;
        }
        CHECK(total == (std::size_t{1} << (n - 2)));
    }
    const auto t2 = bigraded(2);
    REQUIRE(t2.size() == 3);
    CHECK(t2[1].dx == 1);
    CHECK(t2[1].dim == 1);
    CHECK(t2[1].kernel_dim == 0);
}

TEST_CASE("Hilbert series of the quotient")
{
    const TruncSeries d = b2_tilde_dims(8);
    CHECK(d == h1_closed_form(8));
    CHECK(d[2] == 1);
    CHECK(d[6] == 9);
    CHECK(d == gl2_sum_form(8));
    CHECK_THROWS_AS(b2_tilde_dims(11), std::out_of_range);
    CHECK_THROWS_AS(b2_tilde_dims(6, 5), std::out_of_range);
}

TEST_CASE("relations in B2")
{
    CHECK(matrep::is_weak_identity(relation_even_commute()));
    CHECK(matrep::is_weak_identity(relation_square()));
    CHECK(matrep::is_weak_identity(relation_cube()));
    // the coefficient 4 is forced
    using freealg::comm;
    using freealg::left_normed;
    const auto x = freealg::NcPoly::var(freealg::kX), y = freealg::NcPoly::var(freealg::kY);
    const auto yx = comm(y, x);
    const auto wrong = comm(left_normed({y, x, y}), left_normed({y, x, x})) + exactla::Rational(2) * yx * yx * yx;
    CHECK_FALSE(matrep::is_weak_identity(wrong));
}

TEST_CASE("GL2 structure in degrees five and six")
{
    const auto t6 = bigraded(6);
    CHECK(gl2_of_b2(t6, 6) == dec({{{5, 1}, 1}, {{4, 2}, 3}, {{3, 3}, 2}}));
    CHECK(gl2_of_kernel(t6, 6) == dec({{{4, 2}, 2}, {{3, 3}, 1}}));
    CHECK(gl2_of_quotient(t6, 6) == dec({{{5, 1}, 1}, {{4, 2}, 1}, {{3, 3}, 1}}));
    const auto t5 = bigraded(5);
    CHECK(gl2_of_kernel(t5, 5) == dec({{{3, 2}, 1}}));
}

TEST_CASE("degree-wise intersections")
{
    const B2MeetReport r = prop6_check();
    REQUIRE(r.degrees.size() == 5);
    const std::size_t b2[] = {1, 2, 4, 8, 16};
    const std::size_t meet[] = {0, 0, 0, 2, 7};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(r.degrees[i].n == i + 2);
        CHECK(r.degrees[i].dim_b2 == b2[i]);
        CHECK(r.degrees[i].dim_intersection == meet[i]);
        CHECK(r.degrees[i].dim_intersection == r.degrees[i].expected_intersection);
    }
    std::size_t quotient6 = 0;
    for (const auto& [l, m] : r.degrees[4].quotient.mult)
        quotient6 += m * repthy::dim_N2(l);
    CHECK(quotient6 == 9);
    CHECK(r.relation_even_commute);
    CHECK(r.relation_square);
    CHECK(r.relation_cube);
    CHECK(r.b2_6_matches);
    CHECK(r.intersection_6_matches);
    CHECK(r.holds());
}

TEST_CASE("spanning family for the quotient")
{
    CHECK(quotient_family(2).size() == 1);
    CHECK(quotient_family(2)[0] == freealg::comm(freealg::NcPoly::var(freealg::kY), freealg::NcPoly::var(freealg::kX)));
    CHECK(quotient_family(4).size() == 4);
    CHECK(quotient_family(1).empty());
    const auto rep = quotient_family_report(8);
    REQUIRE(rep.size() == 7);
    for (const auto& d : rep) {
        CAPTURE(d.n);
        CHECK(d.family_rank == d.full_rank);
        CHECK(d.family_size >= d.family_rank);
        CHECK(static_cast<long long>(d.full_rank) == oracle::h1_coefficient(d.n));
    }
    CHECK(rep[4].full_rank == 9);
    CHECK(prop7_family_check(8));
}
