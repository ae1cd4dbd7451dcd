#include "support.hpp"

#include "weakid/matrep.hpp"
#include "weakid/repthy.hpp"

using namespace weakid;
using namespace weakid::repthy;

namespace {

unsigned fixed_points(const std::vector<freealg::Letter>& s)
{
    unsigned f = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        f += s[i] == i + 1;
    return f;
}

Subspace full_p(unsigned n)
{
    const auto& idx = freealg::p_index(n);
    std::vector<exactla::SparseVec> u;
    for (exactla::Column c = 0; c < idx.size(); ++c)
        u.push_back(exactla::SparseVec::unit(c));
    return Subspace::from_rref(u, idx.size());
}

Decomposition dec(std::initializer_list<std::pair<Partition, unsigned>> l)
{
    Decomposition d;
    for (const auto& [p, m] : l)
        d.mult[p] = m;
    return d;
}

} // namespace

TEST_CASE("partitions")
{
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(7).size() == 15);
    REQUIRE(partitions(0).size() == 1);
    CHECK(partitions(0)[0].length() == 0);
    const auto p4 = partitions(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    CHECK(Partition{1, 3, 0} == Partition{3, 1});
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{3, 1}[5] == 0);
}

TEST_CASE("render")
{
    CHECK(Partition{3, 1}.render() == "(3,1)");
    CHECK(Partition{2, 2}.render() == "(2^2)");
    CHECK(Partition{2, 1, 1}.render() == "(2,1^2)");
    CHECK(Partition{1, 1, 1, 1}.render() == "(1^4)");
    CHECK(Decomposition{}.render() == "0");
    CHECK(dec({{{3, 1}, 1}, {{2, 2}, 2}}).render() == "M(3,1) + 2M(2^2)");
    CHECK(dec({{{4, 2}, 3}}).render("N2") == "3N2(4,2)");
}

TEST_CASE("characters")
{
    for (unsigned n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const Partition triv{n};
        const Partition sign(std::vector<unsigned>(n, 1));
        for (const auto& rho : partitions(n)) {
            CAPTURE(rho.render());
            CHECK(mn_character(triv, rho) == 1);
            CHECK(mn_character(sign, rho) == ((n - rho.length()) % 2 ? -1 : 1));
            CHECK(mn_character(rho, partitions(n).back()) == static_cast<long long>(dim_M(rho)));
            if (n >= 2) {
                // standard representation: fixed points - 1
                const auto sigma = class_representative(rho);
                CHECK(mn_character(Partition{n - 1, 1}, rho) == static_cast<long long>(fixed_points(sigma)) - 1);
            }
        }
    }
    CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(mn_character(Partition{2, 2}, Partition{3, 1}) == -1);
    CHECK_THROWS_AS(mn_character(Partition{2, 1}, Partition{2}), std::invalid_argument);
}

TEST_CASE("dimensions")
{
    for (unsigned n = 1; n <= 8; ++n)
        for (const auto& l : partitions(n)) {
            std::vector<unsigned> shape(l.parts().begin(), l.parts().end());
            CHECK(dim_M(l) == oracle::syt_count(shape));
        }
    CHECK(dim_M(Partition{3, 1}) == 3);
    CHECK(dim_M(Partition{2, 2}) == 2);
    CHECK(dim_N2(4, 2) == 3);
    CHECK(dim_N2(Partition{3, 3}) == 1);
    CHECK(dim_N2(Partition{5}) == 6);
    CHECK_THROWS_AS(dim_N2(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(dim_N2(Partition{2, 1, 1}), std::invalid_argument);
}

TEST_CASE("classes")
{
    CHECK(class_size(Partition{1, 1, 1, 1}) == 1);
    CHECK(class_size(Partition{2, 1, 1}) == 6);
    CHECK(class_size(Partition{2, 2}) == 3);
    CHECK(class_size(Partition{4}) == 6);
    for (unsigned n = 1; n <= 7; ++n) {
        std::uint64_t total = 0;
        for (const auto& r : partitions(n))
            total += class_size(r);
        CHECK(total == oracle::factorial(n));
    }
    const auto s = class_representative(Partition{2, 1});
    CHECK(fixed_points(s) == 1);
}

TEST_CASE("permutation action")
{
    const auto& idx = freealg::p_index(3);
    const auto v = idx.to_sparse(freealg::NcPoly(freealg::Word{1, 2, 3}, 1));
    // (sigma f)(x) = f(x_sigma(1), ...): x1x2x3 -> x2x3x1 for sigma = (1 2 3)
    const std::vector<freealg::Letter> cyc{2, 3, 1};
    CHECK(idx.to_poly(act(cyc, v, 3)) == freealg::NcPoly(freealg::Word{2, 3, 1}, 1));
}

TEST_CASE("stability")
{
    CHECK(is_stable(full_p(3), 3));
    CHECK(is_stable(freealg::gamma_span(4), 4));
    const auto& idx = freealg::p_index(3);
    std::vector<exactla::SparseVec> one{idx.to_sparse(freealg::NcPoly(freealg::Word{1, 2, 3}, 1))};
    const Subspace line = exactla::echelonize(one, idx.size());
    CHECK_FALSE(is_stable(line, 3));
    CHECK_THROWS_AS(character_of(line, 3), std::invalid_argument);
}

TEST_CASE("decompositions")
{
    // P_n is the regular representation
    for (unsigned n = 1; n <= 4; ++n) {
        const Decomposition d = decompose(full_p(n), n);
        for (const auto& l : partitions(n))
            CHECK(d.mult.at(l) == dim_M(l));
        CHECK(d.sn_dimension() == oracle::factorial(n));
    }
    CHECK(decompose(freealg::gamma_span(2), 2) == dec({{{1, 1}, 1}}));
    CHECK(decompose(freealg::gamma_span(3), 3) == dec({{{2, 1}, 1}}));

    const Subspace g4 = freealg::gamma_span(4);
    CHECK(decompose(g4, 4) == dec({{{3, 1}, 1}, {{2, 2}, 1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
    const auto gk = matrep::kernel_of_pair(freealg::p_index(4), g4).kernel;
    CHECK(decompose(gk, 4) == dec({{{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
    CHECK(decompose_quotient(g4, gk, 4) == dec({{{3, 1}, 1}, {{2, 2}, 1}}));
    CHECK_THROWS_AS(decompose_quotient(gk, g4, 4), std::invalid_argument);

    const Subspace g5 = freealg::gamma_span(5);
    const auto gk5 = matrep::kernel_of_pair(freealg::p_index(5), g5).kernel;
    CHECK(decompose_quotient(g5, gk5, 5) == dec({{{4, 1}, 1}, {{3, 2}, 1}}));
}

TEST_CASE("decompose_character rejects non-characters")
{
    std::vector<Rational> half(partitions(2).size(), Rational(1, 2));
    CHECK_THROWS_AS(decompose_character(half, 2), std::logic_error);
    // values on (2), (1^2); sign - trivial
    std::vector<Rational> neg{-2, 0};
    CHECK_THROWS_AS(decompose_character(neg, 2), std::logic_error);
    std::vector<Rational> reg{0, 2}; // on (2), (1^2)
    CHECK(decompose_character(reg, 2) == dec({{{2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("GL2 multiplicities from weights")
{
    // a polynomial module with weights (2,0):1, (1,1):1, (0,2):1 is N2(2)
    std::map<std::pair<unsigned, unsigned>, std::size_t> w{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}};
    CHECK(gl2_from_weights(w, 2) == dec({{{2}, 1}}));
    w[{1, 1}] = 2;
    CHECK(gl2_from_weights(w, 2) == dec({{{2}, 1}, {{1, 1}, 1}}));
    w[{1, 1}] = 0;
    CHECK_THROWS(gl2_from_weights(w, 2));
}
