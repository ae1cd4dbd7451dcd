#pragma once

// Graded dimensions for the two-variable proper polynomials B_2 modulo the
// weak identities, against closed-form Hilbert series.

#include "weakid/repthy.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weakid::series {

inline constexpr unsigned kDefaultMaxDegree = 10;

/// Power series truncated after t^order.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order = 0);
    TruncSeries(std::vector<mpz_class> coeffs, unsigned order);

    unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
    const mpz_class& operator[](unsigned i) const { return c_.at(i); }
    mpz_class& operator[](unsigned i) { return c_.at(i); }
    const std::vector<mpz_class>& coefficients() const noexcept { return c_; }

    /// 1 / this. Throws unless the constant term is +-1.
    TruncSeries inverse() const;
    /// t^k * this
    TruncSeries shifted(unsigned k) const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    /// Coefficients as decimal strings.
    std::vector<std::string> decimal() const;
    std::string render() const; // "[1, 0, 1, ...]"

private:
    std::vector<mpz_class> c_;
};

/// 1 - t^k, truncated.
TruncSeries one_minus_t_pow(unsigned k, unsigned order);

/// 1 + t^2 (1-t)^-2 (1-t^2)^-1
TruncSeries h1_closed_form(unsigned N);
/// 1 + sum over p > 0, q >= 0 of dim N_2(p+q, p) t^(2p+q) = (q+1) t^(2p+q)
TruncSeries gl2_sum_form(unsigned N);
/// Number of elements ([y,x](ad x)^k (ad y)^l)[y,x]^(q-1) of each degree,
/// plus 1 in degree 0: the upper bound for the quotient.
TruncSeries family_count_bound(unsigned N);
/// 1 + t^2 (1-t)^-2 (1-t)^-2, the form with the repeated factor.
TruncSeries repeated_factor_form(unsigned N);

/// One bidegree of B_2.
struct Bidegree {
    unsigned dx = 0, dy = 0;
    std::size_t dim = 0;        // dim B_2^(dx,dy)
    std::size_t kernel_dim = 0; // weak identities inside it
    std::size_t image_rank() const noexcept { return dim - kernel_dim; }
};

/// All bidegrees dx + dy = n, by increasing dy.
std::vector<Bidegree> bigraded(unsigned n);

/// Image ranks of B_2^(n) for n = 0..N. Throws when N > cap.
TruncSeries b2_tilde_dims(unsigned N, unsigned cap = kDefaultMaxDegree);

/// GL_2 decompositions from one degree's bidegree table.
repthy::Decomposition gl2_of_b2(const std::vector<Bidegree>& table, unsigned n);
repthy::Decomposition gl2_of_kernel(const std::vector<Bidegree>& table, unsigned n);
repthy::Decomposition gl2_of_quotient(const std::vector<Bidegree>& table, unsigned n);

struct B2MeetDegree {
    unsigned n = 0;
    std::size_t dim_b2 = 0;
    std::size_t dim_intersection = 0;
    std::size_t expected_intersection = 0;
    repthy::Decomposition b2, intersection, quotient; // as GL_2-modules
};

struct B2MeetReport {
    std::vector<B2MeetDegree> degrees; // n = 2..6
    bool relation_even_commute = false, relation_square = false, relation_cube = false;
    bool b2_6_matches = false;           // N2(5,1) + 3N2(4,2) + 2N2(3^2)
    bool intersection_6_matches = false; // 2N2(4,2) + N2(3^2)
    bool holds() const;
};

B2MeetReport prop6_check();

/// [[y,x,x,x],[y,x]], [y,x,x]^2 + [y,x,x,x][y,x], [[y,x,y],[y,x,x]] + 4[y,x]^3
freealg::NcPoly relation_even_commute();
freealg::NcPoly relation_square();
freealg::NcPoly relation_cube();

struct QuotientFamilyDegree {
    unsigned n = 0;
    std::size_t family_size = 0;
    std::size_t family_rank = 0;
    std::size_t full_rank = 0;
};

/// ([y,x](ad x)^k (ad y)^l)[y,x]^(q-1) with k + l + 2q = n
std::vector<freealg::NcPoly> quotient_family(unsigned n);
std::vector<QuotientFamilyDegree> quotient_family_report(unsigned N, unsigned cap = kDefaultMaxDegree);
bool prop7_family_check(unsigned N, unsigned cap = kDefaultMaxDegree);

} // namespace weakid::series
