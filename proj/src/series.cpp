#include "weakid/series.hpp"

#include "weakid/matrep.hpp"

#include <sstream>
#include <stdexcept>

namespace weakid::series {

using freealg::kX;
using freealg::kY;
using freealg::NcPoly;
using repthy::Decomposition;
using repthy::Partition;

TruncSeries::TruncSeries(unsigned order) : c_(order + 1, 0) {}

TruncSeries::TruncSeries(std::vector<mpz_class> coeffs, unsigned order) : c_(order + 1, 0)
{
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i)
        c_[i] = coeffs[i];
}

TruncSeries TruncSeries::inverse() const
{
    if (abs(c_[0]) != 1)
        throw std::invalid_argument("series inverse needs constant term +-1");
    TruncSeries r(order());
    r.c_[0] = c_[0];
    for (unsigned n = 1; n <= order(); ++n) {
        mpz_class s = 0;
        for (unsigned k = 1; k <= n; ++k)
            s += c_[k] * r.c_[n - k];
        r.c_[n] = -s * c_[0];
    }
    return r;
}

TruncSeries TruncSeries::shifted(unsigned k) const
{
    TruncSeries r(order());
    for (unsigned i = 0; i + k <= order(); ++i)
        r.c_[i + k] = c_[i];
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
{
    TruncSeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i)
        r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
{
    TruncSeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i)
        r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    TruncSeries r(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i)
        for (unsigned j = 0; i + j <= r.order(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

std::vector<std::string> TruncSeries::decimal() const
{
    std::vector<std::string> out;
    for (const auto& c : c_)
        out.push_back(c.get_str());
    return out;
}

std::string TruncSeries::render() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? ", " : "") << c_[i].get_str();
    os << ']';
    return os.str();
}

TruncSeries one_minus_t_pow(unsigned k, unsigned order)
{
    TruncSeries r(order);
    r[0] = 1;
    if (k <= order)
        r[k] -= 1;
    return r;
}

TruncSeries h1_closed_form(unsigned N)
{
    const TruncSeries a = one_minus_t_pow(1, N).inverse();
    const TruncSeries b = one_minus_t_pow(2, N).inverse();
    TruncSeries one(N);
    one[0] = 1;
    return one + (a * a * b).shifted(2);
}

TruncSeries gl2_sum_form(unsigned N)
{
    TruncSeries r(N);
    r[0] = 1;
    for (unsigned p = 1; 2 * p <= N; ++p)
        for (unsigned q = 0; 2 * p + q <= N; ++q)
            r[2 * p + q] += q + 1;
    return r;
}

TruncSeries family_count_bound(unsigned N)
{
    TruncSeries r(N);
    r[0] = 1;
    for (unsigned q = 1; 2 * q <= N; ++q)
        for (unsigned kl = 0; kl + 2 * q <= N; ++kl)
            r[kl + 2 * q] += kl + 1; // k + l = kl has kl + 1 solutions
    return r;
}

TruncSeries repeated_factor_form(unsigned N)
{
    const TruncSeries a = one_minus_t_pow(1, N).inverse();
    TruncSeries one(N);
    one[0] = 1;
    return one + (a * a * a * a).shifted(2);
}

std::vector<Bidegree> bigraded(unsigned n)
{
    std::vector<Bidegree> out;
    for (unsigned dy = 0; dy <= n; ++dy) {
        Bidegree b;
        b.dx = n - dy;
        b.dy = dy;
        if (n == 0) {
            b.dim = 1; // the unit
        } else if (n >= 2) {
            const auto family = freealg::b2_span(b.dx, b.dy);
            if (!family.empty()) {
                const auto k = matrep::kernel_of_pair(family);
                b.dim = k.span.dim();
                b.kernel_dim = k.kernel.dim();
            }
        }
        out.push_back(b);
    }
    return out;
}

TruncSeries b2_tilde_dims(unsigned N, unsigned cap)
{
    if (N > cap)
        throw std::out_of_range("b2_tilde_dims: degree " + std::to_string(N) + " exceeds the cap " +
                                std::to_string(cap));
    TruncSeries r(N);
    for (unsigned n = 0; n <= N; ++n)
        for (const auto& b : bigraded(n))
            r[n] += static_cast<unsigned long>(b.image_rank());
    return r;
}

namespace {

template <class Fn>
Decomposition gl2_of(const std::vector<Bidegree>& table, unsigned n, Fn weight)
{
    std::map<std::pair<unsigned, unsigned>, std::size_t> w;
    for (const auto& b : table)
        w[{b.dx, b.dy}] = weight(b);
    return repthy::gl2_from_weights(w, n);
}

NcPoly ln(std::initializer_list<freealg::Letter> letters)
{
    std::vector<NcPoly> args;
    for (auto l : letters)
        args.push_back(NcPoly::var(l));
    return freealg::left_normed(args);
}

} // namespace

Decomposition gl2_of_b2(const std::vector<Bidegree>& table, unsigned n)
{
    return gl2_of(table, n, [](const Bidegree& b) { return b.dim; });
}

Decomposition gl2_of_kernel(const std::vector<Bidegree>& table, unsigned n)
{
    return gl2_of(table, n, [](const Bidegree& b) { return b.kernel_dim; });
}

Decomposition gl2_of_quotient(const std::vector<Bidegree>& table, unsigned n)
{
    return gl2_of(table, n, [](const Bidegree& b) { return b.image_rank(); });
}

NcPoly relation_even_commute() { return freealg::comm(ln({kY, kX, kX, kX}), ln({kY, kX})); }

NcPoly relation_square()
{
    const NcPoly a = ln({kY, kX, kX});
    return a * a + ln({kY, kX, kX, kX}) * ln({kY, kX});
}

NcPoly relation_cube()
{
    return freealg::comm(ln({kY, kX, kY}), ln({kY, kX, kX})) + exactla::Rational(4) * freealg::power(ln({kY, kX}), 3);
}

bool B2MeetReport::holds() const
{
    bool ok = relation_even_commute && relation_square && relation_cube && b2_6_matches && intersection_6_matches;
    for (const auto& d : degrees)
        ok = ok && d.dim_intersection == d.expected_intersection && d.dim_b2 == (std::size_t{1} << (d.n - 2));
    return ok;
}

B2MeetReport prop6_check()
{
    const std::size_t expected[] = {0, 0, 0, 2, 7};
    B2MeetReport rep;
    for (unsigned n = 2; n <= 6; ++n) {
        const auto table = bigraded(n);
        B2MeetDegree d;
        d.n = n;
        for (const auto& b : table) {
            d.dim_b2 += b.dim;
            d.dim_intersection += b.kernel_dim;
        }
        d.expected_intersection = expected[n - 2];
        d.b2 = gl2_of_b2(table, n);
        d.intersection = gl2_of_kernel(table, n);
        d.quotient = gl2_of_quotient(table, n);
        rep.degrees.push_back(std::move(d));
    }
    const auto& six = rep.degrees.back();
    Decomposition b2_6, int_6;
    b2_6.mult = {{Partition{5, 1}, 1}, {Partition{4, 2}, 3}, {Partition{3, 3}, 2}};
    int_6.mult = {{Partition{4, 2}, 2}, {Partition{3, 3}, 1}};
    rep.b2_6_matches = six.b2 == b2_6;
    rep.intersection_6_matches = six.intersection == int_6;
    rep.relation_even_commute = matrep::is_weak_identity(relation_even_commute());
    rep.relation_square = matrep::is_weak_identity(relation_square());
    rep.relation_cube = matrep::is_weak_identity(relation_cube());
    return rep;
}

std::vector<NcPoly> quotient_family(unsigned n)
{
    std::vector<NcPoly> out;
    const NcPoly yx = ln({kY, kX});
    for (unsigned q = 1; 2 * q <= n; ++q) {
        const unsigned kl = n - 2 * q;
        const NcPoly tail = freealg::power(yx, q - 1);
        for (unsigned k = 0; k <= kl; ++k)
            out.push_back(freealg::b2_factor(k, kl - k) * tail);
    }
    return out;
}

std::vector<QuotientFamilyDegree> quotient_family_report(unsigned N, unsigned cap)
{
    if (N > cap)
        throw std::out_of_range("quotient_family_report: degree " + std::to_string(N) + " exceeds the cap " + std::to_string(cap));
    std::vector<QuotientFamilyDegree> out;
    for (unsigned n = 2; n <= N; ++n) {
        QuotientFamilyDegree d;
        d.n = n;
        const auto family = quotient_family(n);
        d.family_size = family.size();
        d.family_rank = matrep::image_rank(family);
        std::vector<NcPoly> full;
        for (unsigned dy = 0; dy <= n; ++dy)
            for (auto& f : freealg::b2_span(n - dy, dy))
                full.push_back(std::move(f));
        d.full_rank = matrep::image_rank(full);
        out.push_back(d);
    }
    return out;
}

bool prop7_family_check(unsigned N, unsigned cap)
{
    for (const auto& d : quotient_family_report(N, cap))
        if (d.family_rank != d.full_rank)
            return false;
    return true;
}

} // namespace weakid::series
