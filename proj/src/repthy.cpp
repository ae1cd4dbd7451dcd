#include "weakid/repthy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weakid::repthy {

using exactla::Column;
using exactla::Entry;
using exactla::SparseVec;
using freealg::Letter;

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    std::erase(parts_, 0u);
}

unsigned Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Partition::render() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (i)
            os << ',';
        os << parts_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        i = j;
    }
    os << ')';
    return os.str();
}

namespace {

void partitions_rec(unsigned rest, unsigned cap, std::vector<unsigned>& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned p = std::min(rest, cap); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::uint64_t factorial(unsigned n)
{
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Characters on beta-sets: removing an r-rim hook is moving a bead from b to
// b - r, with sign (-1)^(beads strictly between).
long long mn_beta(std::vector<int> beta, std::span<const unsigned> rho)
{
    if (rho.empty())
        return 1;
    const int r = static_cast<int>(rho.front());
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        const int t = b - r;
        if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end())
            continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b)
                ++between;
        std::vector<int> next = beta;
        next[i] = t;
        const long long sub = mn_beta(std::move(next), rho.subspan(1));
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

void cycle_type_check(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw std::invalid_argument("mn_character: " + lambda.render() + " and " + rho.render() +
                                    " are partitions of different integers");
}

std::vector<Column> column_permutation(std::span<const Letter> sigma, unsigned n)
{
    const auto& idx = freealg::p_index(n);
    std::vector<Column> perm(idx.size());
    for (Column c = 0; c < idx.size(); ++c) {
        freealg::Word w = idx.word(c);
        for (auto& l : w.letters)
            l = sigma[l - 1];
        perm[c] = idx.at(w);
    }
    return perm;
}

SparseVec permute(const std::vector<Column>& perm, const SparseVec& v)
{
    std::vector<Entry> e;
    e.reserve(v.nnz());
    for (const auto& x : v.entries())
        e.push_back({perm[x.col], x.value});
    return SparseVec::from_entries(std::move(e));
}

void check_over_pn(const Subspace& s, unsigned n)
{
    if (s.ambient() != freealg::p_index(n).size())
        throw std::invalid_argument("subspace does not live in P_" + std::to_string(n));
}

} // namespace

std::vector<Partition> partitions(unsigned n)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

long long mn_character(const Partition& lambda, const Partition& rho)
{
    cycle_type_check(lambda, rho);
    const std::size_t len = lambda.length();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = static_cast<int>(lambda[i] + (len - 1 - i));
    return mn_beta(std::move(beta), rho.parts());
}

std::uint64_t dim_M(const Partition& lambda)
{
    // n!/prod(hooks), accumulated as a fraction to stay in range.
    mpz_class num = factorial(lambda.size());
    mpz_class den = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (unsigned j = 0; j < lambda[i]; ++j) {
            unsigned leg = 0;
            for (std::size_t k = i + 1; k < lambda.length() && lambda[k] > j; ++k)
                ++leg;
            den *= (lambda[i] - j - 1) + leg + 1;
        }
    mpz_class q = num / den;
    return q.get_ui();
}

unsigned dim_N2(unsigned l1, unsigned l2)
{
    if (l1 < l2)
        throw std::invalid_argument("dim_N2: need l1 >= l2");
    return l1 - l2 + 1;
}

unsigned dim_N2(const Partition& lambda)
{
    if (lambda.length() > 2)
        throw std::invalid_argument("dim_N2: " + lambda.render() + " has more than two parts");
    return dim_N2(lambda[0], lambda[1]);
}

std::uint64_t class_size(const Partition& rho)
{
    // z_rho = prod_i i^{m_i} m_i!
    std::uint64_t z = 1;
    const auto parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        for (std::size_t k = 0; k < j - i; ++k)
            z *= parts[i];
        z *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return factorial(rho.size()) / z;
}

std::vector<Letter> class_representative(const Partition& rho)
{
    std::vector<Letter> sigma(rho.size());
    unsigned start = 0;
    for (unsigned len : rho.parts()) {
        for (unsigned k = 0; k < len; ++k)
            sigma[start + k] = static_cast<Letter>(start + (k + 1) % len + 1);
        start += len;
    }
    return sigma;
}

std::size_t Decomposition::sn_dimension() const
{
    std::size_t d = 0;
    for (const auto& [p, m] : mult)
        d += m * dim_M(p);
    return d;
}

std::string Decomposition::render(const std::string& module) const
{
    std::string out;
    for (const auto& [p, m] : mult) {
        if (m == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (m > 1)
            out += std::to_string(m);
        out += module + p.render();
    }
    return out.empty() ? "0" : out;
}

Decomposition decompose_character(std::span<const Rational> chi, unsigned n)
{
    const auto ps = partitions(n);
    if (chi.size() != ps.size())
        throw std::invalid_argument("decompose_character: expected one value per partition of n");
    const Rational order = Rational(mpz_class(factorial(n)));
    Decomposition d;
    for (const auto& lambda : ps) {
        Rational s = 0;
        for (std::size_t k = 0; k < ps.size(); ++k)
            s += Rational(mpz_class(class_size(ps[k]))) * chi[k] * static_cast<long>(mn_character(lambda, ps[k]));
        s /= order;
        if (s.get_den() != 1 || sgn(s) < 0)
            throw std::logic_error("decompose_character: multiplicity of " + lambda.render() + " is " + s.get_str() +
                                   ", not a nonnegative integer");
        if (sgn(s) > 0)
            d.mult[lambda] = static_cast<unsigned>(s.get_num().get_ui());
    }
    return d;
}

SparseVec act(std::span<const Letter> sigma, const SparseVec& v, unsigned n)
{
    if (sigma.size() != n)
        throw std::invalid_argument("act: permutation of the wrong degree");
    return permute(column_permutation(sigma, n), v);
}

bool is_stable(const Subspace& s, unsigned n)
{
    check_over_pn(s, n);
    if (n < 2)
        return true;
    std::vector<Letter> swap(n), cycle(n);
    for (unsigned i = 0; i < n; ++i) {
        swap[i] = static_cast<Letter>(i + 1);
        cycle[i] = static_cast<Letter>((i + 1) % n + 1);
    }
    std::swap(swap[0], swap[1]);
    for (const auto& sigma : {swap, cycle}) {
        const auto perm = column_permutation(sigma, n);
        for (const auto& r : s.rows())
            if (!s.contains(permute(perm, r)))
                return false;
    }
    return true;
}

std::vector<Rational> character_of(const Subspace& s, unsigned n)
{
    if (!is_stable(s, n))
        throw std::invalid_argument("character_of: subspace is not Sym(n)-stable");
    const auto ps = partitions(n);
    std::vector<Rational> chi;
    chi.reserve(ps.size());
    const auto pivots = s.pivots();
    for (const auto& rho : ps) {
        const auto perm = column_permutation(class_representative(rho), n);
        // In RREF the coefficient of row j in a vector of the span is its
        // entry in pivot column j.
        Rational tr = 0;
        for (std::size_t i = 0; i < s.dim(); ++i)
            tr += permute(perm, s.rows()[i]).coeff(pivots[i]);
        chi.push_back(tr);
    }
    return chi;
}

Decomposition decompose(const Subspace& s, unsigned n) { return decompose_character(character_of(s, n), n); }

Decomposition decompose_quotient(const Subspace& ambient, const Subspace& sub, unsigned n)
{
    if (!exactla::subspace_includes(ambient, sub))
        throw std::invalid_argument("decompose_quotient: subspace is not contained in the ambient space");
    auto chi = character_of(ambient, n);
    const auto chi_sub = character_of(sub, n);
    for (std::size_t k = 0; k < chi.size(); ++k)
        chi[k] -= chi_sub[k];
    return decompose_character(chi, n);
}

Decomposition gl2_from_weights(const std::map<std::pair<unsigned, unsigned>, std::size_t>& weights, unsigned n)
{
    auto w = [&](unsigned a, unsigned b) -> long long {
        auto it = weights.find({a, b});
        return it == weights.end() ? 0 : static_cast<long long>(it->second);
    };
    Decomposition d;
    for (unsigned l2 = 0; 2 * l2 <= n; ++l2) {
        const unsigned l1 = n - l2;
        const long long m = w(l1, l2) - (l2 == 0 ? 0 : w(l1 + 1, l2 - 1));
        if (m < 0)
            throw std::logic_error("gl2_from_weights: weights are not those of a polynomial GL_2-module");
        if (m > 0)
            d.mult[Partition{l1, l2}] = static_cast<unsigned>(m);
    }
    return d;
}

} // namespace weakid::repthy
