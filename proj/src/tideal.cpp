#include "weakid/tideal.hpp"

#include "weakid/jordan.hpp"
#include "weakid/matrep.hpp"
#include "weakid/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace weakid::tideal {

using exactla::Column;
using exactla::Entry;
using exactla::SparseVec;
using freealg::Letter;
using freealg::Word;
using freealg::WordIndex;

namespace {

struct VecHash {
    std::size_t operator()(const SparseVec& v) const noexcept
    {
        std::size_t h = v.nnz();
        for (const auto& e : v.entries()) {
            h = h * 1000003u ^ e.col;
            h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(e.value.get_num_mpz_t()));
            h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(e.value.get_den_mpz_t()));
        }
        return h;
    }
};

bool lead_then_short(const SparseVec& a, const SparseVec& b)
{
    if (*a.leading() != *b.leading())
        return *a.leading() < *b.leading();
    return a.nnz() < b.nnz();
}

class Stopwatch {
public:
    double lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }
    double total() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_ = start_;
};

Subspace full_space(unsigned n)
{
    const std::size_t d = freealg::p_index(n).size();
    std::vector<SparseVec> rows;
    rows.reserve(d);
    for (Column c = 0; c < d; ++c)
        rows.push_back(SparseVec::unit(c));
    return Subspace::from_rref(std::move(rows), d);
}

} // namespace

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens))
{
    for (const auto& g : gens_) {
        if (g.arity == 0 || g.arity > 8 || !g.poly.is_multilinear_in(g.arity))
            throw std::invalid_argument("generator " + g.name + " is not multilinear in x1..x" +
                                        std::to_string(g.arity));
        std::vector<bool> zero(g.arity);
        for (unsigned pos = 0; pos < g.arity; ++pos) {
            std::vector<NcPoly> values;
            for (unsigned i = 1; i <= g.arity; ++i)
                values.push_back(i == pos + 1 ? NcPoly::unit() : NcPoly::var(static_cast<Letter>(i)));
            zero[pos] = freealg::substitute(g.poly, values).is_zero();
        }
        unit_zero_.push_back(std::move(zero));
    }
}

GeneratorSet GeneratorSet::standard()
{
    return GeneratorSet({{"S4", freealg::standard_poly(4), 4}, {"metabelian", freealg::metabelian_poly(), 4}});
}

unsigned GeneratorSet::max_arity() const noexcept
{
    unsigned m = 0;
    for (const auto& g : gens_)
        m = std::max(m, g.arity);
    return m;
}

// ---------------------------------------------------------------------------
// ConsequenceEngine

ConsequenceEngine::ConsequenceEngine(GeneratorSet gens, unsigned max_degree)
    : gens_(std::move(gens)), max_degree_(max_degree)
{
}

std::vector<SparseVec> ConsequenceEngine::core(unsigned n) const
{
    const WordIndex& idx = freealg::p_index(n);
    std::vector<SparseVec> out;
    std::unordered_set<SparseVec, VecHash> seen;

    for (std::size_t gi = 0; gi < gens_.generators().size(); ++gi) {
        const Generator& g = gens_.generators()[gi];
        const unsigned k = g.arity;
        std::size_t codes = 1;
        for (unsigned i = 0; i < n; ++i)
            codes *= k;

        // Code c sends variable i to block (c / k^(i-1)) mod k.
        auto per_code = parallel_map<std::vector<SparseVec>>(codes, [&](std::size_t code) {
            std::vector<std::vector<Letter>> blocks(k);
            for (unsigned i = 1; i <= n; ++i, code /= k)
                blocks[code % k].push_back(static_cast<Letter>(i));
            std::vector<std::vector<NcPoly>> choices(k);
            for (unsigned j = 0; j < k; ++j) {
                if (blocks[j].empty()) {
                    if (gens_.vanishes_on_unit(gi, j))
                        return std::vector<SparseVec>{};
                    choices[j] = {NcPoly::unit()};
                } else {
                    choices[j] = jordan::sj_multilinear_span(blocks[j])->basis;
                }
            }
            std::vector<SparseVec> res;
            std::vector<std::size_t> pick(k, 0);
            std::vector<NcPoly> values(k);
            for (;;) {
                for (unsigned j = 0; j < k; ++j)
                    values[j] = choices[j][pick[j]];
                SparseVec v = idx.to_sparse(freealg::substitute(g.poly, values));
                if (!v.empty())
                    res.push_back(v.normalized());
                unsigned j = 0;
                while (j < k && ++pick[j] == choices[j].size())
                    pick[j++] = 0;
                if (j == k)
                    break;
            }
            return res;
        });
        for (auto& vs : per_code)
            for (auto& v : vs)
                if (seen.insert(v).second)
                    out.push_back(std::move(v));
    }
    return out;
}

Subspace ConsequenceEngine::build(unsigned n, const Subspace* previous) const
{
    const WordIndex& idx = freealg::p_index(n);
    std::vector<SparseVec> left, rest;

    if (previous && n >= 1) {
        const WordIndex& pidx = freealg::p_index(n - 1);
        for (unsigned i = 1; i <= n; ++i) {
            // x_i * rho(w) and rho(w) * x_i, rho the increasing relabeling
            // {1..n-1} -> {1..n} \ {i}
            std::vector<Column> lmap(pidx.size()), rmap(pidx.size());
            for (Column c = 0; c < pidx.size(); ++c) {
                Word w = pidx.word(c);
                for (auto& l : w.letters)
                    if (l >= i)
                        ++l;
                const Word xi{static_cast<Letter>(i)};
                lmap[c] = idx.at(xi * w);
                rmap[c] = idx.at(w * xi);
            }
            for (const auto& r : previous->rows()) {
                std::vector<Entry> le, re;
                for (const auto& e : r.entries()) {
                    le.push_back({lmap[e.col], e.value});
                    re.push_back({rmap[e.col], e.value});
                }
                left.push_back(SparseVec::from_sorted(std::move(le)));
                rest.push_back(SparseVec::from_entries(std::move(re)));
            }
        }
    }

    // Left multiples for different i live on disjoint blocks of words (by
    // first letter), each block a relabeled RREF: together already reduced.
    Subspace s = Subspace::from_rref(std::move(left), idx.size());
    for (auto& v : core(n))
        rest.push_back(std::move(v));
    std::sort(rest.begin(), rest.end(), lead_then_short);
    for (const auto& v : rest)
        s.insert(v);
    return s;
}

const Subspace& ConsequenceEngine::span(unsigned n)
{
    if (n > max_degree_)
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds the configured maximum " +
                                std::to_string(max_degree_));
    {
        std::lock_guard lock(mutex_);
        if (auto it = spans_.find(n); it != spans_.end())
            return *it->second;
    }
    const Subspace* previous = n == 0 ? nullptr : &span(n - 1);
    auto built = std::make_unique<Subspace>(build(n, previous));
    std::lock_guard lock(mutex_);
    auto [it, fresh] = spans_.emplace(n, std::move(built));
    return *it->second;
}

bool ConsequenceEngine::is_consequence(const NcPoly& f)
{
    std::map<freealg::MultiDegree, NcPoly> parts;
    for (const auto& [w, c] : f.terms())
        parts[freealg::multidegree(w)].add_term(w, c);
    for (const auto& [md, part] : parts) {
        const NcPoly g = freealg::multilinearize(part);
        const int d = g.homogeneous_degree();
        if (d < 0 || !g.is_multilinear_in(static_cast<unsigned>(d)))
            throw std::logic_error("multilinearization did not produce a multilinear polynomial");
        const auto n = static_cast<unsigned>(d);
        if (!span(n).contains(freealg::p_index(n).to_sparse(g)))
            return false;
    }
    return true;
}

ConsequenceEngine& standard_engine()
{
    static ConsequenceEngine engine(GeneratorSet::standard());
    return engine;
}

Subspace consequences_span(const GeneratorSet& g, unsigned n)
{
    ConsequenceEngine engine(g, n);
    return engine.span(n);
}

bool is_consequence(const NcPoly& f, const GeneratorSet& g)
{
    unsigned degree = 0;
    for (const auto& [w, c] : f.terms())
        degree = std::max(degree, static_cast<unsigned>(w.degree()));
    ConsequenceEngine engine(g, std::max(degree, 7u));
    return engine.is_consequence(f);
}

// ---------------------------------------------------------------------------
// Theorem verification

DegreeReport verify_theorem(unsigned n, const VerifyOptions& opts)
{
    return verify_theorem(n, standard_engine(), opts);
}

DegreeReport verify_theorem(unsigned n, ConsequenceEngine& engine, const VerifyOptions& opts)
{
    if (n < 4 || n > 7)
        throw std::invalid_argument("verify_theorem: degree must be in 4..7");
    Stopwatch clock;
    DegreeReport rep;
    rep.degree = n;
    rep.space = opts.space;
    const WordIndex& idx = freealg::p_index(n);

    const Subspace gamma = freealg::gamma_span(n);
    const matrep::PairKernel gk = matrep::kernel_of_pair(idx, gamma);
    rep.dim_gamma = gamma.dim();
    rep.dim_gamma_kernel = gk.kernel.dim();
    rep.timings_ms["gamma_kernel"] = clock.lap();

    const Subspace& cons = engine.span(n);
    rep.timings_ms["consequences"] = clock.lap();

    if (opts.space == Space::FullP) {
        const matrep::PairKernel k = matrep::kernel_of_pair(idx, full_space(n));
        rep.timings_ms["kernel"] = clock.lap();
        rep.dim_P = idx.size();
        rep.dim_kernel = k.kernel.dim();
        rep.dim_consequences = cons.dim();
        rep.containment = exactla::subspace_includes(k.kernel, cons);
        rep.equal = rep.containment && rep.dim_consequences == rep.dim_kernel;
    } else {
        const Subspace gc = exactla::subspace_intersection(gamma, cons);
        rep.dim_P = gamma.dim();
        rep.dim_kernel = gk.kernel.dim();
        rep.dim_consequences = gc.dim();
        rep.containment = exactla::subspace_includes(gk.kernel, gc);
        rep.equal = rep.containment && rep.dim_consequences == rep.dim_kernel;
    }
    rep.timings_ms["compare"] = clock.lap();

    if (opts.decompose) {
        rep.decomposition = repthy::decompose_quotient(gamma, gk.kernel, n);
        rep.timings_ms["decomposition"] = clock.lap();
    }
    rep.timings_ms["total"] = clock.total();
    return rep;
}

} // namespace weakid::tideal
