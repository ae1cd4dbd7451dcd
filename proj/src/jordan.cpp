#include "weakid/jordan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weakid::jordan {

using exactla::SparseVec;
using exactla::Subspace;
using freealg::WordIndex;

namespace {

std::vector<Word> multilinear_words(std::vector<Letter> vars)
{
    std::sort(vars.begin(), vars.end());
    std::vector<Word> out;
    do {
        out.emplace_back(vars);
    } while (std::next_permutation(vars.begin(), vars.end()));
    return out;
}

std::vector<Letter> sorted_unique(std::span<const Letter> v)
{
    std::vector<Letter> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("variable set has repeated entries");
    if (!s.empty() && s.front() == 0)
        throw std::invalid_argument("variable indices start at 1");
    return s;
}

JordanSpan make_span(std::vector<Letter> varset, std::span<const NcPoly> generators)
{
    JordanSpan js;
    js.varset = std::move(varset);
    js.words = WordIndex(multilinear_words(js.varset));
    std::vector<SparseVec> vecs;
    vecs.reserve(generators.size());
    for (const auto& g : generators)
        vecs.push_back(js.words.to_sparse(g));
    js.elements = exactla::echelonize(vecs, js.words.size());
    for (const auto& r : js.elements.rows())
        js.basis.push_back(js.words.to_poly(r));
    return js;
}

struct Memo {
    std::mutex m;
    std::map<std::vector<Letter>, std::shared_ptr<const JordanSpan>> table;
};

Memo& memo()
{
    static Memo instance;
    return instance;
}

} // namespace

NcPoly reversible(const Word& w) { return NcPoly(w) + NcPoly(w.reversed()); }

std::shared_ptr<const JordanSpan> sj_multilinear_span(std::span<const Letter> varset_in)
{
    std::vector<Letter> varset = sorted_unique(varset_in);
    if (varset.empty())
        throw std::invalid_argument("sj_multilinear_span needs a nonempty variable set");
    {
        std::lock_guard lock(memo().m);
        if (auto it = memo().table.find(varset); it != memo().table.end())
            return it->second;
    }

    std::vector<NcPoly> gens;
    if (varset.size() == 1) {
        gens.push_back(NcPoly::var(varset[0]));
    } else {
        // Every Jordan monomial on S is a circle product of Jordan monomials
        // on a split S = S1 + S2; fixing min(S) in S1 covers each split once.
        const std::size_t m = varset.size() - 1;
        for (std::uint32_t mask = 0; mask < (1u << m) - 1; ++mask) {
            std::vector<Letter> s1{varset[0]}, s2;
            for (std::size_t i = 0; i < m; ++i)
                (mask >> i & 1 ? s1 : s2).push_back(varset[i + 1]);
            const auto a = sj_multilinear_span(s1);
            const auto b = sj_multilinear_span(s2);
            for (const auto& u : a->basis)
                for (const auto& v : b->basis)
                    gens.push_back(freealg::circ(u, v));
        }
    }
    auto span = std::make_shared<const JordanSpan>(make_span(varset, gens));

    std::lock_guard lock(memo().m);
    auto [it, fresh] = memo().table.emplace(std::move(varset), std::move(span));
    return it->second;
}

std::shared_ptr<const JordanSpan> sj_multilinear_span(std::initializer_list<Letter> varset)
{
    return sj_multilinear_span(std::span<const Letter>(varset.begin(), varset.size()));
}

JordanSpan reversible_span(std::span<const Letter> varset_in)
{
    std::vector<Letter> varset = sorted_unique(varset_in);
    std::vector<NcPoly> gens;
    for (const auto& w : multilinear_words(varset))
        gens.push_back(reversible(w));
    return make_span(std::move(varset), gens);
}

bool cohn_check(std::span<const Letter> varset)
{
    if (varset.size() > 3)
        throw std::invalid_argument("cohn_check: SJ and H(A,*) differ from four variables on");
    const auto sj = sj_multilinear_span(varset);
    const auto h = reversible_span(varset);
    return exactla::subspace_equal(sj->elements, h.elements);
}

ProductSpanReport product_span_report(unsigned n)
{
    if (n == 0 || n > 5)
        throw std::invalid_argument("product_span_report: degree must be in 1..5");
    std::vector<Letter> all(n);
    std::iota(all.begin(), all.end(), Letter{1});
    const WordIndex& idx = freealg::p_index(n);

    std::vector<SparseVec> family;
    for (const auto& u : sj_multilinear_span(all)->basis)
        family.push_back(idx.to_sparse(u));

    for (std::uint32_t umask = 0; umask < (1u << n); ++umask) {
        std::vector<Letter> U, R;
        for (unsigned i = 0; i < n; ++i)
            (umask >> i & 1 ? U : R).push_back(all[i]);
        if (R.size() < 2)
            continue;
        std::vector<NcPoly> us;
        if (U.empty())
            us.push_back(NcPoly::unit());
        else
            us = sj_multilinear_span(U)->basis;
        // [v, w] = -[w, v]: keep min(R) in V
        const std::size_t m = R.size() - 1;
        for (std::uint32_t vmask = 0; vmask < (1u << m) - 1; ++vmask) {
            std::vector<Letter> V{R[0]}, W;
            for (std::size_t i = 0; i < m; ++i)
                (vmask >> i & 1 ? V : W).push_back(R[i + 1]);
            const auto vs = sj_multilinear_span(V);
            const auto ws = sj_multilinear_span(W);
            for (const auto& v : vs->basis)
                for (const auto& w : ws->basis) {
                    const NcPoly c = freealg::comm(v, w);
                    for (const auto& u : us)
                        family.push_back(idx.to_sparse(u * c));
                }
        }
    }
    ProductSpanReport rep;
    rep.n = n;
    rep.family_size = family.size();
    rep.rank = exactla::rank(family, idx.size());
    rep.target = idx.size();
    return rep;
}

bool corollary2_check(unsigned n) { return product_span_report(n).holds(); }

} // namespace weakid::jordan
