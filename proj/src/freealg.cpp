#include "weakid/freealg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weakid::freealg {

using exactla::Column;
using exactla::Entry;
using exactla::SparseVec;
using exactla::Subspace;

// ---------------------------------------------------------------------------
// Word

Word Word::reversed() const { return Word(std::vector<Letter>(letters.rbegin(), letters.rend())); }

Word operator*(const Word& a, const Word& b)
{
    std::vector<Letter> l;
    l.reserve(a.letters.size() + b.letters.size());
    l.insert(l.end(), a.letters.begin(), a.letters.end());
    l.insert(l.end(), b.letters.begin(), b.letters.end());
    return Word(std::move(l));
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
        return c;
    return a.letters <=> b.letters;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : w.letters) {
        h ^= l;
        h *= 1099511628211ULL;
    }
    return h ^ w.letters.size();
}

MultiDegree multidegree(const Word& w)
{
    MultiDegree md;
    for (Letter l : w.letters)
        ++md[l];
    return md;
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly::NcPoly(const Word& w, Rational c)
{
    if (sgn(c) != 0)
        terms_.emplace(w, std::move(c));
}

NcPoly NcPoly::var(Letter i)
{
    if (i == 0)
        throw std::invalid_argument("variable indices start at 1");
    return NcPoly(Word{i});
}

NcPoly NcPoly::constant(const Rational& c) { return NcPoly(Word{}, c); }

Rational NcPoly::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b)
{
    NcPoly out;
    Rational t;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            t = ca * cb;
            out.add_term(wa * wb, t);
        }
    return out;
}

Letter NcPoly::max_variable() const
{
    Letter m = 0;
    for (const auto& [w, c] : terms_)
        for (Letter l : w.letters)
            m = std::max(m, l);
    return m;
}

std::vector<Letter> NcPoly::variables() const
{
    std::vector<bool> seen(256, false);
    for (const auto& [w, c] : terms_)
        for (Letter l : w.letters)
            seen[l] = true;
    std::vector<Letter> out;
    for (unsigned i = 1; i < 256; ++i)
        if (seen[i])
            out.push_back(static_cast<Letter>(i));
    return out;
}

int NcPoly::homogeneous_degree() const
{
    if (terms_.empty())
        return 0;
    const std::size_t d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d)
            return -1;
    return static_cast<int>(d);
}

bool NcPoly::is_multihomogeneous(MultiDegree* md) const
{
    MultiDegree first;
    bool have = false;
    for (const auto& [w, c] : terms_) {
        MultiDegree m = multidegree(w);
        if (!have) {
            first = std::move(m);
            have = true;
        } else if (m != first) {
            return false;
        }
    }
    if (md)
        *md = first;
    return true;
}

bool NcPoly::is_multilinear_in(unsigned n) const
{
    for (const auto& [w, c] : terms_) {
        if (w.degree() != n)
            return false;
        std::vector<bool> seen(n + 1, false);
        for (Letter l : w.letters) {
            if (l == 0 || l > n || seen[l])
                return false;
            seen[l] = true;
        }
    }
    return true;
}

std::string NcPoly::render() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool neg = sgn(c) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const Rational a = abs(c);
        if (w.is_unit()) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << '*';
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (i)
                os << '*';
            os << 'x' << static_cast<unsigned>(w.letters[i]);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Operations

NcPoly comm(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

NcPoly left_normed(std::span<const NcPoly> args)
{
    if (args.size() < 2)
        throw std::invalid_argument("left-normed commutator needs at least two arguments");
    NcPoly acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i)
        acc = comm(acc, args[i]);
    return acc;
}

NcPoly left_normed(std::initializer_list<NcPoly> args)
{
    return left_normed(std::span<const NcPoly>(args.begin(), args.size()));
}

NcPoly circ(const NcPoly& f, const NcPoly& g) { return f * g + g * f; }

NcPoly involution(const NcPoly& f)
{
    NcPoly out;
    for (const auto& [w, c] : f.terms())
        out.add_term(w.reversed(), c);
    return out;
}

NcPoly power(const NcPoly& f, unsigned e)
{
    NcPoly acc = NcPoly::unit();
    for (unsigned i = 0; i < e; ++i)
        acc = acc * f;
    return acc;
}

NcPoly standard(std::span<const NcPoly> args)
{
    const std::size_t k = args.size();
    if (k == 0)
        throw std::invalid_argument("standard polynomial needs at least one argument");
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    NcPoly out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                inversions += perm[i] > perm[j];
        NcPoly term = NcPoly::constant(inversions % 2 ? -1 : 1);
        for (std::size_t i : perm)
            term = term * args[i];
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

NcPoly standard_poly(unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("S_k requires k >= 1");
    std::vector<NcPoly> xs;
    for (unsigned i = 1; i <= k; ++i)
        xs.push_back(NcPoly::var(static_cast<Letter>(i)));
    return standard(xs);
}

NcPoly metabelian_poly()
{
    auto x = [](Letter i) { return NcPoly::var(i); };
    return comm(comm(x(1), x(2)), comm(x(3), x(4)));
}

NcPoly substitute(const NcPoly& f, std::span<const NcPoly> values)
{
    NcPoly out;
    for (const auto& [w, c] : f.terms()) {
        NcPoly term = NcPoly::constant(c);
        for (Letter l : w.letters) {
            if (l == 0 || l > values.size())
                throw std::invalid_argument("substitute: no value for x" + std::to_string(l));
            term = term * values[l - 1];
        }
        out += term;
    }
    return out;
}

NcPoly relabel(const NcPoly& f, std::span<const Letter> map)
{
    NcPoly out;
    for (const auto& [w, c] : f.terms()) {
        Word r;
        r.letters.reserve(w.degree());
        for (Letter l : w.letters) {
            if (l == 0 || l > map.size())
                throw std::invalid_argument("relabel: no image for x" + std::to_string(l));
            r.letters.push_back(map[l - 1]);
        }
        out.add_term(r, c);
    }
    return out;
}

NcPoly multilinearize(const NcPoly& f)
{
    MultiDegree md;
    if (!f.is_multihomogeneous(&md))
        throw std::invalid_argument("multilinearize: polynomial is not multihomogeneous");
    std::map<Letter, unsigned> offset;
    unsigned next = 1;
    for (const auto& [v, d] : md) {
        offset[v] = next;
        next += d;
    }
    if (next - 1 > 255)
        throw std::invalid_argument("multilinearize: too many variables");

    NcPoly out;
    for (const auto& [w, c] : f.terms()) {
        // positions of each variable in the word
        std::map<Letter, std::vector<std::size_t>> pos;
        for (std::size_t i = 0; i < w.degree(); ++i)
            pos[w.letters[i]].push_back(i);
        std::vector<Word> acc{w};
        for (const auto& [v, where] : pos) {
            std::vector<Letter> labels(where.size());
            std::iota(labels.begin(), labels.end(), static_cast<Letter>(offset[v]));
            std::vector<Word> next_acc;
            for (const Word& base : acc) {
                std::vector<Letter> perm = labels;
                do {
                    Word nw = base;
                    for (std::size_t k = 0; k < where.size(); ++k)
                        nw.letters[where[k]] = perm[k];
                    next_acc.push_back(std::move(nw));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
            acc = std::move(next_acc);
        }
        for (const Word& nw : acc)
            out.add_term(nw, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// WordIndex

WordIndex::WordIndex(std::vector<Word> words)
{
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        index_.emplace(words_[i], static_cast<Column>(i));
}

WordIndex WordIndex::of(std::span<const NcPoly> polys)
{
    std::vector<Word> words;
    for (const auto& f : polys)
        for (const auto& [w, c] : f.terms())
            words.push_back(w);
    return WordIndex(std::move(words));
}

std::optional<Column> WordIndex::find(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Column WordIndex::at(const Word& w) const
{
    auto c = find(w);
    if (!c) {
        std::string s;
        for (Letter l : w.letters)
            s += "x" + std::to_string(l);
        throw std::out_of_range("word " + s + " outside the column universe");
    }
    return *c;
}

SparseVec WordIndex::to_sparse(const NcPoly& f) const
{
    std::vector<Entry> e;
    e.reserve(f.size());
    for (const auto& [w, c] : f.terms())
        e.push_back({at(w), c});
    return SparseVec::from_entries(std::move(e));
}

NcPoly WordIndex::to_poly(const SparseVec& v) const
{
    NcPoly out;
    for (const auto& e : v.entries())
        out.add_term(word(e.col), e.value);
    return out;
}

// ---------------------------------------------------------------------------
// Spanning families

std::vector<Word> p_basis(unsigned n)
{
    std::vector<Letter> l(n);
    std::iota(l.begin(), l.end(), Letter{1});
    std::vector<Word> out;
    do {
        out.emplace_back(l);
    } while (std::next_permutation(l.begin(), l.end()));
    return out;
}

const WordIndex& p_index(unsigned n)
{
    static std::mutex m;
    static std::map<unsigned, std::unique_ptr<WordIndex>> cache;
    std::lock_guard lock(m);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<WordIndex>(p_basis(n));
    return *slot;
}

namespace {

// Set partitions of `elems` into blocks of size >= 2, blocks ordered by
// their smallest element (each block is sorted).
void set_partitions_min2(std::vector<Letter> elems, std::vector<std::vector<Letter>>& cur,
                         std::vector<std::vector<std::vector<Letter>>>& out)
{
    if (elems.empty()) {
        out.push_back(cur);
        return;
    }
    const Letter head = elems.front();
    std::vector<Letter> rest(elems.begin() + 1, elems.end());
    const std::size_t m = rest.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<Letter> block{head};
        std::vector<Letter> remaining;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1)
                block.push_back(rest[i]);
            else
                remaining.push_back(rest[i]);
        }
        cur.push_back(block);
        set_partitions_min2(remaining, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<NcPoly> gamma_family(unsigned n)
{
    if (n == 0)
        return {NcPoly::unit()};
    std::vector<Letter> elems(n);
    std::iota(elems.begin(), elems.end(), Letter{1});
    std::vector<std::vector<Letter>> cur;
    std::vector<std::vector<std::vector<Letter>>> partitions;
    set_partitions_min2(elems, cur, partitions);

    std::vector<NcPoly> out;
    for (const auto& blocks : partitions) {
        // all left-normed commutators for each block
        std::vector<std::vector<NcPoly>> factors;
        for (auto block : blocks) {
            std::vector<NcPoly> cs;
            std::sort(block.begin(), block.end());
            do {
                std::vector<NcPoly> args;
                for (Letter l : block)
                    args.push_back(NcPoly::var(l));
                cs.push_back(left_normed(args));
            } while (std::next_permutation(block.begin(), block.end()));
            factors.push_back(std::move(cs));
        }
        std::vector<NcPoly> prods{NcPoly::unit()};
        for (const auto& cs : factors) {
            std::vector<NcPoly> next;
            next.reserve(prods.size() * cs.size());
            for (const auto& p : prods)
                for (const auto& c : cs)
                    next.push_back(p * c);
            prods = std::move(next);
        }
        for (auto& p : prods)
            if (!p.is_zero())
                out.push_back(std::move(p));
    }
    return out;
}

Subspace gamma_span(unsigned n)
{
    const WordIndex& idx = p_index(n);
    const auto family = gamma_family(n);
    std::vector<SparseVec> vecs;
    vecs.reserve(family.size());
    for (const auto& f : family)
        vecs.push_back(idx.to_sparse(f));
    return exactla::echelonize(vecs, idx.size());
}

NcPoly b2_factor(unsigned k, unsigned l)
{
    std::vector<NcPoly> args{NcPoly::var(kY), NcPoly::var(kX)};
    for (unsigned i = 0; i < k; ++i)
        args.push_back(NcPoly::var(kX));
    for (unsigned i = 0; i < l; ++i)
        args.push_back(NcPoly::var(kY));
    return left_normed(args);
}

namespace {

void b2_products(unsigned dx, unsigned dy, const NcPoly& prefix, std::vector<NcPoly>& out)
{
    if (dx == 0 && dy == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned k = 0; k + 1 <= dx; ++k)
        for (unsigned l = 0; l + 1 <= dy; ++l)
            b2_products(dx - 1 - k, dy - 1 - l, prefix * b2_factor(k, l), out);
}

} // namespace

std::vector<NcPoly> b2_span(unsigned dx, unsigned dy)
{
    if (dx + dy < 2)
        throw std::invalid_argument("b2_span needs total degree >= 2");
    std::vector<NcPoly> out;
    b2_products(dx, dy, NcPoly::unit(), out);
    return out;
}

} // namespace weakid::freealg
