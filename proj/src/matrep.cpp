#include "weakid/matrep.hpp"

#include "weakid/parallel.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace weakid::matrep {

using exactla::Column;
using exactla::Entry;
using exactla::SparseVec;
using exactla::Subspace;
using freealg::Word;
using freealg::WordIndex;

// ---------------------------------------------------------------------------
// Monomial / CommPoly

unsigned Monomial::degree() const noexcept
{
    unsigned d = 0;
    for (auto e : exp)
        d += e;
    return d;
}

Monomial Monomial::times(unsigned slot) const
{
    Monomial m = *this;
    if (m.exp[slot] == 255)
        throw std::overflow_error("monomial exponent overflow");
    ++m.exp[slot];
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (unsigned i = 0; i < kSlots; ++i) {
        const unsigned s = unsigned(a.exp[i]) + b.exp[i];
        if (s > 255)
            throw std::overflow_error("monomial exponent overflow");
        m.exp[i] = static_cast<std::uint8_t>(s);
    }
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    return a.exp <=> b.exp;
}

CommPoly CommPoly::constant(const Rational& c)
{
    CommPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

CommPoly CommPoly::indeterminate(Letter var, Slot s)
{
    if (var == 0 || var > kMaxVars)
        throw std::out_of_range("generic matrices support variables x1..x" + std::to_string(kMaxVars));
    CommPoly p;
    p.add_term(Monomial{}.times(slot_index(var, s)), 1);
    return p;
}

void CommPoly::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b)
{
    CommPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

CommPoly CommPoly::times_slot(unsigned slot) const
{
    // Multiplying every key by the same indeterminate preserves the order.
    CommPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m.times(slot), c);
    return out;
}

Rational CommPoly::evaluate(std::span<const Rational> point) const
{
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < kSlots && sgn(t) != 0; ++i)
            for (unsigned k = 0; k < m.exp[i]; ++k)
                t *= point[i];
        total += t;
    }
    return total;
}

std::string CommPoly::render() const
{
    if (terms_.empty())
        return "0";
    static constexpr char names[3] = {'a', 'b', 'c'};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = sgn(c) < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const Rational a = abs(c);
        const bool unit = m.degree() == 0;
        if (unit || a != 1)
            os << a.get_str();
        bool need_star = !unit && a != 1;
        for (unsigned i = 0; i < kSlots; ++i) {
            if (!m.exp[i])
                continue;
            if (need_star)
                os << '*';
            need_star = true;
            os << names[i % 3] << (i / 3 + 1);
            if (m.exp[i] > 1)
                os << '^' << unsigned(m.exp[i]);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::identity() { return scalar(1); }

Mat2 Mat2::scalar(const Rational& c)
{
    Mat2 m;
    m.e[0] = CommPoly::constant(c);
    m.e[3] = CommPoly::constant(c);
    return m;
}

Mat2 Mat2::transpose() const
{
    Mat2 t = *this;
    std::swap(t.e[1], t.e[2]);
    return t;
}

bool Mat2::is_zero() const
{
    return std::all_of(e.begin(), e.end(), [](const CommPoly& p) { return p.is_zero(); });
}

Mat2 Mat2::times_generic(Letter var) const
{
    if (var == 0 || var > kMaxVars)
        throw std::out_of_range("generic matrices support variables x1..x" + std::to_string(kMaxVars));
    const unsigned a = slot_index(var, Slot::A);
    const unsigned b = slot_index(var, Slot::B);
    const unsigned c = slot_index(var, Slot::C);
    Mat2 out;
    for (int r = 0; r < 2; ++r) {
        out.at(r, 0) = at(r, 0).times_slot(a) + at(r, 1).times_slot(b);
        out.at(r, 1) = at(r, 0).times_slot(b) + at(r, 1).times_slot(c);
    }
    return out;
}

Mat2& Mat2::operator+=(const Mat2& o)
{
    for (int i = 0; i < 4; ++i)
        e[i] += o.e[i];
    return *this;
}

Mat2& Mat2::operator*=(const Rational& s)
{
    for (auto& p : e)
        p *= s;
    return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    return out;
}

Mat2 generic_symmetric(Letter var) { return Mat2::identity().times_generic(var); }

Assignment generic_assignment(std::span<const Letter> vars)
{
    Assignment a;
    for (Letter v : vars)
        a.emplace(v, generic_symmetric(v));
    return a;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Evaluates words in deg-lex order, reusing the product of the longest
// shared prefix with the previous word.
template <class Step>
class PrefixEvaluator {
public:
    explicit PrefixEvaluator(Step step) : step_(std::move(step)) { stack_.push_back(Mat2::identity()); }

    const Mat2& operator()(const Word& w)
    {
        std::size_t common = 0;
        while (common < prev_.size() && common < w.degree() && prev_[common] == w.letters[common])
            ++common;
        stack_.resize(common + 1);
        for (std::size_t k = common; k < w.degree(); ++k)
            stack_.push_back(step_(stack_.back(), w.letters[k]));
        prev_ = w.letters;
        return stack_.back();
    }

private:
    Step step_;
    std::vector<Mat2> stack_;
    std::vector<Letter> prev_;
};

template <class Step>
Mat2 eval_with(const NcPoly& f, Step step)
{
    PrefixEvaluator<Step> ev(std::move(step));
    Mat2 out;
    for (const auto& [w, c] : f.terms()) {
        Mat2 t = ev(w);
        t *= c;
        out += t;
    }
    return out;
}

} // namespace

Mat2 eval(const NcPoly& f, const Assignment& a)
{
    return eval_with(f, [&a](const Mat2& m, Letter l) {
        auto it = a.find(l);
        if (it == a.end())
            throw std::invalid_argument("eval: variable x" + std::to_string(l) + " is not assigned");
        return m * it->second;
    });
}

Mat2 eval_generic(const NcPoly& f)
{
    return eval_with(f, [](const Mat2& m, Letter l) { return m.times_generic(l); });
}

bool is_weak_identity(const NcPoly& f) { return eval_generic(f).is_zero(); }

namespace {

std::optional<Witness> find_witness(const Mat2& value, std::span<const Letter> vars)
{
    const std::size_t k = vars.size();
    std::vector<Rational> point(kSlots, Rational(0));
    auto try_point = [&]() -> std::optional<Witness> {
        std::array<Rational, 4> r;
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
            r[i] = value.e[i].evaluate(point);
            nonzero = nonzero || sgn(r[i]) != 0;
        }
        if (!nonzero)
            return std::nullopt;
        Witness w;
        for (Letter v : vars)
            w.values[v] = {point[slot_index(v, Slot::A)], point[slot_index(v, Slot::B)],
                           point[slot_index(v, Slot::C)]};
        w.result = r;
        return w;
    };

    // Basis substitutions E11, E12 + E21, E22 first.
    if (k <= kMaxVars) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < k; ++i)
            total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::fill(point.begin(), point.end(), Rational(0));
            std::size_t c = code;
            for (std::size_t i = 0; i < k; ++i) {
                point[slot_index(vars[i], static_cast<Slot>(c % 3))] = 1;
                c /= 3;
            }
            if (auto w = try_point())
                return w;
        }
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::fill(point.begin(), point.end(), Rational(0));
        for (Letter v : vars)
            for (Slot s : {Slot::A, Slot::B, Slot::C})
                point[slot_index(v, s)] = dist(rng);
        if (auto w = try_point())
            return w;
    }
    return std::nullopt;
}

} // namespace

IdentityCheck check_weak_identity(const NcPoly& f)
{
    IdentityCheck out;
    out.value = eval_generic(f);
    out.holds = out.value.is_zero();
    if (!out.holds)
        out.witness = find_witness(out.value, f.variables());
    return out;
}

// ---------------------------------------------------------------------------
// Coordinates

CoordIndex::CoordIndex(std::vector<Coord> coords)
{
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    coords_ = std::move(coords);
}

CoordIndex CoordIndex::of(std::span<const Mat2> values)
{
    std::vector<Coord> coords;
    for (const auto& m : values)
        for (std::uint8_t i = 0; i < 4; ++i)
            for (const auto& [mono, c] : m.e[i].terms())
                coords.push_back({i, mono});
    return CoordIndex(std::move(coords));
}

std::optional<Column> CoordIndex::find(const Coord& c) const
{
    auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
    if (it == coords_.end() || *it != c)
        return std::nullopt;
    return static_cast<Column>(it - coords_.begin());
}

SparseVec CoordIndex::to_sparse(const Mat2& m) const
{
    std::vector<Entry> e;
    for (std::uint8_t i = 0; i < 4; ++i)
        for (const auto& [mono, c] : m.e[i].terms()) {
            auto col = find({i, mono});
            if (!col)
                throw std::out_of_range("coordinate outside the universe");
            e.push_back({*col, c});
        }
    // (entry, monomial) iteration order matches the universe order.
    return SparseVec::from_sorted(std::move(e));
}

// ---------------------------------------------------------------------------
// Kernels

PairKernel kernel_of_pair(const WordIndex& words, const Subspace& span)
{
    if (span.ambient() != words.size())
        throw std::invalid_argument("kernel_of_pair: subspace does not live over the word universe");

    // Evaluate every universe word once; chunks by first letter share prefixes.
    const auto all = words.words();
    std::vector<std::size_t> starts{0};
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].degree() != all[i - 1].degree() || all[i].is_unit() ||
            all[i].letters.front() != all[i - 1].letters.front())
            starts.push_back(i);
    starts.push_back(all.size());
    std::vector<Mat2> values(all.size());
    parallel_for(starts.size() - 1, [&](std::size_t chunk) {
        auto step = [](const Mat2& m, Letter l) { return m.times_generic(l); };
        PrefixEvaluator<decltype(step)> ev(step);
        for (std::size_t i = starts[chunk]; i < starts[chunk + 1]; ++i)
            values[i] = ev(all[i]);
    });

    const CoordIndex coords = CoordIndex::of(values);
    std::vector<SparseVec> word_coords(values.size());
    parallel_for(values.size(), [&](std::size_t i) { word_coords[i] = coords.to_sparse(values[i]); });
    values.clear();

    // A has one column per basis row of `span` and one row per coordinate.
    const std::size_t d = span.dim();
    bool unit_rows = true;
    for (const auto& r : span.rows())
        unit_rows = unit_rows && r.nnz() == 1;

    std::vector<std::vector<Entry>> a_rows(coords.size());
    for (std::size_t i = 0; i < d; ++i) {
        const auto& r = span.rows()[i];
        const Column col = static_cast<Column>(i);
        if (r.nnz() == 1) {
            for (const auto& e : word_coords[r.entries()[0].col].entries())
                a_rows[e.col].push_back({col, e.value * r.entries()[0].value});
            continue;
        }
        std::vector<Entry> img;
        for (const auto& we : r.entries())
            for (const auto& e : word_coords[we.col].entries())
                img.push_back({e.col, e.value * we.value});
        const SparseVec image = SparseVec::from_entries(std::move(img));
        for (const auto& e : image.entries())
            a_rows[e.col].push_back({col, e.value});
    }
    std::vector<SparseVec> a;
    a.reserve(a_rows.size());
    for (auto& r : a_rows)
        a.push_back(SparseVec::from_sorted(std::move(r)));
    const Subspace rel = exactla::kernel_basis(a, d);

    PairKernel out;
    out.words = words;
    out.span = span;
    if (unit_rows) {
        // Basis rows are e_{w_i} with w_i increasing: relabel columns.
        std::vector<SparseVec> ker;
        for (const auto& r : rel.rows()) {
            std::vector<Entry> e;
            for (const auto& x : r.entries())
                e.push_back({span.rows()[x.col].entries()[0].col, x.value / span.rows()[x.col].entries()[0].value});
            ker.push_back(SparseVec::from_sorted(std::move(e)).normalized());
        }
        out.kernel = Subspace::from_rref(std::move(ker), words.size());
    } else {
        std::vector<SparseVec> ker;
        for (const auto& r : rel.rows()) {
            std::vector<Entry> acc;
            for (const auto& x : r.entries())
                for (const auto& e : span.rows()[x.col].entries())
                    acc.push_back({e.col, e.value * x.value});
            ker.push_back(SparseVec::from_entries(std::move(acc)));
        }
        out.kernel = exactla::echelonize(ker, words.size());
    }
    return out;
}

PairKernel kernel_of_pair(std::span<const NcPoly> family)
{
    int degree = -2;
    for (const auto& f : family) {
        if (f.is_zero())
            continue;
        const int d = f.homogeneous_degree();
        if (d < 0 || (degree != -2 && d != degree))
            throw std::invalid_argument("kernel_of_pair: family mixes degrees");
        degree = d;
    }
    WordIndex words = WordIndex::of(family);
    std::vector<SparseVec> vecs;
    vecs.reserve(family.size());
    for (const auto& f : family)
        vecs.push_back(words.to_sparse(f));
    const Subspace span = exactla::echelonize(vecs, words.size());
    return kernel_of_pair(words, span);
}

std::size_t image_rank(std::span<const NcPoly> family) { return kernel_of_pair(family).image_rank(); }

} // namespace weakid::matrep
