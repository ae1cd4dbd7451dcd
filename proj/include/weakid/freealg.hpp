#pragma once

// The free associative algebra K<x1, x2, ...> over Q.

#include "weakid/exactla.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace weakid::freealg {

using exactla::Rational;

/// Variable index, 1-based. In two-variable work x = 1, y = 2.
using Letter = std::uint8_t;

inline constexpr Letter kX = 1;
inline constexpr Letter kY = 2;

struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> l) : letters(l) {}
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

    std::size_t degree() const noexcept { return letters.size(); }
    bool is_unit() const noexcept { return letters.empty(); }
    Word reversed() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    /// Degree-lexicographic order.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

using MultiDegree = std::map<Letter, unsigned>;

MultiDegree multidegree(const Word& w);

/// Noncommutative polynomial: finite map Word -> nonzero Rational, kept in
/// deg-lex order.
class NcPoly {
public:
    using Terms = std::map<Word, Rational>;

    NcPoly() = default;
    NcPoly(const Word& w, Rational c = 1);

    static NcPoly var(Letter i);
    static NcPoly unit() { return NcPoly(Word{}); }
    static NcPoly constant(const Rational& c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coeff(const Word& w) const;

    /// Adds c*w in place.
    void add_term(const Word& w, const Rational& c);

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const Rational& s);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
    friend NcPoly operator*(NcPoly a, const Rational& s) { return a *= s; }
    friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend bool operator==(const NcPoly&, const NcPoly&) = default;

    /// Largest variable index occurring, 0 for constants.
    Letter max_variable() const;
    std::vector<Letter> variables() const;
    /// Returns the common total degree, or -1 when terms differ in degree.
    int homogeneous_degree() const;
    /// true iff every term has the same multidegree; sets `md` to it.
    bool is_multihomogeneous(MultiDegree* md = nullptr) const;
    /// true iff every variable in {1..n} occurs exactly once in every word.
    bool is_multilinear_in(unsigned n) const;

    std::string render() const;

private:
    Terms terms_;
};

NcPoly comm(const NcPoly& f, const NcPoly& g);
/// [a1, ..., ak] = [[a1, ..., a(k-1)], ak]. Throws for fewer than two
/// arguments.
NcPoly left_normed(std::span<const NcPoly> args);
NcPoly left_normed(std::initializer_list<NcPoly> args);
NcPoly circ(const NcPoly& f, const NcPoly& g);
NcPoly involution(const NcPoly& f);
NcPoly power(const NcPoly& f, unsigned e);

/// Sum over sigma in Sym(k) of sgn(sigma) a_sigma(1) ... a_sigma(k).
NcPoly standard(std::span<const NcPoly> args);
/// S_k(x1, ..., xk). Throws for k = 0.
NcPoly standard_poly(unsigned k);
/// [[x1, x2], [x3, x4]]
NcPoly metabelian_poly();

/// Replaces x_i by values[i - 1]. Throws when a variable has no value.
NcPoly substitute(const NcPoly& f, std::span<const NcPoly> values);
/// Renames x_i to x_{map[i - 1]}.
NcPoly relabel(const NcPoly& f, std::span<const Letter> map);

/// Full multilinearization: a variable of degree d is replaced by d fresh
/// variables with all d! assignments to its occurrences. Fresh variables are
/// numbered consecutively in order of the original index. Throws unless f is
/// multihomogeneous.
NcPoly multilinearize(const NcPoly& f);

// ---------------------------------------------------------------------------
// Column universes

/// Dictionary Word <-> column, in deg-lex order.
class WordIndex {
public:
    WordIndex() = default;
    explicit WordIndex(std::vector<Word> words);
    /// All words occurring in the given polynomials.
    static WordIndex of(std::span<const NcPoly> polys);

    std::size_t size() const noexcept { return words_.size(); }
    const Word& word(exactla::Column c) const { return words_.at(c); }
    std::span<const Word> words() const noexcept { return words_; }
    std::optional<exactla::Column> find(const Word& w) const;
    exactla::Column at(const Word& w) const;

    exactla::SparseVec to_sparse(const NcPoly& f) const;
    NcPoly to_poly(const exactla::SparseVec& v) const;

private:
    std::vector<Word> words_;
    std::unordered_map<Word, exactla::Column, WordHash> index_;
};

/// The n! multilinear words in x1..xn, deg-lex sorted.
std::vector<Word> p_basis(unsigned n);
/// Universe over p_basis(n). Cached per n.
const WordIndex& p_index(unsigned n);

/// Products of left-normed commutators over set partitions of {1..n} into
/// blocks of size >= 2; every ordering inside a block, factors ordered by
/// their smallest variable.
std::vector<NcPoly> gamma_family(unsigned n);
/// RREF of gamma_family(n) over p_index(n).
exactla::Subspace gamma_span(unsigned n);

/// [y, x] (ad x)^k (ad y)^l = [y, x, x, ..., x, y, ..., y]
NcPoly b2_factor(unsigned k, unsigned l);
/// Ordered products of b2_factor with x-degree dx and y-degree dy. Throws
/// when dx + dy < 2.
std::vector<NcPoly> b2_span(unsigned dx, unsigned dy);

} // namespace weakid::freealg
