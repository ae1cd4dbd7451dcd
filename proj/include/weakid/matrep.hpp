#pragma once

// Evaluation of free-algebra polynomials on 2x2 matrices over a commutative
// polynomial ring, generic symmetric substitutions and weak-identity spaces
// of the pair (2x2 matrices, symmetric 2x2 matrices).

#include "weakid/exactla.hpp"
#include "weakid/freealg.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weakid::matrep {

using exactla::Rational;
using freealg::Letter;
using freealg::NcPoly;

inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kSlots = 3 * kMaxVars;

/// Commuting indeterminates a_i, b_i, c_i of the generic symmetric matrix
/// x_i -> [[a_i, b_i], [b_i, c_i]].
enum class Slot : std::uint8_t { A = 0, B = 1, C = 2 };

constexpr unsigned slot_index(Letter var, Slot s) { return 3u * (var - 1u) + static_cast<unsigned>(s); }

struct Monomial {
    std::array<std::uint8_t, kSlots> exp{};

    unsigned degree() const noexcept;
    Monomial times(unsigned slot) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Degree first, then lexicographic on the exponent vector.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class CommPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    CommPoly() = default;
    static CommPoly constant(const Rational& c);
    static CommPoly indeterminate(Letter var, Slot s);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(const Monomial& m, const Rational& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const Rational& s);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly&, const CommPoly&) = default;

    /// this * (indeterminate at `slot`)
    CommPoly times_slot(unsigned slot) const;
    /// Value at a point given per slot.
    Rational evaluate(std::span<const Rational> point) const;

    std::string render() const;

private:
    Terms terms_;
};

/// 2x2 matrix over CommPoly; entries indexed e[2 * row + col].
struct Mat2 {
    std::array<CommPoly, 4> e;

    static Mat2 identity();
    static Mat2 scalar(const Rational& c);
    const CommPoly& at(int r, int c) const { return e[2 * r + c]; }
    CommPoly& at(int r, int c) { return e[2 * r + c]; }

    Mat2 transpose() const;
    bool is_zero() const;
    bool is_symmetric() const { return e[1] == e[2]; }
    /// this * generic symmetric matrix of `var`
    Mat2 times_generic(Letter var) const;

    Mat2& operator+=(const Mat2& o);
    Mat2& operator*=(const Rational& s);
    friend Mat2 operator*(const Mat2& a, const Mat2& b);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// [[a_i, b_i], [b_i, c_i]]
Mat2 generic_symmetric(Letter var);

using Assignment = std::map<Letter, Mat2>;

Assignment generic_assignment(std::span<const Letter> vars);

/// Unital homomorphism A -> M_2(CommPoly). Throws on an unassigned variable.
Mat2 eval(const NcPoly& f, const Assignment& a);
/// eval at the generic symmetric assignment of f's variables.
Mat2 eval_generic(const NcPoly& f);

/// Concrete symmetric matrices for which f does not vanish.
struct Witness {
    // per variable: (a, b, c) of [[a, b], [b, c]]
    std::map<Letter, std::array<Rational, 3>> values;
    std::array<Rational, 4> result;
};

struct IdentityCheck {
    bool holds = false;
    Mat2 value; // generic evaluation
    std::optional<Witness> witness;
};

bool is_weak_identity(const NcPoly& f);
IdentityCheck check_weak_identity(const NcPoly& f);

// ---------------------------------------------------------------------------
// Coordinates and kernels

struct Coord {
    std::uint8_t entry; // 0..3
    Monomial mono;

    friend bool operator==(const Coord&, const Coord&) = default;
    friend std::strong_ordering operator<=>(const Coord& a, const Coord& b)
    {
        if (auto c = a.entry <=> b.entry; c != 0)
            return c;
        return a.mono <=> b.mono;
    }
};

/// Column universe over (matrix entry, commutative monomial).
class CoordIndex {
public:
    explicit CoordIndex(std::vector<Coord> coords);
    static CoordIndex of(std::span<const Mat2> values);

    std::size_t size() const noexcept { return coords_.size(); }
    std::optional<exactla::Column> find(const Coord& c) const;
    exactla::SparseVec to_sparse(const Mat2& m) const;

private:
    std::vector<Coord> coords_;
};

/// Weak identities inside the span of a spanning family.
struct PairKernel {
    freealg::WordIndex words;
    exactla::Subspace span;   // RREF of the family over `words`
    exactla::Subspace kernel; // span intersected with the weak identities
    std::size_t image_rank() const noexcept { return span.dim() - kernel.dim(); }
};

/// Throws when the family mixes total degrees.
PairKernel kernel_of_pair(std::span<const NcPoly> family);
/// Same, for a subspace already echelonized over `words`.
PairKernel kernel_of_pair(const freealg::WordIndex& words, const exactla::Subspace& span);

/// Rank of the evaluation map on the span of the family.
std::size_t image_rank(std::span<const NcPoly> family);

} // namespace weakid::matrep
