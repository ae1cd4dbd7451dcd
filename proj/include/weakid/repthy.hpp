#pragma once

// Characters of Sym(n), S_n-module decompositions of subspaces of P_n and
// GL_2 multiplicities from bigraded dimensions.

#include "weakid/exactla.hpp"
#include "weakid/freealg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace weakid::repthy {

using exactla::Rational;
using exactla::Subspace;

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Sorts and drops zero parts.
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    std::span<const unsigned> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned size() const noexcept;
    unsigned operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// "(3,1)", "(2^2)", "(2,1^2)"
    std::string render() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(unsigned n);

/// chi^lambda at the class of cycle type rho (Murnaghan-Nakayama). Throws
/// when the sizes differ.
long long mn_character(const Partition& lambda, const Partition& rho);

/// Hook-length formula.
std::uint64_t dim_M(const Partition& lambda);
/// dim of the irreducible GL_2-module N_2(l1, l2), i.e. l1 - l2 + 1. Throws
/// unless l1 >= l2.
unsigned dim_N2(unsigned l1, unsigned l2);
/// Throws for more than two parts.
unsigned dim_N2(const Partition& lambda);

/// n! / z_rho
std::uint64_t class_size(const Partition& rho);
/// A permutation of cycle type rho, as images sigma(1..n) (1-based).
std::vector<freealg::Letter> class_representative(const Partition& rho);

/// Multiplicities, keyed so that iteration runs (n), (n-1,1), ...
struct Decomposition {
    std::map<Partition, unsigned, std::greater<>> mult;

    std::size_t sn_dimension() const;
    /// "M(3,1) + 2M(2^2)", or "0".
    std::string render(const std::string& module = "M") const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Multiplicities from a class function given on partitions(n). Throws when
/// a multiplicity is not a nonnegative integer.
Decomposition decompose_character(std::span<const Rational> chi, unsigned n);

/// (sigma f)(x1, ..., xn) = f(x_sigma(1), ..., x_sigma(n)) on coordinates
/// over p_index(n).
exactla::SparseVec act(std::span<const freealg::Letter> sigma, const exactla::SparseVec& v, unsigned n);

/// Invariance under (1 2) and (1 2 ... n).
bool is_stable(const Subspace& s, unsigned n);

/// Character of an S_n-stable subspace of P_n, on partitions(n). Throws when
/// s is not stable.
std::vector<Rational> character_of(const Subspace& s, unsigned n);

Decomposition decompose(const Subspace& s, unsigned n);
/// Decomposition of ambient / sub. Throws unless sub is contained in ambient.
Decomposition decompose_quotient(const Subspace& ambient, const Subspace& sub, unsigned n);

/// GL_2 multiplicities of N_2(l1, l2) in a module whose (l1, l2)-weight
/// spaces have the given dimensions (l1 + l2 = n). Throws on a negative
/// multiplicity.
Decomposition gl2_from_weights(const std::map<std::pair<unsigned, unsigned>, std::size_t>& weights, unsigned n);

} // namespace weakid::repthy
