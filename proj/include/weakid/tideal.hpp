#pragma once

// Multilinear components of the weak T-ideal generated by multilinear
// identities, membership, and the degree-by-degree comparison with the weak
// identities of (2x2 matrices, symmetric 2x2 matrices).

#include "weakid/exactla.hpp"
#include "weakid/freealg.hpp"
#include "weakid/repthy.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace weakid::tideal {

using exactla::Subspace;
using freealg::NcPoly;

struct Generator {
    std::string name;
    NcPoly poly;
    unsigned arity = 0;
};

/// Generators multilinear in x1..xk, k the declared arity.
class GeneratorSet {
public:
    /// Throws std::invalid_argument when a generator is not multilinear in
    /// x1..x(arity).
    explicit GeneratorSet(std::vector<Generator> gens);
    /// {S4, [[x1,x2],[x3,x4]]}
    static GeneratorSet standard();

    const std::vector<Generator>& generators() const noexcept { return gens_; }
    unsigned max_arity() const noexcept;
    /// f(..., 1, ...) = 0 with the unit in slot `pos`, checked symbolically.
    bool vanishes_on_unit(std::size_t gen, unsigned pos) const { return unit_zero_[gen][pos]; }

private:
    std::vector<Generator> gens_;
    std::vector<std::vector<bool>> unit_zero_;
};

/// Builds and caches the multilinear components of the weak T-ideal of a
/// generator set. Thread-safe.
class ConsequenceEngine {
public:
    explicit ConsequenceEngine(GeneratorSet gens, unsigned max_degree = 7);

    const GeneratorSet& generators() const noexcept { return gens_; }
    unsigned max_degree() const noexcept { return max_degree_; }

    /// The component in P_n, over freealg::p_index(n). Throws above
    /// max_degree().
    const Subspace& span(unsigned n);

    /// Substitutions f(u1, ..., uk) whose supports cover {1..n} exactly, with
    /// the u_j SJ basis elements or the unit; duplicates (up to scalars) and
    /// zeros removed.
    std::vector<exactla::SparseVec> core(unsigned n) const;

    /// Membership of an arbitrary polynomial: every multihomogeneous
    /// component, fully multilinearized, must lie in the matching span.
    bool is_consequence(const NcPoly& f);

private:
    Subspace build(unsigned n, const Subspace* previous) const;

    GeneratorSet gens_;
    unsigned max_degree_;
    std::mutex mutex_;
    std::map<unsigned, std::unique_ptr<Subspace>> spans_;
};

/// Shared engine over GeneratorSet::standard().
ConsequenceEngine& standard_engine();

/// One-shot forms; results are not cached across calls.
Subspace consequences_span(const GeneratorSet& g, unsigned n);
bool is_consequence(const NcPoly& f, const GeneratorSet& g);

enum class Space { FullP, Proper };

struct DegreeReport {
    unsigned degree = 0;
    Space space = Space::FullP;
    std::size_t dim_P = 0; // dim of the ambient space (P_n, or Gamma_n for Space::Proper)
    std::size_t dim_kernel = 0;
    std::size_t dim_consequences = 0;
    bool containment = false;
    bool equal = false;

    std::size_t dim_gamma = 0;
    std::size_t dim_gamma_kernel = 0;
    /// Gamma_n / (Gamma_n cap weak identities)
    repthy::Decomposition decomposition;
    std::map<std::string, double> timings_ms;

    bool passed() const noexcept { return containment && equal; }
};

struct VerifyOptions {
    Space space = Space::FullP;
    bool decompose = true;
};

/// Compares the weak identities of degree n with the consequences of
/// {S4, metabelian}. Requires 4 <= n <= 7.
DegreeReport verify_theorem(unsigned n, const VerifyOptions& opts = {});
DegreeReport verify_theorem(unsigned n, ConsequenceEngine& engine, const VerifyOptions& opts = {});

} // namespace weakid::tideal
