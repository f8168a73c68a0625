#pragma once

#include "walls/rational.hpp"

#include <optional>
#include <vector>

namespace walls {

using LatticeVec = std::vector<Rat>;

// Numerical data of a polarized surface: the intersection lattice, the ample
// class omega, a class gamma orthogonal to omega, and the derived constants
//   g = omega^2,  d = -gamma^2,  g' = g / gtilde.
// gtilde is the gcd of c1(E).omega over sheaves, supplied by the user.
struct SurfaceGeom {
    int picard_rank = 1;
    std::vector<std::vector<Int>> gram;
    LatticeVec omega;
    LatticeVec gamma;
    Rat gtilde = 1;

    // derived
    Rat g;       // omega.omega > 0
    Rat d;       // -gamma.gamma >= 0
    Rat gprime;  // g / gtilde, a positive integer

    // Validates and fills the derived constants. Throws InvalidCharacterError
    // on a malformed surface (bad signature, gamma not orthogonal, ...).
    static SurfaceGeom make(int picard_rank, std::vector<std::vector<Int>> gram, LatticeVec omega,
                            LatticeVec gamma, Rat gtilde);

    // Intersection pairing on NS tensor Q.
    Rat pair(const LatticeVec& u, const LatticeVec& v) const;

    bool has_gamma() const { return d != 0; }
};

// Chern character in (x, y1, y2, alpha^2, z) coordinates:
//   rank x, c1 = y1*omega + y2*gamma + alpha with alpha orthogonal to both,
//   z = ch2. Only alpha^2 (<= 0) ever enters a formula.
struct CharVector {
    Int x;
    Rat y1;
    Rat y2;
    Rat alpha_sq;
    Rat z;
    std::optional<LatticeVec> c1_lattice;

    // c1^2 = g y1^2 - d y2^2 + alpha^2
    Rat c1_sq(const SurfaceGeom& s) const;
};

struct SliceParams {
    Rat u = 0;
};

// Decompose a lattice class and build the character; checks all integrality
// and validity invariants (throws InvalidCharacterError).
// strict = false relaxes ch2 integrality from z - c1^2/2 in Z to z in (1/2)Z.
CharVector char_from_lattice(const SurfaceGeom& s, Int rank, const LatticeVec& c1, const Rat& ch2,
                             bool strict = true);

// Direct (y1, y2, alpha_sq) input for surfaces where only the invariants are
// known (Picard rank > 2).
CharVector char_from_components(const SurfaceGeom& s, Int rank, const Rat& y1, const Rat& y2,
                                const Rat& alpha_sq, const Rat& ch2, bool strict = true);

// Invariant checks shared by the constructors; usable on its own.
void validate_character(const SurfaceGeom& s, const CharVector& v, bool strict = true);

struct BogomolovResult {
    bool holds;
    Rat slack;  // discriminant c1^2 - 2 x z
};

BogomolovResult bogomolov(const SurfaceGeom& s, const CharVector& v);

// v * exp(n*omega): walls shift n units to the right.
CharVector twist_by_omega(const SurfaceGeom& s, const CharVector& v, const Int& n);

// beta = b*omega + gamma(beta) with gamma(beta) orthogonal to omega.
struct BetaDecomposition {
    Rat b;
    LatticeVec gamma;
};
BetaDecomposition decompose_beta(const SurfaceGeom& s, const LatticeVec& beta);

}  // namespace walls
