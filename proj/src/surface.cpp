#include "walls/surface.hpp"

#include "walls/errors.hpp"

namespace walls {

namespace {

Rat det(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Rat out = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Rat term = m[0][j] * det(minor);
        out += (j % 2 == 0) ? term : -term;
    }
    return out;
}

void check_signature(const std::vector<std::vector<Int>>& gram, int rho) {
    if (rho > 3) return;  // trusted input above rank 3
    std::vector<std::vector<Rat>> m(rho, std::vector<Rat>(rho));
    for (int i = 0; i < rho; ++i)
        for (int j = 0; j < rho; ++j) m[i][j] = Rat(gram[i][j]);
    Rat d = det(m);
    bool ok = false;
    switch (rho) {
        case 1: ok = d > 0; break;
        case 2: ok = d < 0; break;
        case 3: {
            // signature (1,2) has positive determinant but is not definite
            bool pd = m[0][0] > 0 && (m[0][0] * m[1][1] - m[0][1] * m[1][0]) > 0 && d > 0;
            ok = d > 0 && !pd;
            break;
        }
    }
    if (!ok) throw InvalidCharacterError("intersection form does not have signature (1, rho-1)");
}

}  // namespace

Rat SurfaceGeom::pair(const LatticeVec& u, const LatticeVec& v) const {
    if (u.size() != gram.size() || v.size() != gram.size())
        throw InvalidCharacterError("lattice vector has wrong dimension");
    Rat out = 0;
    for (size_t i = 0; i < gram.size(); ++i)
        for (size_t j = 0; j < gram.size(); ++j) out += u[i] * Rat(gram[i][j]) * v[j];
    return out;
}

SurfaceGeom SurfaceGeom::make(int picard_rank, std::vector<std::vector<Int>> gram, LatticeVec omega,
                              LatticeVec gamma, Rat gtilde) {
    if (picard_rank < 1) throw InvalidCharacterError("picard rank must be positive");
    size_t rho = static_cast<size_t>(picard_rank);
    if (gram.size() != rho) throw InvalidCharacterError("gram matrix size does not match rank");
    for (auto& row : gram)
        if (row.size() != rho) throw InvalidCharacterError("gram matrix is not square");
    for (size_t i = 0; i < rho; ++i)
        for (size_t j = 0; j < rho; ++j)
            if (gram[i][j] != gram[j][i]) throw InvalidCharacterError("gram matrix is not symmetric");
    check_signature(gram, picard_rank);

    SurfaceGeom s;
    s.picard_rank = picard_rank;
    s.gram = std::move(gram);
    if (omega.size() != rho) throw InvalidCharacterError("omega has wrong dimension");
    if (gamma.empty()) gamma.assign(rho, Rat(0));
    if (gamma.size() != rho) throw InvalidCharacterError("gamma has wrong dimension");
    s.omega = std::move(omega);
    s.gamma = std::move(gamma);

    s.g = s.pair(s.omega, s.omega);
    if (s.g <= 0) throw InvalidCharacterError("omega.omega must be positive");
    if (s.pair(s.gamma, s.omega) != 0) throw InvalidCharacterError("gamma must be orthogonal to omega");
    s.d = -s.pair(s.gamma, s.gamma);
    if (s.d < 0) throw InvalidCharacterError("gamma^2 must be non-positive (Hodge index)");
    bool gamma_zero = true;
    for (const auto& c : s.gamma) gamma_zero = gamma_zero && c == 0;
    if ((s.d == 0) != gamma_zero)
        throw InvalidCharacterError("d = 0 must coincide with gamma = 0");
    if (picard_rank == 1 && !gamma_zero)
        throw InvalidCharacterError("gamma is forced to zero when the Picard rank is 1");

    if (gtilde <= 0) throw InvalidCharacterError("gtilde must be positive");
    s.gtilde = gtilde;
    s.gprime = s.g / gtilde;
    if (!is_integer(s.gprime) || s.gprime <= 0)
        throw InvalidCharacterError("g/gtilde must be a positive integer");
    return s;
}

Rat CharVector::c1_sq(const SurfaceGeom& s) const {
    return s.g * y1 * y1 - s.d * y2 * y2 + alpha_sq;
}

void validate_character(const SurfaceGeom& s, const CharVector& v, bool strict) {
    if (v.alpha_sq > 0)
        throw InvalidCharacterError("alpha^2 must be non-positive (Hodge index)");
    if (!is_integer(v.y1 * s.gprime))
        throw InvalidCharacterError("y1*g' must be an integer (c1.omega not a multiple of gtilde)");
    if (strict) {
        if (!is_integer(v.z - v.c1_sq(s) / 2))
            throw InvalidCharacterError("ch2 - c1^2/2 must be an integer");
    } else {
        if (!is_integer(2 * v.z))
            throw InvalidCharacterError("ch2 must lie in (1/2)Z");
    }
    if (!(v.x > 0 || (v.x == 0 && v.y1 > 0)))
        throw InvalidCharacterError("character must have x > 0, or x = 0 with y1 > 0");
}

CharVector char_from_lattice(const SurfaceGeom& s, Int rank, const LatticeVec& c1, const Rat& ch2,
                             bool strict) {
    CharVector v;
    v.x = std::move(rank);
    v.y1 = s.pair(c1, s.omega) / s.g;
    if (s.d > 0) {
        v.y2 = -s.pair(c1, s.gamma) / s.d;
    } else {
        if (s.pair(c1, s.gamma) != 0)
            throw InvalidCharacterError("c1.gamma must vanish when gamma = 0");
        v.y2 = 0;
    }
    v.alpha_sq = s.pair(c1, c1) - s.g * v.y1 * v.y1 + s.d * v.y2 * v.y2;
    v.z = ch2;
    v.c1_lattice = c1;
    validate_character(s, v, strict);
    return v;
}

CharVector char_from_components(const SurfaceGeom& s, Int rank, const Rat& y1, const Rat& y2,
                                const Rat& alpha_sq, const Rat& ch2, bool strict) {
    CharVector v;
    v.x = std::move(rank);
    v.y1 = y1;
    v.y2 = y2;
    v.alpha_sq = alpha_sq;
    v.z = ch2;
    validate_character(s, v, strict);
    return v;
}

BogomolovResult bogomolov(const SurfaceGeom& s, const CharVector& v) {
    Rat slack = v.c1_sq(s) - 2 * Rat(v.x) * v.z;
    return {slack >= 0, slack};
}

CharVector twist_by_omega(const SurfaceGeom& s, const CharVector& v, const Int& n) {
    CharVector t = v;
    Rat nn(n);
    t.y1 = v.y1 + nn * Rat(v.x);
    t.z = v.z + nn * s.g * v.y1 + nn * nn * s.g * Rat(v.x) / 2;
    if (v.c1_lattice) {
        LatticeVec c1 = *v.c1_lattice;
        for (size_t i = 0; i < c1.size(); ++i) c1[i] += nn * Rat(v.x) * s.omega[i];
        t.c1_lattice = std::move(c1);
    }
    return t;
}

BetaDecomposition decompose_beta(const SurfaceGeom& s, const LatticeVec& beta) {
    Rat b = s.pair(beta, s.omega) / s.g;
    LatticeVec gamma(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) gamma[i] = beta[i] - b * s.omega[i];
    return {b, std::move(gamma)};
}

}  // namespace walls
