#include "walls/surd.hpp"

#include "walls/errors.hpp"

namespace walls {

namespace {

// Extract square factors of n by trial division up to a fixed bound.
// Correctness of comparisons does not depend on finding all of them.
constexpr unsigned kTrialBound = 1000;

Int extract_squares(Int& n) {
    Int out = 1;
    for (unsigned f = 2; f <= kTrialBound; ++f) {
        Int f2 = Int(f) * f;
        if (f2 > n) break;
        while (n % f2 == 0) {
            n /= f2;
            out *= f;
        }
    }
    return out;
}

}  // namespace

Surd::Surd(Rat a_, Rat b_, Rat c_) : a(std::move(a_)), b(std::move(b_)), c(0) {
    if (c_ < 0) throw Error("Surd radicand must be non-negative");
    if (b == 0 || c_ == 0) {
        b = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q
    Int n = num(c_) * den(c_);
    b /= Rat(den(c_));
    Int root = extract_squares(n);
    b *= Rat(root);
    Int s = isqrt(n);
    if (s * s == n) {  // folds to a rational
        a += b * Rat(s);
        b = 0;
        return;
    }
    c = n;
}

Rat Surd::rational_value() const {
    if (!is_rational()) throw Error("Surd is not rational");
    return a;
}

bool Surd::operator==(const Surd& o) const { return cmp_surd(*this, o) == 0; }

Surd surd_sqrt(const Rat& q) { return Surd(Rat(0), Rat(1), q); }

namespace {

// Sign of a + b*sqrt(c) for a normalized Surd (c a non-square integer >= 2
// whenever b != 0).
int sign_normalized(const Rat& a, const Rat& b, const Int& c) {
    if (b == 0) return sign(a);
    if (a == 0) return sign(b);
    int sa = sign(a), sb = sign(b);
    if (sa == sb) return sa;
    // opposite signs: compare |a| with |b|sqrt(c) by squaring
    int s = sign(a * a - b * b * Rat(c));
    return sa > 0 ? s : -s;
}

// Sign of A + B*sqrt(c1) - Bp*sqrt(c2), all pieces normalized.
int mixed_sign(const Rat& A, const Rat& B, const Int& c1, const Rat& Bp, const Int& c2) {
    if (B == 0) return sign_normalized(A, -Bp, c2);
    if (Bp == 0) return sign_normalized(A, B, c1);
    if (c1 == c2) return sign_normalized(A, B - Bp, c1);
    int sl = sign_normalized(A, B, c1);  // left side A + B*sqrt(c1)
    int sr = sign(Bp);                   // right side Bp*sqrt(c2), c2 >= 2
    if (sl != sr) return sl > sr ? 1 : -1;
    if (sl == 0) return 0;
    // both sides share sign sl; compare squares:
    //   (A + B sqrt(c1))^2 = A^2 + B^2 c1 + 2AB sqrt(c1)   vs   Bp^2 c2
    int t = sign_normalized(A * A + B * B * Rat(c1) - Bp * Bp * Rat(c2), 2 * A * B, c1);
    return sl > 0 ? t : -t;
}

}  // namespace

int sign(const Surd& s) { return sign_normalized(s.a, s.b, s.c); }

int cmp_surd(const Surd& lhs, const Surd& rhs) {
    return mixed_sign(lhs.a - rhs.a, lhs.b, lhs.c, rhs.b, rhs.c);
}

std::pair<Rat, Rat> brackets(const Surd& s, unsigned digits) {
    if (s.is_rational()) return {s.a, s.a};
    auto [lo, hi] = sqrt_brackets(Rat(s.c), digits);
    if (s.b > 0) return {s.a + s.b * lo, s.a + s.b * hi};
    return {s.a + s.b * hi, s.a + s.b * lo};
}

Int floor_surd(const Surd& s) {
    if (s.is_rational()) return rat_floor(s.a);
    // c is a non-square, so the value is irrational and the enclosure
    // eventually separates it from every integer.
    for (unsigned digits = 10;; digits *= 2) {
        auto [lo, hi] = brackets(s, digits);
        Int fl = rat_floor(lo), fh = rat_floor(hi);
        if (fl == fh) return fl;
    }
}

Int ceil_surd(const Surd& s) {
    if (s.is_rational()) return rat_ceil(s.a);
    return floor_surd(s) + 1;
}

std::string decimal(const Surd& s, unsigned sig) {
    if (s.is_rational()) return decimal(s.a, sig);
    auto [lo, hi] = brackets(s, sig + 8);
    (void)hi;
    return decimal(lo, sig);
}

std::string to_string(const Surd& s) {
    if (s.is_rational()) return to_string(s.a);
    std::string out = to_string(s.a);
    if (s.b > 0) out += "+";
    out += to_string(s.b) + "*sqrt(" + to_string(s.c) + ")";
    return out;
}

}  // namespace walls
