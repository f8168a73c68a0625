#include "walls/rational.hpp"

#include "walls/errors.hpp"

#include <cctype>

namespace walls {

Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

int sign(const Int& n) { return n.sign(); }
int sign(const Rat& q) { return q.sign(); }

bool is_integer(const Rat& q) { return den(q) == 1; }

Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int isqrt(const Int& n) {
    if (n < 0) throw Error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

bool perfect_square(const Rat& q, Rat* root) {
    if (q < 0) return false;
    Int sn = isqrt(num(q)), sd = isqrt(den(q));
    if (sn * sn != num(q) || sd * sd != den(q)) return false;
    if (root) *root = Rat(sn, sd);
    return true;
}

std::pair<Rat, Rat> sqrt_brackets(const Rat& q, unsigned digits) {
    if (q < 0) throw Error("sqrt_brackets of negative value");
    // sqrt(n/d) = sqrt(n*d)/d
    Int n = num(q), d = den(q);
    Int scale = boost::multiprecision::pow(Int(10), digits);
    Int s = isqrt(n * d * scale * scale);
    Rat lo(s, d * scale), hi(s + 1, d * scale);
    if (lo * lo > q) lo = Rat(s - 1, d * scale);  // guard against exact squares
    return {lo, hi};
}

Rat parse_rat(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    auto parse_int = [&](std::string_view v) -> Int {
        v = trim(v);
        if (v.empty()) throw ParseError("empty integer in rational literal");
        bool neg = false;
        if (v.front() == '-' || v.front() == '+') {
            neg = v.front() == '-';
            v.remove_prefix(1);
        }
        if (v.empty()) throw ParseError("sign without digits in rational literal");
        Int r = 0;
        for (char ch : v) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(std::string("bad digit in rational literal: '") + ch + "'");
            r = r * 10 + (ch - '0');
        }
        return neg ? Int(-r) : r;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in rational literal");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(p, q);
}

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

std::string decimal(const Rat& q, unsigned sig) {
    if (sig == 0) sig = 1;
    if (q == 0) return "0";
    std::string out = q < 0 ? "-" : "";
    Rat a = boost::multiprecision::abs(q);
    // exponent e with 10^e <= a < 10^(e+1)
    long long e = 0;
    if (a >= 1) {
        Int ip = rat_floor(a);
        e = static_cast<long long>(ip.str().size()) - 1;
    } else {
        Rat t = a;
        while (t < 1) {
            t *= 10;
            --e;
        }
    }
    auto pow10 = [](long long k) -> Int {
        return boost::multiprecision::pow(Int(10), static_cast<unsigned>(k));
    };
    long long shift = static_cast<long long>(sig) - 1 - e;
    Rat scaled = a;
    if (shift >= 0)
        scaled *= Rat(pow10(shift));
    else
        scaled /= Rat(pow10(-shift));
    Int m = rat_floor(scaled + Rat(1, 2));  // round half up on |q|
    std::string digits = m.str();
    if (digits.size() > sig) {  // rounding carried into a new digit
        ++e;
        digits.pop_back();
    }
    // place the decimal point; strip trailing fractional zeros
    std::string body;
    if (e >= 0) {
        if (static_cast<long long>(digits.size()) <= e) {
            body = digits + std::string(e + 1 - digits.size(), '0');
        } else {
            body = digits.substr(0, e + 1);
            std::string frac = digits.substr(e + 1);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) body += "." + frac;
        }
    } else {
        std::string frac = std::string(-e - 1, '0') + digits;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        body = "0." + (frac.empty() ? "0" : frac);
    }
    return out + body;
}

std::string sqrt_decimal(const Rat& q, unsigned sig) {
    Rat root;
    if (perfect_square(q, &root)) return decimal(root, sig);
    auto [lo, hi] = sqrt_brackets(q, sig + 6);
    return decimal(lo, sig);
}

}  // namespace walls
