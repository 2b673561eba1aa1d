#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ntoric {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy; the C API and the CLI map these onto exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : error {
    using error::error;
};
// A documented hypothesis of an operation does not hold for this input.
struct hypothesis_error : error {
    using error::error;
};
// An enumeration cap was exhausted before stabilization.
struct cap_error : error {
    using error::error;
};
struct internal_error : error {
    using error::error;
};

// Integer vectors. Lattice vectors live in N, dual vectors (exponents) in M;
// both are plain coordinate vectors under the canonical pairing.
using Vec = std::vector<Int>;
using LatticeVec = Vec;
using DualVec = Vec;

inline Int dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw internal_error("dot: rank mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline Vec smul(const Int& c, const Vec& a)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

inline Vec neg(const Vec& a) { return smul(-1, a); }

inline bool is_zero(const Vec& a)
{
    for (const Int& x : a)
        if (x != 0)
            return false;
    return true;
}

inline Int content(const Vec& a)
{
    Int g = 0;
    for (const Int& x : a)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// (gcd of entries, v/gcd); the zero vector has no content.
inline std::pair<Int, Vec> content_primitive(const Vec& v)
{
    Int g = content(v);
    if (g == 0)
        throw input_error("zero vector has no content");
    Vec p(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        p[i] = v[i] / g;
    return {g, p};
}

inline Vec primitive(const Vec& v) { return content_primitive(v).second; }

inline bool lex_less(const Vec& a, const Vec& b)
{
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline Vec cross(const Vec& a, const Vec& b)
{
    if (a.size() != 3 || b.size() != 3)
        throw internal_error("cross: rank 3 only");
    return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline std::string to_string(const Vec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

// Rational helpers. mpq_class is kept canonical by construction.
inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw internal_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline std::string rat_str(const Rat& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

using QVec = std::vector<Rat>;

inline Rat qdot(const QVec& a, const Vec& b)
{
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * Rat(b[i]);
    return s;
}

} // namespace ntoric
