#include "ntoric/lattice.hpp"

#include "ntoric/linalg.hpp"

namespace ntoric {

CfData hj_expand(const Int& alpha, const Int& beta)
{
    if (alpha <= 0 || beta < 0 || beta >= alpha)
        throw input_error("hj_expand: need 0 <= beta < alpha");
    Int g;
    mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    if (alpha > 1 && g != 1)
        throw input_error("hj_expand: alpha, beta not coprime");
    CfData cf{alpha, beta, {}};
    Int a = alpha, b = beta;
    while (b > 0) {
        Int q;
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        cf.terms.push_back(q);
        Int nb = q * b - a;
        a = b;
        b = nb;
    }
    return cf;
}

std::pair<Int, Int> hj_eval(const std::vector<Int>& terms)
{
    Int num = 1, den = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Int nn = *it * num - den;
        den = num;
        num = nn;
    }
    return {num, den};
}

Int alpha_det(const Vec& l1, const Vec& l2)
{
    if (l1.size() != l2.size())
        throw input_error("alpha: rank mismatch");
    size_t n = l1.size();
    Int g = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Int m = l1[i] * l2[j] - l1[j] * l2[i];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    if (g == 0)
        throw input_error("vectors not independent");
    return g;
}

SublatticeFrame sublattice_frame(const Vec& l1, const Vec& l2)
{
    size_t n = l1.size();
    if (n == 2) {
        SublatticeFrame f;
        f.basis = {Vec{1, 0}, Vec{0, 1}};
        return f;
    }
    // The saturated sublattice is the integer kernel of the forms vanishing
    // on span(l1,l2); those forms are in turn the kernel of [l1;l2].
    std::vector<Vec> forms = kernel_basis(Mat{l1, l2});
    if (forms.size() != n - 2)
        throw input_error("vectors not independent");
    std::vector<Vec> basis = kernel_basis(Mat(forms.begin(), forms.end()));
    if (basis.size() != 2)
        throw internal_error("sublattice basis computation failed");
    SublatticeFrame f;
    f.basis = basis;
    return f;
}

Vec SublatticeFrame::to_plane(const Vec& v) const
{
    // solve x*b0 + y*b1 = v over Z (consistent by saturation)
    size_t n = basis[0].size();
    Mat a(n, Vec(2));
    for (size_t i = 0; i < n; ++i) {
        a[i][0] = basis[0][i];
        a[i][1] = basis[1][i];
    }
    auto sol = solve_integral(a, v);
    if (!sol)
        throw internal_error("vector not in sublattice");
    return *sol;
}

Vec SublatticeFrame::from_plane(const Vec& xy) const
{
    return add(smul(xy[0], basis[0]), smul(xy[1], basis[1]));
}

namespace {

Int det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// beta for a primitive independent pair given in rank-2 coordinates:
// the unique 0 <= beta < alpha with beta*l + l' in alpha*N.
Int beta2(const Vec& l, const Vec& lp, const Int& alpha)
{
    if (alpha == 1)
        return 0;
    // pick x,y with x*l0 + y*l1 = 1 (l primitive), then
    // beta = -(x*lp0 + y*lp1) mod alpha, verified on both coordinates.
    Int x, y, g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), l[0].get_mpz_t(), l[1].get_mpz_t());
    if (g != 1)
        throw input_error("beta: first vector not primitive");
    Int beta = (-(x * lp[0] + y * lp[1])) % alpha;
    if (beta < 0)
        beta += alpha;
    if ((beta * l[0] + lp[0]) % alpha != 0 || (beta * l[1] + lp[1]) % alpha != 0)
        throw internal_error("beta congruence failed");
    return beta;
}

PrimitiveSequence sequence2(const Vec& l, const Vec& lp)
{
    Int d = det2(l, lp);
    if (d == 0)
        throw input_error("vectors not independent");
    Int alpha = abs(d);
    PrimitiveSequence seq;
    seq.alpha = alpha;
    if (alpha == 1) {
        seq.beta = 0;
        seq.vectors = {l, add(l, lp), lp};
        seq.selfints = {Int(1)};
        return seq;
    }
    Int beta = beta2(l, lp, alpha);
    seq.beta = beta;
    CfData cf = hj_expand(alpha, beta);
    Vec prev = l;
    Vec cur(2);
    cur[0] = (beta * l[0] + lp[0]) / alpha;
    cur[1] = (beta * l[1] + lp[1]) / alpha;
    seq.vectors.push_back(l);
    seq.vectors.push_back(cur);
    for (size_t i = 0; i + 1 < cf.terms.size(); ++i) {
        Vec nxt = sub(smul(cf.terms[i], cur), prev);
        seq.vectors.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    // the recursion must close up on l'
    Vec last = sub(smul(cf.terms.back(), cur), prev);
    if (last != lp)
        throw internal_error("primitive sequence does not end at second argument");
    seq.vectors.push_back(lp);
    seq.selfints = cf.terms;
    return seq;
}

} // namespace

Int beta_det(const Vec& l1, const Vec& l2)
{
    Int alpha = alpha_det(l1, l2);
    if (alpha == 1)
        return 0;
    SublatticeFrame f = sublattice_frame(l1, l2);
    Vec a = f.to_plane(l1), b = f.to_plane(l2);
    return beta2(a, b, alpha);
}

PrimitiveSequence canonical_primitive_sequence(const Vec& l, const Vec& lp)
{
    if (content(l) != 1 || content(lp) != 1)
        throw input_error("canonical_primitive_sequence: inputs must be primitive");
    SublatticeFrame f = sublattice_frame(l, lp);
    Vec a = f.to_plane(l), b = f.to_plane(lp);
    PrimitiveSequence plane = sequence2(a, b);
    if (l.size() == 2)
        return plane;
    PrimitiveSequence seq;
    seq.alpha = plane.alpha;
    seq.beta = plane.beta;
    seq.selfints = plane.selfints;
    for (const Vec& v : plane.vectors)
        seq.vectors.push_back(f.from_plane(v));
    return seq;
}

} // namespace ntoric
