#include "dbx/polynomial.hpp"

#include <doctest.h>

using namespace dbx;

namespace {

RatPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(v);
}

// Sylvester determinant by Gaussian elimination over Q.
Rational sylvester(const RatPoly& f, const RatPoly& g) {
    int m = f.degree(), n = g.degree(), N = m + n;
    std::vector<std::vector<Rational>> a(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
    Rational det = 1;
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int r = c; r < N; ++r)
            if (sgn(a[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < N; ++r) {
            Rational k = a[r][c] / a[c][c];
            for (int j = c; j < N; ++j) a[r][j] -= k * a[c][j];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::vector<RatPoly> ps = {P({1, 0, 1}), P({-2, 0, 0, 1}), P({3, -1, 4, 1, -5}), P({0, 2, 7}),
                               P({-1, 1}),   P({5, 3, 0, 0, 2, 1}), P({1, 1, 1, 1})};
    for (const auto& f : ps)
        for (const auto& g : ps) {
            if (f.degree() < 1 || g.degree() < 1) continue;
            CHECK(resultant(f, g) == sylvester(f, g));
        }
}

TEST_CASE("gcd and squarefree part") {
    RatPoly a = P({-1, 1}) * P({-2, 1}), b = P({-1, 1}) * P({3, 1});
    CHECK(gcd(a, b) == P({-1, 1}));
    RatPoly sq = P({-1, 1}) * P({-1, 1}) * P({2, 0, 1});
    CHECK(squarefree_part(sq) == (P({-1, 1}) * P({2, 0, 1})).monic());
    RatPoly s, t;
    RatPoly g = extended_gcd(a, b, s, t);
    CHECK(s * a + t * b == g);
}

TEST_CASE("Sturm counts roots in half-open intervals") {
    RatPoly p = P({-1, 1}) * P({-2, 1}) * P({-3, 1});
    auto chain = sturm_chain(p);
    CHECK(count_real_roots(chain, 0, 10) == 3);
    CHECK(count_real_roots(chain, 1, 2) == 1);  // (1, 2]
    CHECK(count_real_roots(chain, Rational(3, 2), Rational(5, 2)) == 1);
    CHECK(count_real_roots(sturm_chain(P({1, 0, 1})), -10, 10) == 0);
}

TEST_CASE("interpolation reproduces a polynomial") {
    RatPoly p = P({4, -3, 0, 2});
    std::vector<Rational> xs, ys;
    for (long x = -2; x <= 1; ++x) {
        xs.emplace_back(x);
        ys.push_back(p.eval(Rational(x)));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("enclosure arithmetic contains the true values") {
    Enclosure a{1, 2}, b{-1, 3};
    Enclosure m = a * b;
    CHECK(m.lo == -2);
    CHECK(m.hi == 6);
    Enclosure q = a / Enclosure{2, 4};
    CHECK(q.lo == Rational(1, 4));
    CHECK(q.hi == 1);
    Enclosure r = round_outward({Rational(1, 3), Rational(2, 3)}, 4);
    CHECK(r.lo <= Rational(1, 3));
    CHECK(r.hi >= Rational(2, 3));
}
