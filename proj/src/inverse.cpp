#include "dbx/inverse.hpp"

#include "dbx/exactify.hpp"

#include <cmath>

namespace dbx {

Verdict check_admissible(const ProfileSpec& spec) {
    if (spec.alpha.digit(0) != 1 || spec.mu.digit(0) != 0) return Verdict::refuted(0);
    auto ta = spec.alpha.tails(), tm = spec.mu.tails();
    for (size_t n = 1; n < ta.size(); ++n)
        if (ta[n] > spec.alpha) return Verdict::refuted(n);
    for (size_t n = 1; n < tm.size(); ++n)
        if (tm[n] < spec.mu) return Verdict::refuted(n);
    return Verdict::proven();
}

namespace {

// Digit weights a = 1/q0 and b = 1/q1.
BiPoly weight(char d) { return d == '0' ? BiPoly::var_a() : BiPoly::var_b(); }

// W_w and S_w of a word: the product of its weights and its value.
std::pair<BiPoly, BiPoly> word_terms(const std::string& w) {
    BiPoly W(1), S;
    for (char d : w) {
        W = W * weight(d);
        if (d == '1') S += W;
    }
    return {W, S};
}

// pi(u v^inf) = N / D.
std::pair<BiPoly, BiPoly> pi_fraction(const PeriodicSeq& s) {
    auto [wu, su] = word_terms(s.preperiod());
    auto [wv, sv] = word_terms(s.period());
    BiPoly d = BiPoly(1) - wv;
    return {su * d + wu * sv, d};
}

struct Candidate {
    double a, b;
};

std::optional<Candidate> newton(const BiPoly& f, const BiPoly& g, double a, double b) {
    auto norm = [&](double x, double y) { return std::max(std::fabs(f.eval(x, y)), std::fabs(g.eval(x, y))); };
    double r = norm(a, b);
    for (int it = 0; it < 100; ++it) {
        auto fv = f.eval_grad(a, b), gv = g.eval_grad(a, b);
        double det = fv[1] * gv[2] - fv[2] * gv[1];
        if (det == 0 || !std::isfinite(det)) return std::nullopt;
        double da = (fv[0] * gv[2] - fv[2] * gv[0]) / det, db = (fv[1] * gv[0] - fv[0] * gv[1]) / det;
        double t = 1;
        double na = a - da, nb = b - db, nr = norm(na, nb);
        for (int h = 0; h < 30 && !(nr < r); ++h) {
            t /= 2;
            na = a - t * da, nb = b - t * db, nr = norm(na, nb);
        }
        if (!(nr < r)) break;
        a = na, b = nb, r = nr;
        if (a <= 0 || b <= 0 || a >= 1.05 || b >= 1.05) return std::nullopt;
        if (std::fabs(da) + std::fabs(db) < 1e-16) break;
    }
    if (!(r < 1e-10)) return std::nullopt;
    return Candidate{a, b};
}

void add_unique(std::vector<Candidate>& out, Candidate c) {
    for (const auto& o : out)
        if (std::fabs(o.a - c.a) < 1e-8 && std::fabs(o.b - c.b) < 1e-8) return;
    out.push_back(c);
}

std::vector<Candidate> search(const BiPoly& f, const BiPoly& g, int grid) {
    std::vector<Candidate> out;
    auto q_at = [&](int i) { return 1 + 7 * (i + 0.5) / grid; };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            if (auto c = newton(f, g, 1 / q_at(i), 1 / q_at(j))) add_unique(out, *c);
    return out;
}

// Finer starts in cells where both equations change sign.
std::vector<Candidate> sign_change_search(const BiPoly& f, const BiPoly& g, int grid, int sub) {
    std::vector<Candidate> out;
    auto q_at = [&](double i) { return 1 + 7 * i / grid; };
    auto changes = [](const BiPoly& p, double a0, double a1, double b0, double b1) {
        double v[4] = {p.eval(a0, b0), p.eval(a0, b1), p.eval(a1, b0), p.eval(a1, b1)};
        bool pos = false, neg = false;
        for (double x : v) pos = pos || x >= 0, neg = neg || x <= 0;
        return pos && neg;
    };
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            double a0 = 1 / q_at(i + 1), a1 = 1 / q_at(i), b0 = 1 / q_at(j + 1), b1 = 1 / q_at(j);
            if (!changes(f, a0, a1, b0, b1) || !changes(g, a0, a1, b0, b1)) continue;
            for (int s = 0; s < sub; ++s)
                for (int t = 0; t < sub; ++t) {
                    double a = a0 + (a1 - a0) * (s + 0.5) / sub, b = b0 + (b1 - b0) * (t + 0.5) / sub;
                    if (auto c = newton(f, g, a, b)) add_unique(out, *c);
                }
        }
    return out;
}

double residual(const ExactScalar& x) {
    if (certainly_equal(x, ExactScalar(0))) return 0;
    return x.approx();
}

}  // namespace

SolveResult solve_base(const ProfileSpec& spec, double tol, size_t depth) {
    if (!check_admissible(spec).is_proven()) throw std::invalid_argument("profile pair is not admissible");
    SolveResult res;
    if (spec.mu == PeriodicSeq::zeros() && spec.alpha == PeriodicSeq::ones()) {
        res.on_curve_c = true;
        return res;
    }
    auto [na, da] = pi_fraction(spec.alpha);
    auto [nm, dm] = pi_fraction(spec.mu);
    BiPoly a = BiPoly::var_a(), b = BiPoly::var_b(), one(1);
    BiPoly p1 = a * na - b * da;
    BiPoly p2 = (one - b) * nm - a * dm + (one - b) * dm;

    std::vector<Candidate> cands = search(p1, p2, 32);
    bool fallback_done = false;
    while (true) {
        for (const auto& c : cands) {
            // Region A is a + b >= 1; the box is q0, q1 <= 8.
            if (c.a + c.b < 1 - 1e-9 || c.a < 1.0 / 8 - 1e-9 || c.b < 1.0 / 8 - 1e-9 || c.a >= 1 || c.b >= 1)
                continue;
            double q0 = 1 / c.a, q1 = 1 / c.b;
            double ra = (na.eval(c.a, c.b) / da.eval(c.a, c.b)) - q0 / q1;
            double rm = (nm.eval(c.a, c.b) / dm.eval(c.a, c.b)) - (q1 / (q0 * (q1 - 1)) - 1);
            if (std::fabs(ra) > std::max(tol, 1e-9) || std::fabs(rm) > std::max(tol, 1e-9)) continue;
            auto ex = exactify(p1, p2, c.a, c.b);
            if (!ex) continue;
            try {
                DoubleBase Q(ExactScalar(1) / ex->a, ExactScalar(1) / ex->b);
                if (!Q.in_A()) continue;
                BaseProfile fwd = profile(Q, depth);
                const PeriodicSeq *mu = fwd.mu.sequence(), *alpha = fwd.alpha.sequence();
                bool same = mu && alpha && *mu == spec.mu && *alpha == spec.alpha;
                if (!same) continue;
                const BaseConstants& k = Q.constants();
                double res_a = residual(pi_eval(Q, spec.alpha) - k.r), res_m = residual(pi_eval(Q, spec.mu) - k.ell);
                if (std::fabs(res_a) > tol || std::fabs(res_m) > tol) continue;
                res.roots.push_back({Q, q0, q1, res_a, res_m, Q.exact(), std::move(fwd), true});
            } catch (const InvariantViolation&) {
            } catch (const UndecidableError&) {
            } catch (const DomainError&) {
            }
        }
        if (!res.roots.empty() || fallback_done) break;
        cands = sign_change_search(p1, p2, 32, 4);
        fallback_done = true;
    }
    if (res.roots.empty()) throw NoSolutionFound("no certified root in region A");
    res.ambiguous = res.roots.size() > 1;
    return res;
}

}  // namespace dbx
