#include "dbx/report.hpp"

namespace dbx {

namespace {

std::string str(const Rational& r) { return r.get_str(); }

}  // namespace

json to_json(const ExactScalar& x) {
    switch (x.kind()) {
        case ScalarKind::Rational: return {{"type", "rational"}, {"value", str(*x.as_rational())}};
        case ScalarKind::Quadratic: {
            const auto& q = *x.as_quadratic();
            return {{"type", "quadratic"},
                    {"p", str(q.rational_part())},
                    {"q", str(q.surd_coefficient())},
                    {"d", q.radicand()},
                    {"approx", x.approx()}};
        }
        case ScalarKind::Algebraic: {
            const auto& a = *x.as_algebraic();
            Enclosure root = a.field->root_enclosure();
            return {{"type", "algebraic"},
                    {"minpoly", a.field->modulus().to_string("t")},
                    {"root_interval", {str(root.lo), str(root.hi)}},
                    {"poly", a.poly.to_string("t")},
                    {"approx", x.approx()}};
        }
        default: {
            Enclosure e = x.enclose(0);
            return {{"type", "interval"},
                    {"lo", str(e.lo)},
                    {"hi", str(e.hi)},
                    {"width", e.width().get_d()}};
        }
    }
}

json to_json(const ExpansionResult& e) {
    if (e.is_periodic()) {
        const auto& p = e.periodic();
        return {{"status", "Periodic"},
                {"digits", p.seq.literal()},
                {"class", to_string(p.seq.classify())},
                {"cycle_start", p.cycle_start},
                {"cycle_length", p.cycle_length}};
    }
    const auto& p = e.prefix_only();
    return {{"status", "PrefixOnly"},
            {"digits", p.prefix.digits},
            {"depth", p.prefix.depth()},
            {"reason", to_string(p.reason)}};
}

json to_json(const Verdict& v) { return v.to_string(); }

json to_json(const CountResult& c) { return c.to_string(); }

json to_json(const Membership& m) { return {{"value", m.value}, {"verdict", to_json(m.verdict)}}; }

json to_json(const DoubleBase& Q) {
    return {{"q0", to_json(Q.q0())}, {"q1", to_json(Q.q1())}, {"region", to_string(Q.region())}};
}

json to_json(const BaseProfile& p) {
    return {{"region", to_string(p.region)}, {"mu", to_json(p.mu)}, {"alpha", to_json(p.alpha)}};
}

json to_json(const PointClass& pc) {
    return {{"x", to_json(pc.x)},
            {"greedy", to_json(pc.b)},
            {"quasi_greedy", to_json(pc.a)},
            {"quasi_lazy", to_json(pc.m)},
            {"lazy", to_json(pc.l)},
            {"in_U", to_json(pc.in_U)},
            {"in_V", to_json(pc.in_V)},
            {"in_A", to_json(pc.in_A)},
            {"in_B", to_json(pc.in_B)},
            {"count", to_json(pc.count)}};
}

json to_json(const Census& c) {
    json certs = json::array();
    for (const auto& s : c.certified) certs.push_back(s.literal());
    return {{"certified", certs},
            {"open_branches", c.open_branches},
            {"branching_cycle_found", c.branching_cycle_found},
            {"continuum_found", c.continuum_found},
            {"complete", c.complete},
            {"states", c.states},
            {"count", to_json(count_oracle(c))}};
}

json to_json(const Gap& g) {
    return {{"x_left", to_json(g.x_left)},
            {"x_right", to_json(g.x_right)},
            {"b_left", g.b_left.literal()},
            {"l_right", g.l_right.literal()},
            {"a_left", g.a_left.literal()},
            {"m_right", g.m_right.literal()}};
}

json to_json(const SolvedBase& s) {
    return {{"base", to_json(s.base)},
            {"q0_approx", s.q0_approx},
            {"q1_approx", s.q1_approx},
            {"residual_alpha", s.residual_alpha},
            {"residual_mu", s.residual_mu},
            {"exact", s.exact},
            {"forward_profile", to_json(s.forward)},
            {"reproduces", s.reproduces}};
}

json to_json(const Table2Row& r) {
    return {{"inclusions", r.inclusions}, {"A_B", r.ab_relation}, {"count_A", r.count_a}, {"count_B", r.count_b}};
}

}  // namespace dbx
