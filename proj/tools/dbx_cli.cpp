// Command-line front end: JSON lines on stdout, CSV for scan.
#include "dbx/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <thread>

using namespace dbx;

namespace {

enum Exit { Ok = 0, Usage = 1, Partial = 2, Invariant = 3 };

struct Record {
    json inputs = json::object();
    json result;
    json verdict;
    json budgets = json::object();
    bool partial = false;
};

std::string echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

DoubleBase base_from(const std::string& q0, const std::string& q1) {
    return DoubleBase(ExactScalar::parse(q0), ExactScalar::parse(q1));
}

bool undecided(const Verdict& v) { return v.kind == Verdict::Kind::UndecidedAtDepth; }

Record run_expand(const std::string& q0, const std::string& q1, const std::string& x, const std::string& kind,
                  size_t depth) {
    DoubleBase Q = base_from(q0, q1);
    ExpansionResult e = expansion_stream(Q, ExactScalar::parse(x), parse_expansion_kind(kind), depth);
    Record r;
    r.inputs = {{"q0", q0}, {"q1", q1}, {"x", x}, {"kind", kind}};
    r.result = to_json(e);
    r.verdict = e.is_periodic() ? "Periodic" : "PrefixOnly";
    r.budgets = {{"depth", depth}};
    r.partial = !e.is_periodic();
    return r;
}

Record run_profile(const std::string& q0, const std::string& q1, size_t depth) {
    DoubleBase Q = base_from(q0, q1);
    BaseProfile p = profile(Q, depth);
    Classification c = classify_case(p);
    Record r;
    r.inputs = {{"q0", q0}, {"q1", q1}};
    r.result = to_json(p);
    r.result["case"] = c.label ? json(to_string(*c.label)) : json(nullptr);
    if (c.label) {
        std::optional<Subcase> sub;
        if ((*c.label == CaseLabel::X || *c.label == CaseLabel::XI) && c.verdict.is_proven())
            sub = aux_profile(p, *c.label).subcase;
        r.result["topology"] = to_json(topology_summary(*c.label, sub));
    }
    r.verdict = to_json(c.verdict);
    r.budgets = {{"depth", depth}};
    r.partial = undecided(c.verdict);
    return r;
}

Record run_point(const std::string& q0, const std::string& q1, const std::string& xs, size_t depth,
                 size_t max_leaves) {
    DoubleBase Q = base_from(q0, q1);
    ExactScalar x = ExactScalar::parse(xs);
    BaseProfile p = profile(Q, depth);
    Classification c = classify_case(p);
    PointClass pc = classify_point(Q, p, x, depth);
    Record r;
    r.inputs = {{"q0", q0}, {"q1", q1}, {"x", xs}};
    r.result = to_json(pc);
    r.result["case"] = c.label ? json(to_string(*c.label)) : json(nullptr);
    std::optional<CountResult> theory;
    if (c.label && c.verdict.is_proven() && pc.in_U.proven_true()) {
        theory = pc.count;
    } else if (c.label && c.verdict.is_proven()) {
        try {
            theory = count_expansions(p, *c.label, pc);
        } catch (const DomainError&) {
        }
    }
    r.result["theory_count"] = theory ? to_json(*theory) : json(nullptr);
    CountResult oracle = count_oracle(enumerate_expansions(Q, x, depth, max_leaves));
    r.result["oracle_count"] = to_json(oracle);
    r.result["oracle_agrees"] = theory ? json(*theory == oracle) : json(nullptr);
    r.verdict = to_json(pc.in_V.verdict);
    r.budgets = {{"depth", depth}, {"max_leaves", max_leaves}};
    r.partial = undecided(pc.in_V.verdict) || undecided(pc.in_U.verdict);
    return r;
}

Record run_enumerate(const std::string& q0, const std::string& q1, const std::string& x, size_t depth,
                     size_t max_leaves) {
    DoubleBase Q = base_from(q0, q1);
    Census c = enumerate_expansions(Q, ExactScalar::parse(x), depth, max_leaves);
    CountResult n = count_oracle(c);
    Record r;
    r.inputs = {{"q0", q0}, {"q1", q1}, {"x", x}};
    r.result = to_json(c);
    r.verdict = to_json(n);
    r.budgets = {{"depth", depth}, {"max_leaves", max_leaves}};
    r.partial = n.kind == CountResult::Kind::AtLeastAtDepth;
    return r;
}

Record run_gaps(const std::string& q0, const std::string& q1, size_t len, size_t depth) {
    DoubleBase Q = base_from(q0, q1);
    BaseProfile p = profile(Q, depth);
    Record r;
    r.inputs = {{"q0", q0}, {"q1", q1}, {"max_word_len", len}};
    r.budgets = {{"depth", depth}};
    if (!p.mu.is_periodic() || !p.alpha.is_periodic()) {
        r.result = json::array();
        r.verdict = "UndecidedAtDepth(" + std::to_string(depth) + ")";
        r.partial = true;
        return r;
    }
    r.result = json::array();
    for (const auto& g : gaps_enumerate(Q, p, len, depth)) r.result.push_back(to_json(g));
    r.verdict = "Proven";
    return r;
}

Record run_solve(const std::string& mu, const std::string& alpha, double tol) {
    ProfileSpec spec{PeriodicSeq::parse(mu), PeriodicSeq::parse(alpha)};
    Record r;
    r.inputs = {{"mu", mu}, {"alpha", alpha}, {"tol", tol}};
    Verdict adm = check_admissible(spec);
    if (!adm.is_proven()) {
        r.result = nullptr;
        r.verdict = to_json(adm);
        return r;
    }
    SolveResult s = solve_base(spec, tol);
    r.result = {{"on_curve_c", s.on_curve_c}, {"ambiguous", s.ambiguous}, {"roots", json::array()}};
    for (const auto& root : s.roots) {
        json j = to_json(root);
        Classification c = classify_case(root.forward);
        j["case"] = c.label ? json(to_string(*c.label)) : json(nullptr);
        r.result["roots"].push_back(j);
    }
    r.verdict = "Proven";
    return r;
}

std::pair<Rational, Rational> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("range must be lo:hi");
    auto lo = ExactScalar::parse(s.substr(0, colon)), hi = ExactScalar::parse(s.substr(colon + 1));
    if (!lo.as_rational() || !hi.as_rational()) throw ParseError("range bounds must be rational");
    return {*lo.as_rational(), *hi.as_rational()};
}

int run_scan(const std::string& r0, const std::string& r1, size_t steps, size_t depth, unsigned threads) {
    auto [lo0, hi0] = parse_range(r0);
    auto [lo1, hi1] = parse_range(r1);
    if (steps < 2) throw ParseError("steps must be at least 2");
    size_t n = steps * steps;
    std::vector<std::string> rows(n);
    std::atomic<size_t> next{0};
    std::atomic<bool> partial{false};
    auto work = [&] {
        for (size_t k; (k = next++) < n;) {
            Rational q0 = lo0 + (hi0 - lo0) * Rational(k / steps) / Rational(steps - 1);
            Rational q1 = lo1 + (hi1 - lo1) * Rational(k % steps) / Rational(steps - 1);
            q0.canonicalize();
            q1.canonicalize();
            try {
                DoubleBase Q(q0, q1);
                if (!Q.in_A()) continue;
                Classification c = classify_case(profile(Q, depth));
                if (undecided(c.verdict)) partial = true;
                rows[k] = q0.get_str() + "," + q1.get_str() + "," + (c.label ? to_string(*c.label) : "") + "," +
                          c.verdict.to_string();
            } catch (const DomainError&) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    std::cout << "q0,q1,case,verdict\n";
    for (const auto& row : rows)
        if (!row.empty()) std::cout << row << '\n';
    return partial ? Partial : Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-base expansions: expansions, profiles, point classes, oracle and inverse solver"};
    app.require_subcommand(1);
    std::string q0, q1, x, kind = "greedy", mu, alpha, r0, r1;
    size_t depth = 200, max_leaves = 4096, len = 6, steps = 20;
    double tol = 1e-12;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    auto base_opts = [&](CLI::App* c) {
        c->add_option("--q0", q0, "weight base of digit 0")->required();
        c->add_option("--q1", q1, "weight base of digit 1")->required();
    };
    auto* expand = app.add_subcommand("expand", "one of the four canonical expansions of x");
    base_opts(expand);
    expand->add_option("--x", x)->required();
    expand->add_option("--kind", kind, "greedy, quasi-greedy, lazy, quasi-lazy");
    expand->add_option("--depth", depth);
    auto* prof = app.add_subcommand("profile", "(mu, alpha), case label and topology row");
    base_opts(prof);
    prof->add_option("--depth", depth);
    auto* point = app.add_subcommand("point", "point class with theoretical and oracle counts");
    base_opts(point);
    point->add_option("--x", x)->required();
    point->add_option("--depth", depth);
    point->add_option("--max-leaves", max_leaves);
    auto* enumerate = app.add_subcommand("enumerate", "brute-force census of all expansions");
    base_opts(enumerate);
    enumerate->add_option("--x", x)->required();
    enumerate->add_option("--depth", depth);
    enumerate->add_option("--max-leaves", max_leaves);
    auto* gaps = app.add_subcommand("gaps", "gaps of J_Q \\ V_Q by finite greedy words");
    base_opts(gaps);
    gaps->add_option("--max-word-len", len);
    gaps->add_option("--depth", depth);
    auto* solve = app.add_subcommand("solve", "base with a given profile");
    solve->add_option("--mu", mu)->required();
    solve->add_option("--alpha", alpha)->required();
    solve->add_option("--tol", tol);
    auto* scan = app.add_subcommand("scan", "CSV of case labels over a grid in region A");
    scan->add_option("--q0-range", r0, "lo:hi")->required();
    scan->add_option("--q1-range", r1, "lo:hi")->required();
    scan->add_option("--steps", steps);
    scan->add_option("--depth", depth);
    scan->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try {
        if (scan->parsed()) return run_scan(r0, r1, steps, depth, threads);
        Record r;
        if (expand->parsed()) r = run_expand(q0, q1, x, kind, depth);
        else if (prof->parsed()) r = run_profile(q0, q1, depth);
        else if (point->parsed()) r = run_point(q0, q1, x, depth, max_leaves);
        else if (enumerate->parsed()) r = run_enumerate(q0, q1, x, depth, max_leaves);
        else if (gaps->parsed()) r = run_gaps(q0, q1, len, depth);
        else r = run_solve(mu, alpha, tol);
        json out = {{"cmd", echo(argc, argv)},
                    {"inputs", r.inputs},
                    {"result", r.result},
                    {"verdict", r.verdict},
                    {"budgets", r.budgets}};
        std::cout << out.dump() << '\n';
        return r.partial ? Partial : Ok;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return Invariant;
    } catch (const UndecidableError& e) {
        std::cerr << "undecidable: " << e.what() << '\n';
        return Partial;
    } catch (const NoSolutionFound& e) {
        std::cerr << "no solution: " << e.what() << '\n';
        return Partial;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
}
