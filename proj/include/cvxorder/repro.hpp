#pragma once

#include "cvxorder/measure.hpp"
#include "cvxorder/ordernd.hpp"
#include "cvxorder/projcert.hpp"

#include <ostream>

namespace cvxorder {

// What the built-in counterexample must produce. Defaults are the exact
// hand-computed values; the struct exists so the harness itself can be
// tested against tampered expectations.
struct ReproExpectations {
    Rational int_mu{2, 3};
    Rational int_nu{1, 2};
    Rational gap{1, 6};
    Rational inequality_lhs{3};
    Rational inequality_rhs{4};
};

// Runs the full counterexample pipeline and writes one line per check:
//   1. the 2-D all-directions certifier reports AllDominated,
//   2. the martingale LP reports NotDominated with a positive exact gap,
//   3. f(w) = max(0, w1, w2) integrates to the expected exact values,
//   4. the three-point inequality evaluates to lhs 3 < rhs 4.
// Returns true iff every expectation holds.
inline bool run_counterexample_repro(std::ostream& out,
                                     const ReproExpectations& expected = {})
{
    bool ok = true;
    const auto report = [&](const char* label, bool pass) {
        out << (pass ? "[ok]   " : "[FAIL] ") << label << "\n";
        ok = ok && pass;
    };

    const auto [mu, nu] = counterexample_instance();
    out << "instance: mu has " << mu.size() << " atoms, nu has " << nu.size()
        << " atoms, common barycenter " << to_string(barycenter(mu)) << "\n";
    report("barycenters agree", barycenter(mu) == barycenter(nu));

    const DirectionCertificate cert = certify_all_directions_2d(mu, nu);
    out << "projections: " << cert.critical_directions.size() << " critical directions, "
        << cert.arcs.size() << " arcs\n";
    report("every 1-D projection is dominated (AllDominated)", cert.all_dominated);

    const OrderVerdict verdict = check_convex_order(mu, nu);
    const bool not_dominated = verdict.relation == OrderRelation::NotDominated;
    report("full 2-D convex order fails (NotDominated)", not_dominated);
    if (not_dominated) {
        out << "lp witness: " << verdict.witness->pieces.size() << " pieces, gap "
            << to_string(verdict.gap) << "\n";
        report("lp witness gap is positive", verdict.gap > 0);
    }

    const MaxAffineWitness f = counterexample_witness();
    const WitnessEvaluation eval = evaluate_witness(f, mu, nu);
    out << "max(0,w1,w2): int_mu " << to_string(eval.int_mu) << ", int_nu "
        << to_string(eval.int_nu) << ", gap " << to_string(eval.gap) << "\n";
    report("int_mu matches", eval.int_mu == expected.int_mu);
    report("int_nu matches", eval.int_nu == expected.int_nu);
    report("gap matches", eval.gap == expected.gap);

    const auto [x, y, z] = std::tuple{PointQ{Rational(0), Rational(-1)},
                                      PointQ{Rational(-1), Rational(0)},
                                      PointQ{Rational(2), Rational(2)}};
    const TriangleInequalityEvaluation ineq = evaluate_triangle_inequality(x, y, z, f);
    out << "three-point inequality: lhs " << to_string(ineq.lhs) << ", rhs "
        << to_string(ineq.rhs) << "\n";
    report("lhs matches", ineq.lhs == expected.inequality_lhs);
    report("rhs matches", ineq.rhs == expected.inequality_rhs);
    report("inequality fails as required", !ineq.holds);

    out << (ok ? "counterexample reproduced\n" : "counterexample reproduction FAILED\n");
    return ok;
}

} // namespace cvxorder
