#include "cvxorder/projcert.hpp"

#include "cvxorder/certificate_io.hpp"
#include "cvxorder/order1d.hpp"
#include "support/generators.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace cvxorder;
using cvxtest::Rng;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

DiscreteMeasure uniform_on(std::vector<PointQ> points)
{
    std::vector<Atom> atoms;
    const Rational w(1, static_cast<long long>(points.size()));
    for (auto& p : points)
        atoms.push_back({std::move(p), w});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

PointQ random_direction(Rng& rng)
{
    std::uniform_int_distribution<int> coord(-40, 40);
    for (;;) {
        PointQ v{q(coord(rng)), q(coord(rng))};
        if (!is_zero(v))
            return v;
    }
}

} // namespace

TEST_CASE("primitive direction reduction")
{
    CHECK(primitive_direction({q(1, 2), q(1, 3)}) == PointQ{q(3), q(2)});
    CHECK(primitive_direction({q(4), q(-6)}) == PointQ{q(2), q(-3)});
    CHECK(primitive_direction({q(0), q(-5)}) == PointQ{q(0), q(-1)});
    CHECK_THROWS_AS(primitive_direction({q(0), q(0)}), std::invalid_argument);
}

TEST_CASE("angle ordering starts at +x and walks counterclockwise")
{
    std::vector<PointQ> dirs = {{q(0), q(-1)}, {q(-1), q(0)}, {q(1), q(1)},
                                {q(1), q(0)},  {q(0), q(1)},  {q(-1), q(-1)}};
    std::sort(dirs.begin(), dirs.end(), angle_less);
    CHECK(dirs == std::vector<PointQ>{{q(1), q(0)},
                                      {q(1), q(1)},
                                      {q(0), q(1)},
                                      {q(-1), q(0)},
                                      {q(-1), q(-1)},
                                      {q(0), q(-1)}});
}

TEST_CASE("critical directions for simple supports")
{
    // Two pooled points on the x-axis: only the orthogonal pair.
    const DiscreteMeasure a = dirac({q(0), q(0)});
    const DiscreteMeasure b = dirac({q(1), q(0)});
    CHECK(critical_directions(a, b) ==
          std::vector<PointQ>{{q(0), q(1)}, {q(0), q(-1)}});

    // A single pooled point falls back to the four axes.
    CHECK(critical_directions(a, a) == std::vector<PointQ>{{q(1), q(0)},
                                                           {q(0), q(1)},
                                                           {q(-1), q(0)},
                                                           {q(0), q(-1)}});

    CHECK_THROWS_AS(critical_directions(dirac({q(0)}), dirac({q(0)})),
                    std::invalid_argument);
}

TEST_CASE("critical directions of the counterexample pair")
{
    const auto [mu, nu] = counterexample_instance();
    const std::vector<PointQ> dirs = critical_directions(mu, nu);

    // 7 pooled points give at most 2*C(7,2) = 42 directions before dedup.
    CHECK(dirs.size() <= 42);
    CHECK(dirs.size() % 2 == 0);
    CHECK(std::is_sorted(dirs.begin(), dirs.end(), angle_less));

    // Closed under negation and contains both normals of every pooled pair.
    const auto contains = [&](const PointQ& v) {
        return std::find(dirs.begin(), dirs.end(), v) != dirs.end();
    };
    for (const auto& v : dirs)
        CHECK(contains(-v));
    std::vector<PointQ> pooled;
    for (const auto& atom : mu.atoms())
        pooled.push_back(atom.point);
    for (const auto& atom : nu.atoms())
        pooled.push_back(atom.point);
    for (std::size_t i = 0; i < pooled.size(); ++i)
        for (std::size_t j = i + 1; j < pooled.size(); ++j) {
            if (pooled[i] == pooled[j])
                continue;
            const PointQ diff = pooled[j] - pooled[i];
            CHECK(contains(primitive_direction({-diff[1], diff[0]})));
        }
}

TEST_CASE("kink vectors: identical measures give zero vectors")
{
    const auto [mu, nu] = counterexample_instance();
    for (const auto& c : kink_vectors_on_arc(nu, nu, {q(7), q(1)}))
        CHECK(is_zero(c));
}

TEST_CASE("kink vectors: worked two-atom example")
{
    const DiscreteMeasure mu = dirac({q(0), q(0)});
    const DiscreteMeasure nu = uniform_on({{q(-1), q(0)}, {q(1), q(0)}});
    // Pooled support in lex order: (-1,0), (0,0), (1,0).
    const std::vector<PointQ> kinks = kink_vectors_on_arc(mu, nu, {q(1), q(0)});
    REQUIRE(kinks.size() == 3);
    CHECK(kinks[0] == PointQ{q(0), q(0)});
    CHECK(kinks[1] == PointQ{q(1, 2), q(0)});
    CHECK(kinks[2] == PointQ{q(0), q(0)});

    // c_p . v equals the stop-loss difference of the projections at p.v.
    const PointQ v{q(1), q(0)};
    const DiscreteMeasure mu_v = project(mu, v);
    const DiscreteMeasure nu_v = project(nu, v);
    const std::vector<PointQ> pooled = {{q(-1), q(0)}, {q(0), q(0)}, {q(1), q(0)}};
    for (std::size_t i = 0; i < pooled.size(); ++i) {
        const Rational t = dot(pooled[i], v);
        CHECK(stop_loss(nu_v, t) - stop_loss(mu_v, t) == dot(kinks[i], v));
    }

    // A probe orthogonal to a pooled difference is rejected.
    CHECK_THROWS_AS(kink_vectors_on_arc(mu, nu, {q(0), q(1)}), std::invalid_argument);
}

TEST_CASE("kink vectors are linear across an arc")
{
    const auto [mu, nu] = counterexample_instance();
    const std::vector<PointQ> dirs = critical_directions(mu, nu);
    // Two probes strictly inside the first arc.
    const PointQ e1 = dirs[0];
    const PointQ e2 = dirs[1];
    const PointQ probe1 = Rational(2) * e1 + e2;
    const PointQ probe2 = e1 + Rational(2) * e2;

    const std::vector<PointQ> k1 = kink_vectors_on_arc(mu, nu, probe1);
    const std::vector<PointQ> k2 = kink_vectors_on_arc(mu, nu, probe2);
    CHECK(k1 == k2);

    std::vector<PointQ> pooled;
    for (const auto& atom : mu.atoms())
        pooled.push_back(atom.point);
    for (const auto& atom : nu.atoms())
        pooled.push_back(atom.point);
    std::sort(pooled.begin(), pooled.end(), lex_less);
    pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
    REQUIRE(pooled.size() == k1.size());

    for (const PointQ& probe : {probe1, probe2}) {
        const DiscreteMeasure mu_p = project(mu, probe);
        const DiscreteMeasure nu_p = project(nu, probe);
        for (std::size_t i = 0; i < pooled.size(); ++i) {
            const Rational t = dot(pooled[i], probe);
            CHECK(stop_loss(nu_p, t) - stop_loss(mu_p, t) == dot(k1[i], probe));
        }
    }
}

TEST_CASE("counterexample pair certifies AllDominated")
{
    const auto [mu, nu] = counterexample_instance();
    const DirectionCertificate cert = certify_all_directions_2d(mu, nu);
    CHECK(cert.all_dominated);
    CHECK(cert.arcs.size() == cert.critical_directions.size());
    for (const auto& arc : cert.arcs) {
        CHECK(arc.verified);
        CHECK(arc.kink_vectors.size() == 7);
        for (const auto& c : arc.kink_vectors) {
            CHECK(dot(c, arc.start) >= 0);
            CHECK(dot(c, arc.end) >= 0);
        }
    }

    // Spot checks across every critical direction and one probe per arc.
    std::vector<PointQ> dirs = cert.critical_directions;
    for (const auto& arc : cert.arcs)
        dirs.push_back(arc.start + arc.end);
    for (const auto& check : spot_check_directions(mu, nu, dirs))
        CHECK(check.result.kind == Order1D::Dominated);
}

TEST_CASE("reversed spread fails with a confirmed direction")
{
    const DiscreteMeasure spread = uniform_on({{q(0), q(0)}, {q(2), q(0)}});
    const DiscreteMeasure mean = dirac({q(1), q(0)});

    const DirectionCertificate cert = certify_all_directions_2d(spread, mean);
    REQUIRE_FALSE(cert.all_dominated);
    REQUIRE(cert.failing_direction.has_value());
    REQUIRE(cert.failing_threshold.has_value());

    // The reported direction and threshold are a genuine violation.
    const DiscreteMeasure a = project(spread, *cert.failing_direction);
    const DiscreteMeasure b = project(mean, *cert.failing_direction);
    CHECK(stop_loss(a, *cert.failing_threshold) > stop_loss(b, *cert.failing_threshold));
    const auto checks = spot_check_directions(spread, mean, {*cert.failing_direction});
    CHECK(checks[0].result.kind == Order1D::NotDominated);

    // The other way round is fine.
    CHECK(certify_all_directions_2d(mean, spread).all_dominated);
}

TEST_CASE("identical measures certify with zero kink vectors")
{
    const auto [mu, nu] = counterexample_instance();
    const DirectionCertificate cert = certify_all_directions_2d(nu, nu);
    CHECK(cert.all_dominated);
    for (const auto& arc : cert.arcs)
        for (const auto& c : arc.kink_vectors)
            CHECK(is_zero(c));
}

TEST_CASE("collinear supports get axis directions added")
{
    // Everything lives on the x-axis, so pairwise normals alone would leave
    // two half-circle arcs.
    const DiscreteMeasure spread = uniform_on({{q(0), q(0)}, {q(2), q(0)}});
    const DiscreteMeasure mean = dirac({q(1), q(0)});
    const DirectionCertificate cert = certify_all_directions_2d(mean, spread);
    CHECK(cert.all_dominated);
    CHECK(cert.critical_directions.size() == 4);
    for (const auto& arc : cert.arcs)
        CHECK(cross2(arc.start, arc.end) > 0); // every arc subtends < pi
}

TEST_CASE("barycenter mismatch fails immediately with a violating threshold")
{
    const DiscreteMeasure a = dirac({q(0), q(0)});
    const DiscreteMeasure b = dirac({q(0), q(3)});
    const DirectionCertificate cert = certify_all_directions_2d(a, b);
    REQUIRE_FALSE(cert.all_dominated);
    REQUIRE(cert.failing_direction.has_value());
    const DiscreteMeasure pa = project(a, *cert.failing_direction);
    const DiscreteMeasure pb = project(b, *cert.failing_direction);
    CHECK(stop_loss(pa, *cert.failing_threshold) > stop_loss(pb, *cert.failing_threshold));
}

TEST_CASE("verdict is antipodally symmetric")
{
    Rng rng(9201);
    for (int trial = 0; trial < 10; ++trial) {
        const auto [a, b] = cvxtest::random_equal_mean_pair(rng, 2, 4);
        for (int d = 0; d < 20; ++d) {
            const PointQ v = random_direction(rng);
            const auto checks = spot_check_directions(a, b, {v, -v});
            CHECK(checks[0].result.kind == checks[1].result.kind);
        }
    }
}

TEST_CASE("triangle family always certifies and matches popoviciu")
{
    Rng rng(9202);
    for (int trial = 0; trial < 25; ++trial) {
        const PointQ x = cvxtest::random_point(rng, 2, 12, 4);
        const PointQ y = cvxtest::random_point(rng, 2, 12, 4);
        const PointQ z = cvxtest::random_point(rng, 2, 12, 4);
        const auto [mu, nu] = triangle_instance(x, y, z);
        const DirectionCertificate cert = certify_all_directions_2d(mu, nu);
        REQUIRE(cert.all_dominated);

        const PointQ v = random_direction(rng);
        const auto checks = spot_check_directions(mu, nu, {v});
        CHECK(checks[0].result.kind == Order1D::Dominated);
        CHECK(popoviciu_holds(dot(v, x), dot(v, y), dot(v, z)));
    }
}

TEST_CASE("spot checks reject zero directions")
{
    const auto [mu, nu] = counterexample_instance();
    CHECK_THROWS_AS(spot_check_directions(mu, nu, {zero_point(2)}), std::invalid_argument);
}

TEST_CASE("certificate serialization carries the verdict and per-arc data")
{
    const auto [mu, nu] = counterexample_instance();
    const DirectionCertificate cert = certify_all_directions_2d(mu, nu);
    const nlohmann::ordered_json j = certificate_to_json(cert);

    CHECK(j["overall"] == "all_dominated");
    CHECK(j["critical_directions"].size() == cert.critical_directions.size());
    REQUIRE(j["arcs"].size() == cert.arcs.size());
    for (const auto& arc : j["arcs"]) {
        CHECK(arc["verified"].get<bool>());
        CHECK(arc["kink_vector_count"].get<std::size_t>() == 7);
        CHECK(arc["start"].is_array());
        CHECK(arc["end"].is_array());
        CHECK(arc["sign_pattern_id"].is_number_integer());
    }

    const DiscreteMeasure spread = uniform_on({{q(0), q(0)}, {q(2), q(0)}});
    const nlohmann::ordered_json jf =
        certificate_to_json(certify_all_directions_2d(spread, dirac({q(1), q(0)})));
    CHECK(jf["overall"] == "fails_at");
    CHECK(jf.contains("failing_direction"));
    CHECK(jf.contains("failing_threshold"));
}
