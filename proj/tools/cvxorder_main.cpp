// Command-line front end. Exit codes are part of the interface:
//   0  order holds (or the requested computation succeeded)
//   10 order does not hold (a negative verdict is a successful computation)
//   11 barycenter / mean mismatch
//   2  usage or input error
//   1  internal expectation failure in paper-repro
#include "cvxorder/cvxorder.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotDominated = 10;
constexpr int kExitMeanMismatch = 11;

using namespace cvxorder;

PointQ parse_direction(const std::string& text, std::size_t expected_dim)
{
    std::vector<Rational> coords;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t comma = text.find(',', begin);
        const std::string part =
            text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        coords.push_back(parse_rational(part));
        if (comma == std::string::npos)
            break;
        begin = comma + 1;
    }
    if (coords.size() != expected_dim)
        throw std::invalid_argument("direction '" + text + "' has " +
                                    std::to_string(coords.size()) + " coordinates, measure has " +
                                    std::to_string(expected_dim));
    return PointQ(std::move(coords));
}

void print_rational_row(const std::vector<Rational>& row)
{
    for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << (i == 0 ? "  " : " ") << to_string(row[i]);
    std::cout << "\n";
}

int cmd_check1d(const std::string& file_a, const std::string& file_b)
{
    const DiscreteMeasure a = load_measure(file_a);
    const DiscreteMeasure b = load_measure(file_b);
    std::cout << "check1d A=" << file_a << " B=" << file_b << "\n";
    const Order1DResult r = check_convex_order_1d(a, b);
    switch (r.kind) {
    case Order1D::Dominated:
        std::cout << "verdict: DOMINATED\n";
        return kExitOk;
    case Order1D::NotDominated:
        std::cout << "verdict: NOT_DOMINATED\n";
        std::cout << "violating threshold: " << to_string(*r.violating_threshold) << "\n";
        std::cout << "witness: g(u) = max(u - (" << to_string(*r.violating_threshold)
                  << "), 0)\n";
        return kExitNotDominated;
    case Order1D::MeanMismatch:
        std::cout << "verdict: MEAN_MISMATCH\n";
        std::cout << "mean A: " << to_string(barycenter(a)[0]) << "\n";
        std::cout << "mean B: " << to_string(barycenter(b)[0]) << "\n";
        return kExitMeanMismatch;
    }
    return kExitInternal;
}

int cmd_checknd(const std::string& file_a, const std::string& file_b, bool show_witness)
{
    const DiscreteMeasure a = load_measure(file_a);
    const DiscreteMeasure b = load_measure(file_b);
    std::cout << "checknd A=" << file_a << " B=" << file_b << " dim=" << a.dim() << "\n";
    const OrderVerdict verdict = check_convex_order(a, b);
    switch (verdict.relation) {
    case OrderRelation::Dominated:
        std::cout << "verdict: DOMINATED\n";
        std::cout << "coupling (rows = atoms of A, columns = atoms of B):\n";
        for (const auto& row : verdict.coupling)
            print_rational_row(row);
        return kExitOk;
    case OrderRelation::NotDominated: {
        std::cout << "verdict: NOT_DOMINATED\n";
        std::cout << "gap: " << to_string(verdict.gap) << "\n";
        if (show_witness) {
            const WitnessEvaluation eval = evaluate_witness(*verdict.witness, a, b);
            std::cout << "witness pieces (f = max of affine pieces):\n";
            for (const auto& piece : verdict.witness->pieces)
                std::cout << "  slope " << to_string(piece.slope) << " intercept "
                          << to_string(piece.intercept) << "\n";
            std::cout << "integral against A: " << to_string(eval.int_mu) << "\n";
            std::cout << "integral against B: " << to_string(eval.int_nu) << "\n";
        }
        return kExitNotDominated;
    }
    case OrderRelation::MeanMismatch:
        std::cout << "verdict: MEAN_MISMATCH\n";
        std::cout << "barycenter A: " << to_string(barycenter(a)) << "\n";
        std::cout << "barycenter B: " << to_string(barycenter(b)) << "\n";
        return kExitMeanMismatch;
    }
    return kExitInternal;
}

int cmd_certify2d(const std::string& file_a, const std::string& file_b,
                  const std::optional<std::string>& cert_out)
{
    const DiscreteMeasure a = load_measure(file_a);
    const DiscreteMeasure b = load_measure(file_b);
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument(
            "certify2d handles dimension 2 only; project to a direction of interest and use "
            "check1d for per-direction spot checks in higher dimension");
    std::cout << "certify2d A=" << file_a << " B=" << file_b << "\n";
    const DirectionCertificate cert = certify_all_directions_2d(a, b);
    std::cout << "critical directions: " << cert.critical_directions.size() << "\n";
    std::size_t verified = 0;
    for (const auto& arc : cert.arcs)
        verified += arc.verified ? 1 : 0;
    std::cout << "arcs: " << cert.arcs.size() << " (verified " << verified << ")\n";
    if (cert_out) {
        save_certificate(cert, *cert_out);
        std::cout << "certificate written: " << *cert_out << "\n";
    } else {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    }
    if (cert.all_dominated) {
        std::cout << "verdict: ALL_DOMINATED\n";
        return kExitOk;
    }
    std::cout << "verdict: FAILS_AT\n";
    std::cout << "direction: " << to_string(*cert.failing_direction) << "\n";
    std::cout << "threshold: " << to_string(*cert.failing_threshold) << "\n";
    return kExitNotDominated;
}

int cmd_popoviciu(const std::string& r_text, const std::string& s_text,
                  const std::string& t_text)
{
    const Rational r = parse_rational(r_text);
    const Rational s = parse_rational(s_text);
    const Rational t = parse_rational(t_text);
    std::cout << "popoviciu r=" << to_string(r) << " s=" << to_string(s) << " t=" << to_string(t)
              << "\n";
    const auto [x, y] = popoviciu_majorization_vectors(r, s, t);
    const auto print_vector = [](const char* label, const std::vector<Rational>& v) {
        std::cout << label;
        for (const auto& e : v)
            std::cout << " " << to_string(e);
        std::cout << "\n";
    };
    print_vector("x:", x);
    print_vector("y:", y);
    const MajorizationVerdict verdict = majorizes(x, y);
    print_vector("descending partial sums x:", verdict.partial_sums_x);
    print_vector("descending partial sums y:", verdict.partial_sums_y);
    if (verdict.holds) {
        std::cout << "verdict: HOLDS (x majorized by y)\n";
        return kExitOk;
    }
    std::cout << "verdict: FAILS at k=" << *verdict.failing_k << "\n";
    return kExitNotDominated;
}

int cmd_paper_repro()
{
    return run_counterexample_repro(std::cout) ? kExitOk : kExitInternal;
}

int cmd_project(const std::string& file, const std::string& direction,
                const std::optional<std::string>& out_path)
{
    const DiscreteMeasure m = load_measure(file);
    const PointQ v = parse_direction(direction, m.dim());
    const DiscreteMeasure projected = project(m, v);
    if (out_path) {
        save_measure(projected, *out_path);
        std::cout << "projected measure written: " << *out_path << "\n";
    } else {
        std::cout << measure_to_json(projected).dump(2) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact convex stochastic order between finitely supported rational measures"};
    app.require_subcommand(1);

    std::string file_a, file_b, r_text, s_text, t_text, direction;
    std::optional<std::string> out_path;
    bool show_witness = false;

    auto* check1d = app.add_subcommand(
        "check1d", "Decide 1-D convex order between two measures (stop-loss check)");
    check1d->add_option("A", file_a, "measure file")->required();
    check1d->add_option("B", file_b, "measure file")->required();

    auto* checknd = app.add_subcommand(
        "checknd", "Decide d-dimensional convex order via martingale-coupling feasibility");
    checknd->add_option("A", file_a, "measure file")->required();
    checknd->add_option("B", file_b, "measure file")->required();
    checknd->add_flag("--witness", show_witness, "print the separating witness when order fails");

    auto* certify2d = app.add_subcommand(
        "certify2d", "Certify 1-D convex order of the projections for every direction in R^2");
    certify2d->add_option("A", file_a, "measure file")->required();
    certify2d->add_option("B", file_b, "measure file")->required();
    certify2d->add_option("--out", out_path, "write the certificate JSON here");

    auto* popoviciu = app.add_subcommand(
        "popoviciu", "Check the three-point convex inequality via its explicit majorization");
    popoviciu->add_option("r", r_text, "rational")->required();
    popoviciu->add_option("s", s_text, "rational")->required();
    popoviciu->add_option("t", t_text, "rational")->required();

    app.add_subcommand("paper-repro",
                       "Reproduce the bundled counterexample end to end and verify its values");

    auto* project_cmd =
        app.add_subcommand("project", "Project a measure onto a direction (pushforward by v.x)");
    project_cmd->add_option("FILE", file_a, "measure file")->required();
    project_cmd->add_option("DIRECTION", direction, "comma-separated rationals, e.g. 1,0")
        ->required();
    project_cmd->add_option("--out", out_path, "write the projected measure here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check1d->parsed())
            return cmd_check1d(file_a, file_b);
        if (checknd->parsed())
            return cmd_checknd(file_a, file_b, show_witness);
        if (certify2d->parsed())
            return cmd_certify2d(file_a, file_b, out_path);
        if (popoviciu->parsed())
            return cmd_popoviciu(r_text, s_text, t_text);
        if (project_cmd->parsed())
            return cmd_project(file_a, direction, out_path);
        return cmd_paper_repro();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
