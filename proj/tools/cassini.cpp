// cassini: verification harness and figure emitter for the scale-invariant
// Cassinian metric library.
//
//   cassini verify   [--suite S]... [--seed N] [--samples N] [--dim {2,3}] [--out DIR]
//   cassini ball     --r R [--n N] [--format csv|svg] [--out FILE]
//   cassini figure1  [--out FILE]
//   cassini sharpness --theorem ID --endpoint {zero,one} [--tmin X] [--out FILE]
//
// Radii accept plain numbers or "log<v>" tokens (natural log), e.g. log3.
// The environment variable CASSINI_SEED overrides --seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cassinian/ball.hpp"
#include "cassinian/curve_io.hpp"
#include "cassinian/harness.hpp"
#include "cassinian/reports.hpp"
#include "cassinian/sharpness.hpp"

namespace {

double parse_radius(const std::string& token) {
    if (token.rfind("log", 0) == 0) {
        const std::string arg = token.substr(3);
        std::size_t pos = 0;
        const double v = std::stod(arg, &pos);
        if (pos != arg.size() || !(v > 1.0))
            throw cassinian::ConfigError("bad radius token: " + token);
        return std::log(v);
    }
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw cassinian::ConfigError("bad radius: " + token);
    return v;
}

/// Writes to the named file, or stdout for "-".
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw cassinian::IOError("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        if (file_.is_open() && !file_) throw cassinian::IOError("write failure");
    }

private:
    std::ofstream file_;
};

int cmd_verify(const std::vector<std::string>& suite_names, cassinian::RunConfig cfg) {
    std::vector<cassinian::Suite> suites;
    if (suite_names.empty())
        suites.assign(cassinian::all_suites().begin(), cassinian::all_suites().end());
    else
        for (const std::string& s : suite_names) suites.push_back(cassinian::suite_from_name(s));

    const auto sums = cassinian::run_verify(cfg, suites, std::cout);
    std::size_t failures = 0;
    for (const auto& s : sums) failures += s.failures;
    std::cout << (failures == 0 ? "VERIFY OK" : "VERIFY FAILED") << " (" << failures
              << " failures)\n";
    return failures == 0 ? 0 : 1;
}

int cmd_ball(const std::string& rtoken, std::size_t n, const std::string& format,
             const std::string& out) {
    const double r = parse_radius(rtoken);
    const cassinian::BallSpec spec{cassinian::Point{1.0, 0.0}, cassinian::Point{0.0, 0.0}, r};
    const cassinian::BoundaryCurve curve = cassinian::boundary_curve(spec, n);
    OutputTarget target(out);
    if (format == "csv")
        cassinian::write_boundary_csv(curve, target.stream());
    else if (format == "svg")
        target.stream() << cassinian::svg_boundary(curve, "r = " + rtoken);
    else
        throw cassinian::ConfigError("format must be csv or svg");
    target.finish();
    return 0;
}

int cmd_figure1(const std::string& out, std::size_t n) {
    const std::vector<std::string> tokens = {"log3", "log5", "log7", "log8.8"};
    std::vector<cassinian::BoundaryCurve> curves;
    std::vector<std::string> labels;
    for (const std::string& tok : tokens) {
        const cassinian::BallSpec spec{cassinian::Point{1.0, 0.0}, cassinian::Point{0.0, 0.0},
                                       parse_radius(tok)};
        curves.push_back(cassinian::boundary_curve(spec, n));
        labels.push_back("r = " + tok.substr(0, 3) + " " + tok.substr(3));
    }
    OutputTarget target(out);
    target.stream() << cassinian::svg_boundaries(curves, labels);
    target.finish();
    return 0;
}

int cmd_sharpness(const std::string& theorem, const std::string& endpoint, double tmin,
                  const std::string& out) {
    const cassinian::TheoremId id = cassinian::theorem_from_name(theorem);
    cassinian::Endpoint ep;
    if (endpoint == "zero")
        ep = cassinian::Endpoint::ToZero;
    else if (endpoint == "one")
        ep = cassinian::Endpoint::ToOne;
    else
        throw cassinian::ConfigError("endpoint must be zero or one");

    const cassinian::SharpnessScan scan = cassinian::sharpness_scan(id, ep, tmin);
    OutputTarget target(out);
    std::ostream& os = target.stream();
    os << "t,ratio\n";
    for (std::size_t i = 0; i < scan.t_values.size(); ++i)
        os << cassinian::g17(scan.t_values[i]) << ',' << cassinian::g17(scan.ratios[i]) << '\n';
    os << "extrapolated_limit," << cassinian::g17(scan.extrapolated_limit) << '\n';
    os << "claimed_limit," << cassinian::g17(scan.claimed_limit) << '\n';
    target.finish();

    const double err = std::abs(scan.extrapolated_limit - scan.claimed_limit);
    std::cerr << "sharpness " << theorem << " toward " << endpoint << ": extrapolated "
              << scan.extrapolated_limit << ", claimed " << scan.claimed_limit << ", err " << err
              << "\n";
    return err < 1e-3 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scale-invariant Cassinian metric verification harness"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suite_names;
    cassinian::RunConfig cfg;
    verify->add_option("--suite", suite_names,
                       "suites: metrics theorems density inclusion convexity distortion");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--samples", cfg.samples, "samples per theorem/kind");
    verify->add_option("--dim", cfg.dimension, "primary ambient dimension")
        ->check(CLI::IsMember({2, 3}));
    verify->add_option("--out", cfg.output_dir, "report directory");

    // ball
    auto* ball = app.add_subcommand("ball", "emit one tau-ball boundary");
    std::string rtoken;
    std::size_t nsamples = 512;
    std::string format = "csv";
    std::string ball_out = "-";
    ball->add_option("--r", rtoken, "metric radius (number or logV token)")->required();
    ball->add_option("--n", nsamples, "boundary samples");
    ball->add_option("--format", format, "csv or svg");
    ball->add_option("--out", ball_out, "output file, - for stdout");

    // figure1
    auto* fig = app.add_subcommand("figure1", "emit the four-ball gallery SVG");
    std::string fig_out = "figure1.svg";
    std::size_t fig_n = 1024;
    fig->add_option("--out", fig_out, "output file");
    fig->add_option("--n", fig_n, "boundary samples per ball");

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "scan one sharpness family");
    std::string theorem, endpoint = "zero", sharp_out = "-";
    double tmin = 1e-6;
    sharp->add_option("--theorem", theorem, "theorem id, e.g. T_tau_u")->required();
    sharp->add_option("--endpoint", endpoint, "zero or one");
    sharp->add_option("--tmin", tmin, "smallest parameter distance to the endpoint");
    sharp->add_option("--out", sharp_out, "output file, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (const char* env_seed = std::getenv("CASSINI_SEED"))
            cfg.seed = std::strtoull(env_seed, nullptr, 10);

        if (verify->parsed()) return cmd_verify(suite_names, cfg);
        if (ball->parsed()) return cmd_ball(rtoken, nsamples, format, ball_out);
        if (fig->parsed()) return cmd_figure1(fig_out, fig_n);
        if (sharp->parsed()) return cmd_sharpness(theorem, endpoint, tmin, sharp_out);
    } catch (const cassinian::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const cassinian::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
