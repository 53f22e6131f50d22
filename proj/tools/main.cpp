#include "commands.hpp"

#include "modcm/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace modcm;
using namespace modcm::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--precision", cfg.precision, "Working precision in bits for numeric checks");
    sub->add_option("--nmax", cfg.modpoly_ceiling, "Largest modular polynomial level allowed");
    sub->add_option("--samples", cfg.samples, "Numeric containment sample count (raised to the required minimum)");
    sub->add_option("--tolerance", cfg.tolerance_bits, "Residual tolerance exponent in bits (>= 16)");
    sub->add_option("--seed", cfg.seed, "Seed for sample abscissae");
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}))
        ->each([&cfg](const std::string&) { cfg.format_given = true; });
    sub->add_option("-o,--output", cfg.output, "Write output to this file instead of stdout");
    sub->add_flag("--verify", cfg.verify, "Re-run independent validation and fail on mismatch");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Class groups, singular moduli, modular polynomials and modularity certificates"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::int64_t D = 0;
    int n = 0;
    std::string curve;

    auto* classgroup = app.add_subcommand("classgroup", "Reduced forms, class number and 2-rank of an order");
    classgroup->add_option("D", D, "Negative discriminant")->required();
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert class polynomial H_D");
    hilbert->add_option("D", D, "Negative discriminant")->required();
    auto* modpoly = app.add_subcommand("modpoly", "Classical modular polynomial Phi_n");
    modpoly->add_option("n", n, "Level")->required();
    auto* hecke = app.add_subcommand("hecke-image", "Equation of (T_n x T_n)C");
    hecke->add_option("curve", curve, "Curve file (- for stdin)")->required();
    hecke->add_option("n", n, "Level")->required();
    auto* certify = app.add_subcommand("certify", "Decide whether a curve is a modular curve Y_0(m)");
    certify->add_option("curve", curve, "Curve file (- for stdin)")->required();
    auto* cmscan = app.add_subcommand("cmscan", "CM points on a curve with |D1|, |D2| <= dmax");
    cmscan->add_option("curve", curve, "Curve file (- for stdin)")->required();
    cmscan->add_option("--dmax", cfg.dmax, "Largest |D| scanned (default 100)");
    auto* split = app.add_subcommand("split-prime", "Smallest split prime with 2 d1 d2 (p+1)^2 < h(D)");
    split->add_option("D", D, "Negative discriminant")->required();
    split->add_option("--d1", cfg.d1, "First projection degree");
    split->add_option("--d2", cfg.d2, "Second projection degree");
    auto* census = app.add_subcommand("census", "Split prime counts against Li(x)/2 for fundamental |d_K| <= dmax");
    census->add_option("--dmax", cfg.dmax, "Largest |d_K| (default 500)");
    census->add_option("--x", cfg.xs, "Thresholds (default 1000 10000 100000)")->delimiter(',');
    auto* siegel = app.add_subcommand("siegel", "log h / log sqrt|D| over fundamental discriminants");
    siegel->add_option("--dmin", cfg.dmin, "Smallest |D| (default 1000)");
    siegel->add_option("--dmax", cfg.dmax, "Largest |D| (default 100000)");
    for (auto* sub : {classgroup, hilbert, modpoly, hecke, certify, cmscan, split, census, siegel})
        add_common(sub, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        cfg.validate();
        std::ostringstream buf;
        int code = kSuccess;
        if (*classgroup)
            code = cmd_classgroup(D, cfg, buf);
        else if (*hilbert)
            code = cmd_hilbert(D, cfg, buf);
        else if (*modpoly)
            code = cmd_modpoly(n, cfg, buf);
        else if (*hecke)
            code = cmd_hecke_image(curve, n, cfg, buf);
        else if (*certify)
            code = cmd_certify(curve, cfg, buf);
        else if (*cmscan)
            code = cmd_cmscan(curve, cfg, buf);
        else if (*split)
            code = cmd_split_prime(D, cfg, buf);
        else if (*census)
            code = cmd_census(cfg, buf);
        else if (*siegel)
            code = cmd_siegel(cfg, buf);
        if (cfg.output.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out)
                throw InvalidArgument("cannot write " + cfg.output);
            out << buf.str();
        }
        return code;
    } catch (const VerifyError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const CeilingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PrecisionError& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kInconclusive;
    }
}
