#include <ratrec/ratrec.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ratrec::invalid_input("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ratrec::invalid_input("cannot open output file: " + path);
    out << contents;
}

std::optional<ratrec::Index> order_option(int value)
{
    if (value < 0)
        return std::nullopt;
    return static_cast<ratrec::Index>(value);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational function recovery via split Hankel pencils"};
    app.require_subcommand(1);

    std::string function_path, data_path, out_path;
    ratrec::Index n = 0, l = 0;
    int m1 = -1, m2 = -1;
    bool want_samples = false, want_coeffs = false;
    ratrec::NoiseSpec noise;
    std::string target = "coeffs";

    auto* generate = app.add_subcommand("generate", "Coefficient window or unit-circle samples "
                                                    "of a rational function");
    generate->add_option("--function", function_path, "rational function JSON")->required();
    generate->add_option("--n", n, "window half order N")->required();
    auto* flag_samples = generate->add_flag("--samples", want_samples, "emit 4N circle samples");
    generate->add_flag("--coeffs", want_coeffs, "emit the coefficient window (default)")
        ->excludes(flag_samples);
    generate->add_option("--out", out_path, "output JSON path")->required();

    auto* recover_cmd = app.add_subcommand("recover", "Recover poles and residues from a window "
                                                      "or sample file");
    recover_cmd->add_option("--data", data_path, "window or samples JSON")->required();
    recover_cmd->add_option("--l", l, "pencil window length L")->required();
    recover_cmd->add_option("--m1", m1, "inside pole count (omit to auto-detect)");
    recover_cmd->add_option("--m2", m2, "outside pole count (omit to auto-detect)");
    recover_cmd->add_option("--out", out_path, "output JSON path")->required();

    auto* sens = app.add_subcommand("sensitivity", "Per-pole sensitivity report");
    sens->add_option("--function", function_path, "rational function JSON")->required();
    sens->add_option("--out", out_path, "output JSON path")->required();

    auto* experiment = app.add_subcommand("experiment", "Seeded Monte-Carlo noise experiment");
    experiment->add_option("--function", function_path, "rational function JSON")->required();
    experiment->add_option("--n", n, "window half order N")->required();
    experiment->add_option("--l", l, "pencil window length L")->required();
    experiment->add_option("--sigma", noise.sigma, "noise level")->required();
    experiment->add_option("--trials", noise.trials, "trial count (default 10)");
    experiment->add_option("--seed", noise.seed, "64-bit generator seed")->required();
    experiment->add_option("--target", target, "noise target: coeffs|samples");
    experiment->add_option("--out", out_path, "output CSV path")->required();

    auto* compare = app.add_subcommand("compare-aaa", "Paired Hankel-pencil vs AAA experiment "
                                                      "on noisy circle samples");
    compare->add_option("--function", function_path, "rational function JSON")->required();
    compare->add_option("--n", n, "window half order N")->required();
    compare->add_option("--l", l, "pencil window length L")->required();
    compare->add_option("--sigma", noise.sigma, "noise level")->required();
    compare->add_option("--trials", noise.trials, "trial count (default 10)");
    compare->add_option("--seed", noise.seed, "64-bit generator seed")->required();
    compare->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) {
            const auto r = ratrec::load_rational(read_file(function_path));
            if (want_samples)
                write_file(out_path, ratrec::save_samples(ratrec::unit_circle_samples(r, n)));
            else
                write_file(out_path, ratrec::save_window(ratrec::fourier_closed_form(r, n)));
        } else if (recover_cmd->parsed()) {
            const std::string text = read_file(data_path);
            const ratrec::FourierWindow<double> fw =
                ratrec::looks_like_window(text)
                    ? ratrec::load_window(text)
                    : ratrec::fourier_from_samples(ratrec::load_samples(text));
            const auto r = ratrec::recover(fw, l, order_option(m1), order_option(m2));
            write_file(out_path, ratrec::save_rational(r));
        } else if (sens->parsed()) {
            const auto r = ratrec::load_rational(read_file(function_path));
            write_file(out_path, ratrec::save_sensitivity(ratrec::rational_sensitivity_report(r)));
        } else if (experiment->parsed()) {
            if (target == "coeffs")
                noise.target = ratrec::NoiseTarget::coefficients;
            else if (target == "samples")
                noise.target = ratrec::NoiseTarget::samples;
            else
                throw ratrec::invalid_input("--target must be coeffs or samples");
            const auto r = ratrec::load_rational(read_file(function_path));
            const auto report = ratrec::run_experiment(r, n, l, noise);
            std::ostringstream csv;
            ratrec::write_csv(report, csv);
            write_file(out_path, csv.str());
        } else if (compare->parsed()) {
            const auto r = ratrec::load_rational(read_file(function_path));
            const auto cmp = ratrec::compare_aaa(r, n, l, noise);
            std::ostringstream csv;
            ratrec::write_csv(cmp, csv);
            write_file(out_path, csv.str());
        }
    } catch (const ratrec::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ratrec::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
