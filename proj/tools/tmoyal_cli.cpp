#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twistedmoyal/report.hpp"

namespace {

std::complex<double> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Moyal oscillator engine"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a conformance suite");
    std::string suite;
    tmoyal::SuiteConfig cfg;
    std::string omega_str = "0,0";
    std::string format = "text";
    std::string out_path;
    verify->add_option("--suite", suite, "suite name (or 'all')")->required();
    verify->add_option("--max-level", cfg.max_level, "highest ladder level audited");
    verify->add_option("--seed", cfg.seed, "seed for randomized property cases");
    verify->add_option("--theta", cfg.theta, "numeric theta for the numeric suite");
    verify->add_option("--omega", omega_str, "numeric omega as RE,IM");
    verify->add_option("--nodes", cfg.nodes, "quadrature nodes per axis");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "also write the JSON report to this file");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "print a spectrum table");
    std::string side_str = "right";
    int max_level = 8;
    bool omega_zero = false;
    std::string sformat = "text";
    spectrum->add_option("--side", side_str, "right or left")
        ->check(CLI::IsMember({"right", "left"}));
    spectrum->add_option("--max-level", max_level, "highest level");
    spectrum->add_flag("--omega-zero", omega_zero, "evaluate at omega = 0");
    spectrum->add_option("--format", sformat, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // eval
    auto* evalc = app.add_subcommand("eval", "evaluate a canonical element text");
    std::string expr, at_str = "0,0", eomega = "0,0";
    double etheta = 1.0;
    evalc->add_option("--expr", expr, "canonical element text")->required();
    evalc->add_option("--at", at_str, "point x1,x2")->required();
    evalc->add_option("--theta", etheta, "numeric theta");
    evalc->add_option("--omega", eomega, "numeric omega as RE,IM");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            cfg.omega = parse_pair(omega_str);
            std::vector<std::string> names =
                suite == "all" ? tmoyal::suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            nlohmann::json all = nlohmann::json::array();
            for (const auto& name : names) {
                tmoyal::Report rep = tmoyal::run_suite(name, cfg);
                ok = ok && rep.ok();
                if (format == "json")
                    std::cout << rep.to_json().dump(2) << "\n";
                else
                    std::cout << rep.to_text();
                if (!out_path.empty()) all.push_back(rep.to_json());
            }
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*spectrum) {
            tmoyal::StateSide side =
                side_str == "right" ? tmoyal::StateSide::right : tmoyal::StateSide::left;
            tmoyal::SpectrumTable tab = tmoyal::spectrum_table(side, max_level, omega_zero);
            if (sformat == "json")
                std::cout << tab.to_json().dump(2) << "\n";
            else
                std::cout << tab.to_text();
            return 0;
        }
        if (*evalc) {
            tmoyal::TwistedElement f = tmoyal::parse_element(expr);
            auto comma = at_str.find(',');
            double x1 = std::stod(at_str.substr(0, comma));
            double x2 = std::stod(at_str.substr(comma + 1));
            tmoyal::NumericPoint p =
                tmoyal::NumericPoint::from_x(x1, x2, etheta, parse_pair(eomega));
            std::complex<double> v = tmoyal::eval(f, p);
            std::cout << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
