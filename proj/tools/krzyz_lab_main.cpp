#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krzyz/covering.hpp"
#include "krzyz/extremal.hpp"
#include "krzyz/hsz.hpp"
#include "krzyz/json_io.hpp"

namespace {

using krzyz::ordered_json;

void emit(const std::string& out, const std::string& contents) {
    if (out.empty())
        std::cout << contents;
    else
        krzyz::write_atomic(out, contents);
}

int cmd_kappa(double rho, int order, const std::string& out) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    krzyz::CoveringMap cm = krzyz::kappa_rho(rho, order);
    ordered_json j;
    j["rho"] = rho;
    j["order"] = order;
    j["deriv0"] = cm.deriv0;
    j["series"] = krzyz::series_to_json(cm.series);
    emit(out, krzyz::dump_json(j));
    return 0;
}

struct VerifyArgs {
    int n = 1;
    std::string family = "herglotz";
    int atoms = -1;  // n + 1 when left unset
    int degree = 3;
    double rho = 0.0;
    int starts = 64;
    int budget = 20000;
    unsigned long long seed = 7;
    int order = 64;
    std::string config_path;
    std::string out;
    std::string trace;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.n < 1) throw std::invalid_argument("n must be >= 1");
    krzyz::CampaignConfig base;
    base.n = a.n;
    base.family = a.family == "subordination" ? krzyz::Family::subordination
                                              : krzyz::Family::herglotz;
    if (a.family != "herglotz" && a.family != "subordination")
        throw std::invalid_argument("family must be herglotz or subordination");
    base.atoms = a.atoms >= 0 ? a.atoms : a.n + 1;
    base.degree = a.degree;
    base.rho = a.rho;
    base.starts = a.starts;
    base.budget = a.budget;
    base.seed = a.seed;
    base.order = a.order;
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path);
        if (!in) throw std::invalid_argument("cannot read config file " + a.config_path);
        ordered_json j = ordered_json::parse(in);
        base = krzyz::config_from_json(j, base);
    }

    krzyz::CampaignConfig cn_cfg = base;
    cn_cfg.functional = krzyz::Functional::cn;
    krzyz::CampaignConfig in_cfg = base;
    in_cfg.functional = krzyz::Functional::in;

    krzyz::OptimizationReport cn_rep = krzyz::maximize(cn_cfg);
    krzyz::OptimizationReport in_rep = krzyz::maximize(in_cfg);

    const bool exceeded =
        cn_rep.best_value > krzyz::kTwoOverE + cn_rep.tau ||
        in_rep.best_value > krzyz::kTwoOverE + in_rep.tau ||
        cn_rep.max_cn_observed > krzyz::kTwoOverE + cn_rep.tau ||
        in_rep.max_cn_observed > krzyz::kTwoOverE + in_rep.tau;

    ordered_json j;
    j["n"] = base.n;
    j["bound"] = krzyz::kTwoOverE;
    j["exceeded"] = exceeded;
    j["cn"] = krzyz::report_to_json(cn_rep);
    j["in"] = krzyz::report_to_json(in_rep);
    emit(a.out, krzyz::dump_json(j));

    if (!a.trace.empty()) {
        std::string csv = "functional,start,eval,value\n";
        char line[96];
        for (const auto& ev : cn_rep.trace) {
            std::snprintf(line, sizeof line, "cn,%d,%d,%.17g\n", ev.start, ev.eval, ev.value);
            csv += line;
        }
        for (const auto& ev : in_rep.trace) {
            std::snprintf(line, sizeof line, "in,%d,%d,%.17g\n", ev.start, ev.eval, ev.value);
            csv += line;
        }
        krzyz::write_atomic(a.trace, csv);
    }
    return exceeded ? 3 : 0;
}

int cmd_sweep_rho(const std::vector<double>& radii, const std::string& out) {
    if (radii.empty()) throw std::invalid_argument("at least one --rho value required");
    std::string csv = "rho,alpha\n";
    char line[64];
    for (double rho : radii) {
        if (!(rho > 0.0) || rho >= 1.0)
            throw krzyz::InvalidModulus(rho);
        const double a = krzyz::alpha(krzyz::AnnulusSpec(rho));
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", rho, a);
        csv += line;
    }
    emit(out, csv);
    return 0;
}

int cmd_hsz(double p, int n, int order, const std::string& out) {
    krzyz::HpSpec spec(p, n);
    if (order == 0) order = 2048 * n;
    if (order < n) throw std::invalid_argument("order must be >= n");
    krzyz::HszBound b = krzyz::hsz_bound_check(spec);
    krzyz::TruncatedSeries cand = krzyz::hsz_candidate(spec, order);
    ordered_json j;
    j["p"] = p;
    j["n"] = n;
    j["order"] = order;
    j["coeff"] = b.coeff;
    j["bound"] = b.bound;
    j["slack"] = b.slack;
    j["hp_norm"] = krzyz::hp_norm(cand, p);
    emit(out, krzyz::dump_json(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficient-bound verification toolkit for nonvanishing bounded functions"};
    app.require_subcommand(1);

    double k_rho = 0.0;
    int k_order = 64;
    std::string k_out;
    auto* kappa = app.add_subcommand("kappa", "series of the disk-to-ring covering map");
    kappa->add_option("--rho", k_rho, "inner radius in [0, 1); 0 is the punctured disk");
    kappa->add_option("--order", k_order, "truncation order");
    kappa->add_option("--out", k_out, "output JSON path (stdout when omitted)");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "coefficient maximization campaign");
    verify->add_option("--n", v.n, "target coefficient index")->required();
    verify->add_option("--family", v.family, "herglotz or subordination");
    verify->add_option("--atoms", v.atoms, "Herglotz atom count (default n+1)");
    verify->add_option("--degree", v.degree, "subordination self-map degree");
    verify->add_option("--rho", v.rho, "subordination ring modulus");
    verify->add_option("--starts", v.starts, "independent optimizer starts");
    verify->add_option("--budget", v.budget, "objective evaluations per start");
    verify->add_option("--seed", v.seed, "campaign seed");
    verify->add_option("--order", v.order, "reporting truncation order");
    verify->add_option("--config", v.config_path, "JSON config overriding the flags");
    verify->add_option("--out", v.out, "report JSON path (stdout when omitted)");
    verify->add_option("--trace", v.trace, "improvement-event CSV path");

    std::vector<double> s_radii;
    std::string s_out;
    auto* sweep = app.add_subcommand("sweep-rho", "maximal derivative across ring moduli");
    sweep->add_option("--rho", s_radii, "ring moduli in (0, 1)")->expected(-1);
    sweep->add_option("--out", s_out, "CSV path (stdout when omitted)");

    double h_p = 2.0;
    int h_n = 1;
    int h_order = 0;
    std::string h_out;
    auto* hsz = app.add_subcommand("hsz", "p-mean coefficient bound candidate");
    hsz->add_option("--p", h_p, "integral-mean exponent, > 1")->required();
    hsz->add_option("--n", h_n, "target coefficient index");
    hsz->add_option("--order", h_order, "candidate order (default 2048*n)");
    hsz->add_option("--out", h_out, "output JSON path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kappa->parsed()) return cmd_kappa(k_rho, k_order, k_out);
        if (verify->parsed()) return cmd_verify(v);
        if (sweep->parsed()) return cmd_sweep_rho(s_radii, s_out);
        if (hsz->parsed()) return cmd_hsz(h_p, h_n, h_order, h_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
