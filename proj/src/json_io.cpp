#include "krzyz/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace krzyz {

namespace {

ordered_json complex_to_json(cplx c) {
    return ordered_json::array({c.real(), c.imag()});
}

std::string functional_name(Functional f) {
    return f == Functional::cn ? "cn" : "in";
}

std::string family_name(Family f) {
    return f == Family::herglotz ? "herglotz" : "subordination";
}

}  // namespace

ordered_json series_to_json(const TruncatedSeries& f) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k <= f.order(); ++k) arr.push_back(complex_to_json(f.coeff(k)));
    return arr;
}

TruncatedSeries series_from_json(const ordered_json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series JSON must be a nonempty array");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("series entries must be [re, im] pairs");
        c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return TruncatedSeries{std::move(c)};
}

ordered_json config_to_json(const CampaignConfig& config) {
    ordered_json j;
    j["functional"] = functional_name(config.functional);
    j["n"] = config.n;
    j["family"] = family_name(config.family);
    j["atoms"] = config.atoms;
    j["degree"] = config.degree;
    j["rho"] = config.rho;
    j["starts"] = config.starts;
    j["budget"] = config.budget;
    j["seed"] = config.seed;
    j["order"] = config.order;
    j["certify_stride"] = config.certify_stride;
    return j;
}

CampaignConfig config_from_json(const ordered_json& j, CampaignConfig base) {
    for (const auto& [key, value] : j.items()) {
        if (key == "functional") {
            const std::string v = value.get<std::string>();
            if (v == "cn") base.functional = Functional::cn;
            else if (v == "in") base.functional = Functional::in;
            else throw std::invalid_argument("unknown functional: " + v);
        } else if (key == "n") {
            base.n = value.get<int>();
        } else if (key == "family") {
            const std::string v = value.get<std::string>();
            if (v == "herglotz") base.family = Family::herglotz;
            else if (v == "subordination") base.family = Family::subordination;
            else throw std::invalid_argument("unknown family: " + v);
        } else if (key == "atoms") {
            base.atoms = value.get<int>();
        } else if (key == "degree") {
            base.degree = value.get<int>();
        } else if (key == "rho") {
            base.rho = value.get<double>();
        } else if (key == "starts") {
            base.starts = value.get<int>();
        } else if (key == "budget") {
            base.budget = value.get<int>();
        } else if (key == "seed") {
            base.seed = value.get<unsigned long long>();
        } else if (key == "order") {
            base.order = value.get<int>();
        } else if (key == "certify_stride") {
            base.certify_stride = value.get<int>();
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return base;
}

ordered_json report_to_json(const OptimizationReport& report) {
    ordered_json j;
    j["config"] = config_to_json(report.config);
    j["best_value"] = report.best_value;
    j["gap_to_bound"] = report.gap_to_bound;
    j["tau"] = report.tau;
    if (report.config.family == Family::herglotz) {
        ordered_json atoms = ordered_json::array();
        for (const auto& a : report.best_herglotz.atoms)
            atoms.push_back(ordered_json::array({a.weight, a.angle}));
        j["best_params"] = {{"atoms", atoms}, {"beta", report.best_herglotz.beta}};
    } else {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : report.best_subordination.fhat_coeffs)
            coeffs.push_back(complex_to_json(c));
        j["best_params"] = {{"rho", report.best_subordination.rho},
                            {"fhat_coeffs", coeffs}};
    }
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : report.best_coeffs) coeffs.push_back(complex_to_json(c));
    j["best_coeffs"] = coeffs;
    j["start_values"] = report.start_values;
    j["evaluations"] = report.evaluations;
    j["certified_count"] = report.certified_count;
    j["max_cn_observed"] = report.max_cn_observed;
    j["max_c1_observed"] = report.max_c1_observed;
    j["aborted_starts"] = report.aborted_starts;
    j["budget_exhausted"] = report.budget_exhausted;
    return j;
}

std::string trace_to_csv(const OptimizationReport& report) {
    std::string out = "start,eval,value\n";
    char line[80];
    for (const auto& ev : report.trace) {
        std::snprintf(line, sizeof line, "%d,%d,%.17g\n", ev.start, ev.eval, ev.value);
        out += line;
    }
    return out;
}

std::string dump_json(const ordered_json& j) {
    return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace krzyz
