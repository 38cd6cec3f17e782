/*
   Copyright 2026 The hyperbms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hbms: detect, complete and verify incomplete syndrome tables.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "hyperbms/inference.hpp"
#include "hyperbms/oracle.hpp"
#include "hyperbms/report.hpp"

using namespace hbms;

namespace {

constexpr int kParseExit = 2;

struct CommonOptions {
    std::string modulus;
    std::optional<std::int64_t> alpha1, alpha2;
    std::string json_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

IncompleteTable load(const std::string& path, const CommonOptions& common) {
    TableOverrides ov;
    if (!common.modulus.empty()) ov.modulus = common.modulus;
    ov.alpha1_exp = common.alpha1;
    ov.alpha2_exp = common.alpha2;
    return parse_table(read_file(path), ov);
}

IndexPair parse_pair(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == '(' || c == ')' || c == ',') c = ' ';
    std::istringstream in(s);
    IndexPair n;
    if (!(in >> n.n1 >> n.n2)) throw ParseError("bad index pair '" + text + "'");
    std::string rest;
    if (in >> rest) throw ParseError("bad index pair '" + text + "'");
    return n;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--modulus", common.modulus, "Field modulus: hex bitmask (p = 2) or coefficient list");
    cmd->add_option("--alpha1-exp", common.alpha1, "alpha1 = a^k");
    cmd->add_option("--alpha2-exp", common.alpha2, "alpha2 = a^k");
    cmd->add_option("--json", common.json_path, "Write a JSON document to this path");
}

int cmd_detect(const std::string& path, const CommonOptions& common) {
    const auto table = load(path, common);
    const auto det = detect_hyperbolic(table);
    if (det.candidates.empty()) {
        std::cout << "no hyperbolic window\n";
    } else {
        std::cout << "max t = " << det.max_t() << ", " << det.candidates.size() << " candidate(s)\n";
        for (const auto& c : det.candidates) std::cout << "tau=" << c.tau.str() << " t=" << c.t << "\n";
    }
    if (!common.json_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : det.candidates) j.push_back({{"tau", {c.tau.n1, c.tau.n2}}, {"t", c.t}});
        write_file(common.json_path, j.dump(2) + "\n");
    }
    return det.candidates.empty() ? 1 : 0;
}

int cmd_complete(const std::string& path, const CommonOptions& common, const ResolveConfig& config,
                 bool print_table) {
    const auto table = load(path, common);
    const auto res = resolve(table, config);
    const auto& rep = res.report;
    std::cout << to_string(rep.status);
    if (rep.tau) std::cout << " tau=" << rep.tau->str() << " t=" << rep.t << " order=" << rep.order.value_or("-");
    std::cout << " weight=" << rep.support.size() << " branches=" << rep.branches_tried << "\n";
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    if (print_table && res.completed) std::cout << format_table(*res.completed);
    if (!common.json_path.empty()) write_file(common.json_path, report_to_json(rep) + "\n");
    return exit_code(rep.status);
}

int cmd_verify(const std::string& path, const std::string& poly, const std::string& tau_text,
               const CommonOptions& common) {
    const auto table = load(path, common);
    const auto e = parse_polynomial(*table.field, poly);
    const auto tau = parse_pair(tau_text);
    const bool ok = verify_afforded(table, e, tau, table.point);
    std::cout << (ok ? "afforded" : "not afforded") << "\n";
    return ok ? 0 : 1;
}

struct SynthOptions {
    std::uint32_t p = 2;
    std::uint32_t m = 4;
    std::vector<int> shape{5, 5};
    int t = 2;
    int weight = 0;
    std::size_t holes = 0;
    std::vector<std::string> puncture;
    bool extension_coeffs = false;
    std::uint64_t seed = 1;
    std::string out;
    std::string truth;
};

std::shared_ptr<const Field> synth_field(std::uint32_t p, std::uint32_t m, const std::string& modulus) {
    FieldSpec spec;
    spec.p = p;
    spec.extension_degree = m;
    if (!modulus.empty()) spec.modulus = gfp::parse_modulus(modulus, p);
    return Field::create(spec);
}

int cmd_synth(const SynthOptions& so, const CommonOptions& common) {
    const auto field = synth_field(so.p, so.m, common.modulus);
    const TableShape shape{so.shape.at(0), so.shape.at(1)};
    InstanceOptions opts;
    opts.t = so.t;
    if (so.weight > 0) opts.weight = so.weight;
    opts.holes = so.holes;
    opts.base_field = !so.extension_coeffs;
    for (const auto& p : so.puncture) opts.puncture.push_back(parse_pair(p));
    const auto inst = random_instance(field, shape, so.seed, opts);

    const std::string text = format_table(inst.table);
    if (so.out.empty())
        std::cout << text;
    else
        write_file(so.out, text);

    if (!so.truth.empty()) {
        nlohmann::json j;
        j["e"] = inst.e.str();
        j["tau"] = {inst.tau.n1, inst.tau.n2};
        j["window"] = {inst.window.n1, inst.window.n2};
        j["t"] = inst.t;
        j["seed"] = so.seed;
        std::vector<std::string> cells;
        for (int i = 0; i < shape.r1; ++i)
            for (int k = 0; k < shape.r2; ++k) cells.push_back(field->format(*inst.full.at({i, k})));
        j["full_table"] = cells;
        write_file(so.truth, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_sweep(std::uint32_t p, std::uint32_t m, const std::vector<int>& shape_v, int weight, int t,
              const std::vector<std::string>& coeff_text, const CommonOptions& common) {
    const auto field = synth_field(p, m, common.modulus);
    const TableShape shape{shape_v.at(0), shape_v.at(1)};
    std::vector<Element> coeffs;
    if (coeff_text.empty()) {
        for (const auto& x : field->elements())
            if (!x.is_zero()) coeffs.push_back(x);
    } else {
        for (const auto& c : coeff_text) coeffs.push_back(field->parse(c));
    }
    const auto s = exhaustive_sweep(field, shape, weight, coeffs, t);
    std::cout << "instances=" << s.instances << " completed=" << s.completed << " support_ok=" << s.support_ok
              << " table_ok=" << s.table_ok << " footprint_ok=" << s.footprint_ok << " rejected=" << s.rejected
              << "\n";
    if (weight <= t) return s.all_recovered() && s.footprint_ok == s.instances ? 0 : 1;
    return s.completed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Completion of incomplete syndrome tables with a hyperbolic BMS iteration"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string table_path;

    auto* detect = app.add_subcommand("detect", "List windows tau + B(2t+1) of known cells with the largest t");
    detect->add_option("table", table_path, "Table file")->required();
    add_common(detect, common);

    ResolveConfig config;
    std::string order_text = "auto";
    std::string tau_text;
    std::optional<int> t_opt;
    bool print_table = false;
    auto* complete = app.add_subcommand("complete", "Recover a sparse generator and fill the holes");
    complete->add_option("table", table_path, "Table file")->required();
    add_common(complete, common);
    complete->add_option("--order", order_text, "lex, graded or auto")->check(CLI::IsMember({"lex", "graded", "auto"}));
    complete->add_option("--tau", tau_text, "Force the window offset, e.g. 0,1");
    complete->add_option("--t", t_opt, "Force the window size");
    complete->add_option("--branch-budget", config.branch_budget, "Leaves per attempt (default |L|^2)");
    complete->add_flag("--print", print_table, "Print the completed table");
    complete->add_flag("!--no-punctured", config.punctured, "Only use fully known windows");

    std::string poly_text;
    auto* verify = app.add_subcommand("verify", "Check that a generator and offset reproduce every known cell");
    verify->add_option("table", table_path, "Table file")->required();
    verify->add_option("poly", poly_text, "Generator e', e.g. 'a^3*X1*X2^2 + a'")->required();
    verify->add_option("--tau", tau_text, "Offset tau")->required();
    add_common(verify, common);

    SynthOptions so;
    auto* synth = app.add_subcommand("synth", "Write a random syndrome table with holes");
    synth->add_option("--p", so.p, "Characteristic");
    synth->add_option("--m", so.m, "Extension degree");
    synth->add_option("--shape", so.shape, "r1 r2")->expected(2);
    synth->add_option("--t", so.t, "Window size t");
    synth->add_option("--weight", so.weight, "Support size (default: random in 1..t)");
    synth->add_option("--holes", so.holes, "Random holes outside the window");
    synth->add_option("--puncture", so.puncture, "Holes at window + (i,j)");
    synth->add_flag("--extension-coeffs", so.extension_coeffs, "Draw coefficients from L instead of F");
    synth->add_option("--seed", so.seed, "Random seed");
    synth->add_option("--out", so.out, "Table path (default stdout)");
    synth->add_option("--truth", so.truth, "Ground-truth JSON path");
    synth->add_option("--modulus", common.modulus, "Field modulus");

    std::uint32_t sw_p = 2, sw_m = 4;
    std::vector<int> sw_shape{5, 5};
    int sw_weight = 1, sw_t = 2;
    std::vector<std::string> sw_coeffs;
    auto* sweep = app.add_subcommand("sweep", "Run the pipeline on every support, coefficient and offset");
    sweep->add_option("--p", sw_p, "Characteristic");
    sweep->add_option("--m", sw_m, "Extension degree");
    sweep->add_option("--shape", sw_shape, "r1 r2")->expected(2);
    sweep->add_option("--weight", sw_weight, "Support size");
    sweep->add_option("--t", sw_t, "Window size t");
    sweep->add_option("--coeffs", sw_coeffs, "Coefficient set (default: all nonzero)");
    sweep->add_option("--modulus", common.modulus, "Field modulus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*detect) return cmd_detect(table_path, common);
        if (*complete) {
            config.order = parse_order_mode(order_text);
            if (!tau_text.empty()) config.tau = parse_pair(tau_text);
            config.t = t_opt;
            return cmd_complete(table_path, common, config, print_table);
        }
        if (*verify) return cmd_verify(table_path, poly_text, tau_text, common);
        if (*synth) return cmd_synth(so, common);
        if (*sweep) return cmd_sweep(sw_p, sw_m, sw_shape, sw_weight, sw_t, sw_coeffs, common);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseExit;
    } catch (const FieldError& e) {
        std::cerr << "field error: " << e.what() << "\n";
        return kParseExit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
