// Copyright 2026 The qrac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qrac: command-line front end.
//
// Exit status: 0 success, 1 a hard reproduction check failed, 2 invalid
// arguments, 3 computation or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrac/bounds.hpp"
#include "qrac/codes.hpp"
#include "qrac/codes_search.hpp"
#include "qrac/qracse.hpp"
#include "qrac/report.hpp"
#include "qrac/reproduce.hpp"
#include "qrac/teleport.hpp"

namespace {

constexpr int kExitHardFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;
constexpr const char *kOutputDirEnv = "QRAC_OUTPUT_DIR";

struct Output {
    std::string format = "table";
    std::string path;
};

void emit(const Output &out, const std::string &table, const qrac::Json &json,
          const std::string &csv) {
    std::string text;
    switch (qrac::format_from_string(out.format)) {
    case qrac::OutputFormat::table:
        text = table;
        break;
    case qrac::OutputFormat::json:
        text = json.dump(2) + "\n";
        break;
    case qrac::OutputFormat::csv:
        text = csv;
        break;
    }
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out.path, std::ios::binary | std::ios::trunc);
    if (!os || !(os << text)) {
        throw qrac::IoError("cannot write " + out.path);
    }
}

qrac::EncodingTable load_table(int d, const std::string &source) {
    if (source == "builtin") {
        return qrac::builtin_table(d);
    }
    if (source == "generated") {
        return qrac::generate_single_distance(d);
    }
    std::ifstream is(source);
    if (!is) {
        throw qrac::IoError("cannot read table file " + source);
    }
    auto t = qrac::table_from_json(nlohmann::json::parse(is));
    if (t.d() != d) {
        throw std::invalid_argument("table file has d=" + std::to_string(t.d()) +
                                    ", expected " + std::to_string(d));
    }
    return t;
}

std::vector<int> parse_function(const std::string &name) {
    if (name == "majority") {
        return qrac::truth_table_majority();
    }
    if (name == "parity") {
        return qrac::truth_table_parity();
    }
    if (name == "const0") {
        return qrac::truth_table_constant(0);
    }
    if (name == "const1") {
        return qrac::truth_table_constant(1);
    }
    // Eight 0/1 characters, entry for input 000 first.
    std::vector<int> t;
    for (char c : name) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("function must be majority, parity, const0, const1 or "
                                        "an 8-character 0/1 truth table");
        }
        t.push_back(c - '0');
    }
    return t;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulation and bound computation for entanglement-assisted random access codes"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "Write the report to this file instead of stdout");

    // teleport
    int tp_d = 2;
    int tp_k = 4;
    auto *tp = app.add_subcommand("teleport", "Teleportation with k measurement outcomes");
    tp->add_option("--d", tp_d, "Qudit dimension")->check(CLI::Range(2, 8))->capture_default_str();
    tp->add_option("--k", tp_k, "Number of outcomes, 1..d^2")->required();

    // qracse
    int qs_d = 2;
    std::string qs_variant = "two_strings";
    std::string qs_table = "builtin";
    std::string qs_accounting = "pair_level";
    std::string qs_function = "majority";
    auto *qs = app.add_subcommand("qracse", "Two-strings code and its four-bit variants");
    qs->add_option("--d", qs_d, "Qudit dimension")->check(CLI::Range(2, 8))->capture_default_str();
    qs->add_option("--variant", qs_variant, "two_strings | pairs | single | f")
        ->check(CLI::IsMember({"two_strings", "pairs", "single", "f"}))
        ->capture_default_str();
    qs->add_option("--table", qs_table, "builtin | generated | path to a JSON table")
        ->capture_default_str();
    qs->add_option("--accounting", qs_accounting, "pair_level | marginal (four-bit variants)")
        ->check(CLI::IsMember({"pair_level", "marginal"}))
        ->capture_default_str();
    qs->add_option("--function", qs_function,
                   "majority | parity | const0 | const1 | 8-char truth table (variant f)")
        ->capture_default_str();

    // search
    int se_d = 3;
    std::string se_objective = "p_min";
    std::size_t se_budget = 500;
    std::uint64_t se_seed = 1;
    std::size_t se_restarts = 8;
    auto *se = app.add_subcommand("search", "Search single-distance tables");
    se->add_option("--d", se_d, "Qudit dimension")->check(CLI::Range(2, 5))->capture_default_str();
    se->add_option("--objective", se_objective, "p_min | p_avg")
        ->check(CLI::IsMember({"p_min", "p_avg"}))
        ->capture_default_str();
    se->add_option("--budget", se_budget, "Proposals per restart")->capture_default_str();
    se->add_option("--seed", se_seed, "Random seed")->capture_default_str();
    se->add_option("--restarts", se_restarts, "Independent restarts")->capture_default_str();

    // bounds
    auto *bd = app.add_subcommand("bounds", "Monogamy upper bounds");
    bd->require_subcommand(1);
    int b_d = 2;
    int b_n = 2;
    int b_n1 = 1;
    int b_n2 = 2;
    int b_restarts = 64;
    std::uint64_t b_seed = 0;
    std::vector<double> b_p;
    std::vector<double> b_F;
    auto *b_sym = bd->add_subcommand("symmetric", "(N+d-1)/(dN)");
    b_sym->add_option("--d", b_d)->check(CLI::Range(2, 64))->capture_default_str();
    b_sym->add_option("--N", b_n)->check(CLI::Range(1, 1000))->capture_default_str();
    auto *b_asym = bd->add_subcommand("asym", "Asymmetric optimization");
    b_asym->add_option("--d", b_d)->check(CLI::Range(2, 64))->capture_default_str();
    b_asym->add_option("--p", b_p, "Request probabilities")->required()->expected(2, 8);
    b_asym->add_option("--restarts", b_restarts)->check(CLI::Range(1, 100000))
        ->capture_default_str();
    b_asym->add_option("--seed", b_seed)->capture_default_str();
    auto *b_werner = bd->add_subcommand("werner", "Optimal N1 -> N2 cloning fidelity");
    b_werner->add_option("--n1", b_n1)->capture_default_str();
    b_werner->add_option("--n2", b_n2)->capture_default_str();
    b_werner->add_option("--d", b_d)->check(CLI::Range(2, 64))->capture_default_str();
    auto *b_kay = bd->add_subcommand("kay", "Residual of the fidelity constraint");
    b_kay->add_option("--d", b_d)->check(CLI::Range(2, 64))->capture_default_str();
    b_kay->add_option("--F", b_F, "Entanglement fidelities")->required()->expected(1, 64);

    // reproduce
    std::uint64_t rp_seed = 20240607;
    std::string rp_out;
    auto *rp = app.add_subcommand("reproduce", "Reproduce every table and bound");
    rp->add_option("--seed", rp_seed, "Random seed")->capture_default_str();
    rp->add_option("--out", rp_out,
                   std::string("Output directory (default: $") + kOutputDirEnv +
                       " or ./qrac_out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*tp) {
            const auto r = qrac::constrained_teleport_fidelity(tp_d, tp_k);
            emit(out, qrac::to_table(r), qrac::to_json(r), qrac::to_csv(r));
        } else if (*qs) {
            const auto acc = qs_accounting == "pair_level" ? qrac::Accounting::pair_level
                                                           : qrac::Accounting::marginal;
            if (qs_variant == "two_strings") {
                qrac::ComparisonRow row{
                    qrac::ProtocolEvaluator(qs_d).evaluate(load_table(qs_d, qs_table)),
                    qrac::trivial_strategy(qs_d, qrac::Variant::two_strings)};
                emit(out, qrac::to_table(row), qrac::to_json(row), qrac::to_csv(row));
            } else if (qs_variant == "f") {
                const auto r = qrac::f_qracse(qs_d, parse_function(qs_function), acc);
                emit(out, qrac::to_table(r), qrac::to_json(r), qrac::to_csv(r));
            } else {
                qrac::QracTask task;
                task.d = qs_d;
                task.table = load_table(qs_d, qs_table);
                task.variant = qrac::variant_from_string(qs_variant);
                task.accounting = acc;
                qrac::ComparisonRow row{qrac::run_protocol(task),
                                        qrac::trivial_strategy(qs_d, task.variant)};
                emit(out, qrac::to_table(row), qrac::to_json(row), qrac::to_csv(row));
            }
        } else if (*se) {
            const auto r = qrac::search_tables(se_d, qrac::objective_from_string(se_objective),
                                               se_budget, se_seed, se_restarts);
            qrac::Json j{{"kind", "search"},        {"d", se_d},
                         {"objective", se_objective}, {"score", r.score},
                         {"p_avg", r.p_avg},          {"p_min", r.p_min},
                         {"evaluations", r.evaluations}, {"table", qrac::table_json(r.table)}};
            std::string table = "search d=" + std::to_string(se_d) + " objective=" +
                                se_objective + "\n  score = " + qrac::fixed6(r.score) +
                                "\n  P_avg = " + qrac::fixed6(r.p_avg) +
                                "\n  P_min = " + qrac::fixed6(r.p_min) + "\n  table =";
            for (const auto &p : r.table.entries()) {
                table += " {" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
            }
            table += "\n";
            std::string csv = "e,a0,a1\n";
            for (std::size_t e = 0; e < r.table.size(); ++e) {
                csv += std::to_string(e) + "," + std::to_string(r.table[e].first) + "," +
                       std::to_string(r.table[e].second) + "\n";
            }
            emit(out, table, j, csv);
        } else if (*bd) {
            std::vector<qrac::BoundResult> bs;
            if (*b_sym) {
                bs.push_back(qrac::exact_bound("symmetric_bound(d=" + std::to_string(b_d) +
                                                   ",N=" + std::to_string(b_n) + ")",
                                               qrac::symmetric_bound(b_d, b_n)));
            } else if (*b_asym) {
                const qrac::AsymSpec spec(b_d, b_p);
                auto opt = qrac::asym_optimize(spec, b_restarts, b_seed);
                opt.label = "asym_optimize";
                bs.push_back(opt);
                if (spec.n() == 2) {
                    bs.push_back(qrac::BoundResult{"asym_closed_form_n2", "closed_form",
                                                   qrac::asym_closed_form_n2(b_p[0], b_d),
                                                   std::nullopt,
                                                   {}});
                }
            } else if (*b_werner) {
                bs.push_back(qrac::exact_bound(
                    "werner_fidelity(n1=" + std::to_string(b_n1) + ",n2=" +
                        std::to_string(b_n2) + ",d=" + std::to_string(b_d) + ")",
                    qrac::werner_fidelity(qrac::CloningParams(b_n1, b_n2, b_d))));
            } else if (*b_kay) {
                bs.push_back(qrac::BoundResult{"kay_constraint_residual", "closed_form",
                                               qrac::kay_constraint_residual(b_F, b_d),
                                               std::nullopt,
                                               {}});
            }
            qrac::Json arr = qrac::Json::array();
            for (const auto &b : bs) {
                arr.push_back(qrac::to_json(b));
            }
            emit(out, qrac::to_table(bs), qrac::Json{{"bounds", arr}}, qrac::to_csv(bs));
        } else if (*rp) {
            std::string dir = rp_out;
            if (dir.empty()) {
                const char *env = std::getenv(kOutputDirEnv);
                dir = env != nullptr && *env != '\0' ? env : "qrac_out";
            }
            const auto rep = qrac::reproduce_all(rp_seed);
            qrac::write_reproduction(rep, dir);
            emit(out, qrac::summary_table(rep), qrac::summary_json(rep), qrac::summary_csv(rep));
            return rep.hard_passed() ? 0 : kExitHardFailure;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qrac::InvalidDimension &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
