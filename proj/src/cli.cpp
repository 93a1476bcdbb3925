#include "sbc/cli.hpp"

#include "sbc/descriptor.hpp"
#include "sbc/lr.hpp"
#include "sbc/omega.hpp"
#include "sbc/oracle.hpp"
#include "sbc/partition.hpp"
#include "sbc/symbolic_set.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>

namespace sbc::cli {

namespace {

using nlohmann::json;

json set_to_json(const std::vector<Partition>& set) {
    json arr = json::array();
    for (const auto& p : set) arr.push_back(p.parts());
    return json{{"set", arr}};
}

std::string set_to_text(const std::vector<Partition>& set) {
    std::string s;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ' ';
        s += set[i].to_string();
    }
    return s;
}

// Compact name for an equivalence-class representative tree.
std::string class_label(const TreeOrbit& orbit) {
    const auto& t = orbit.canonical();
    if (t.k() == 1) return "phi_" + std::to_string(t.root_label());
    // linear towers print as X(leaf;...;root)
    std::vector<int> labels;
    LabelledTree walk = t;
    bool linear = true;
    while (walk.k() > 1) {
        if (walk.root_label() == walk.p()) { linear = false; break; }
        labels.push_back(walk.root_label());
        auto ch = walk.children();
        for (std::size_t i = 1; i < ch.size(); ++i)
            if (!(ch[i] == ch[0])) { linear = false; break; }
        if (!linear) break;
        walk = ch[0];
    }
    if (linear) {
        labels.push_back(walk.root_label());
        std::string s = "X(";
        for (std::size_t i = labels.size(); i-- > 0;) {
            s += std::to_string(labels[i]);
            if (i) s += ';';
        }
        return s + ")";
    }
    return t.to_string();
}

struct Row {
    std::vector<std::string> cells;
};

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<Row>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.cells.size(); ++i)
            width[i] = std::max(width[i], r.cells[i].size());
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i + 1 == cells.size())
                out << cells[i];
            else
                out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[i];
        }
        out << "\n";
    };
    emit(header);
    for (const auto& r : rows) emit(r.cells);
}

// 0p-equivalence classes of the admissible orbits at one level, keyed by the
// people-collapsed form, with minimal representative and class size.
struct OrbitClass {
    TreeOrbit rep;
    long long count = 0;
};

std::vector<OrbitClass> orbit_classes(int p, int k) {
    std::map<LabelledTree, OrbitClass> by_collapsed;
    for (const auto& orbit : enumerate_irr(p, k)) {
        LabelledTree key = orbit.canonical().people_collapsed();
        auto it = by_collapsed.find(key);
        if (it == by_collapsed.end())
            by_collapsed.emplace(key, OrbitClass{orbit, 1});
        else {
            ++it->second.count;
            if (orbit < it->second.rep) it->second.rep = orbit;
        }
    }
    std::vector<OrbitClass> out;
    for (auto& [key, cls] : by_collapsed) out.push_back(cls);
    std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
        auto sa = a.rep.stats(), sb = b.rep.stats();
        if (sa.degree_exponent != sb.degree_exponent) return sa.degree_exponent < sb.degree_exponent;
        if (sa.eta != sb.eta) return sa.eta < sb.eta;
        return a.rep < b.rep;
    });
    return out;
}

int cmd_tables(std::ostream& out, int which) {
    const int p = 5;
    if (which == 5 || which == 25) {
        int k = which == 5 ? 1 : 2;
        long long n = which;
        auto classes = orbit_classes(p, k);
        out << "# Irr(P_" << n << "), p = " << p
            << ": equivalence classes under people-relabelling, statistics, constituent sets\n";
        std::vector<Row> rows;
        for (const auto& cls : classes) {
            CharDescriptor theta(p, {cls.rep});
            auto st = theta.stats();
            auto shape = omega_shape(theta);
            rows.push_back({{class_label(cls.rep), std::to_string(cls.count),
                             theta.degree().to_string(), std::to_string(st.eta),
                             std::to_string(theta.gamma(0)), std::to_string(theta.gamma(1)),
                             std::to_string(theta.value()), std::to_string(n - theta.gamma(0)),
                             std::to_string(n - theta.gamma(0) - theta.gamma(1)),
                             shape.to_string()}});
        }
        print_table(out, {"class", "count", "deg", "eta", "g0", "g1", "value", "n-g0", "n-g0-g1", "omega"},
                    rows);
        return 0;
    }
    if (which == 125) {
        out << "# Linear characters of Irr(P_125), p = 5, up to people-relabelling.\n";
        out << "# Formula path only: bounds and shapes from tree statistics; the brute-force\n";
        out << "# range stops at n <= 30, so these rows are not cross-checked by it.\n";
        std::vector<CharDescriptor> reps;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 1; ++c) {
                    std::vector<int> labels{a, b, c};
                    reps.emplace_back(p, std::vector<TreeOrbit>{TreeOrbit(
                                             LabelledTree::linear(p, labels))});
                }
        std::sort(reps.begin(), reps.end(), [](const CharDescriptor& x, const CharDescriptor& y) {
            if (x.value() != y.value()) return x.value() < y.value();
            if (x.gamma(0) != y.gamma(0)) return x.gamma(0) < y.gamma(0);
            return x.gamma(1) < y.gamma(1);
        });
        std::vector<Row> rows;
        for (const auto& theta : reps) {
            auto rep = gap_report(theta);
            rows.push_back({{class_label(theta.components()[0]), std::to_string(theta.value()),
                             std::to_string(theta.gamma(0)), std::to_string(theta.gamma(1)),
                             std::to_string(theta.gamma(2)), std::to_string(theta.eta()),
                             std::to_string(little_m(theta)), std::to_string(capital_M(theta)),
                             std::to_string(rep.gamma1) + "+" + std::to_string(rep.c),
                             omega_shape(theta).to_string()}});
        }
        print_table(out, {"class", "value", "g0", "g1", "g2", "eta", "m", "M", "gap", "omega"}, rows);
        return 0;
    }
    throw CLI::ValidationError("tables", "supported tables: 5, 25, 125");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact constituent sets and branching coefficients for Sylow "
                 "p-subgroups of symmetric groups"};
    app.require_subcommand(1);

    int p = 5;
    long long n = 0;
    int k = 1;
    bool as_json = false;
    std::string theta_text, lambda_text, mu_text, nu_text, factors_text;
    std::string set_a, set_b;
    bool force_explicit = false;
    long long q = 2;
    unsigned long long seed = 12345;
    unsigned long long guard = 10'000'000;
    int threads = 0;
    int table_id = 0;

    auto* irr = app.add_subcommand("irr", "Irreducible characters of the iterated wreath product");
    auto* irr_list = irr->add_subcommand("list", "List admissible orbits with statistics");
    irr_list->add_option("-p", p, "prime / arity")->capture_default_str();
    irr_list->add_option("-k", k, "wreath level")->required();
    irr_list->add_option("--guard", guard, "orbit-count cap")->capture_default_str();
    irr_list->add_flag("--json", as_json);

    auto* om = app.add_subcommand("omega", "Constituent sets of induced characters");
    auto* om_desc = om->add_subcommand("describe", "Shape of the constituent set");
    auto* om_member = om->add_subcommand("member", "Three-valued membership query");
    auto* om_gap = om->add_subcommand("gap", "Outer/inner gap decomposition");
    auto* om_lower = om->add_subcommand("lower", "Certified subset of the intersection over all characters");
    for (auto* c : {om_desc, om_member, om_gap}) {
        c->add_option("-p", p, "prime")->capture_default_str();
        c->add_option("--theta", theta_text, "character in tree notation")->required();
        c->add_flag("--json", as_json);
    }
    om_desc->add_option("-n", n, "degree of the symmetric group (validated)");
    om_member->add_option("--lambda", lambda_text, "partition")->required();
    om_lower->add_option("-p", p, "prime")->capture_default_str();
    om_lower->add_option("-n", n, "degree of the symmetric group")->required();
    om_lower->add_flag("--json", as_json);

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lr_cmd->add_option("--lambda", lambda_text)->required();
    lr_cmd->add_option("--mu", mu_text);
    lr_cmd->add_option("--nu", nu_text);
    lr_cmd->add_option("--factors", factors_text, "semicolon-separated factor list");
    lr_cmd->add_flag("--json", as_json);

    auto* star_cmd = app.add_subcommand("star", "Star product of partition sets");
    star_cmd->add_option("--a", set_a)->required();
    star_cmd->add_option("--b", set_b)->required();
    star_cmd->add_flag("--explicit", force_explicit, "force the brute-force product");
    star_cmd->add_flag("--json", as_json);

    auto* mixed_cmd = app.add_subcommand("mixed", "Mixed-tuple star support M(q, A)");
    mixed_cmd->add_option("-q", q)->required();
    mixed_cmd->add_option("--set", set_a, "symbolic or explicit set")->required();
    mixed_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "Brute-force verification against the closed forms");
    verify_cmd->add_option("-p", p)->capture_default_str();
    verify_cmd->add_option("-n", n, "5, 25 or 30 for sweeps")->required();
    verify_cmd->add_option("--theta", theta_text, "verify a single character instead");
    verify_cmd->add_option("--seed", seed)->capture_default_str();
    verify_cmd->add_option("--threads", threads, "0 = hardware");
    verify_cmd->add_flag("--json", as_json);

    auto* tables_cmd = app.add_subcommand("tables", "Reference tables (5, 25, 125)");
    tables_cmd->add_option("id", table_id)->required();

    std::vector<const char*> argv;
    argv.push_back("sbc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (irr_list->parsed()) {
            auto orbits = enumerate_irr(p, k, guard);
            if (as_json) {
                json arr = json::array();
                for (const auto& o : orbits) {
                    auto st = o.stats();
                    arr.push_back(json{{"tree", o.to_string()},
                                       {"structure", o.canonical().to_json()},
                                       {"eta", st.eta},
                                       {"gamma0", st.gamma.empty() ? 0 : st.gamma[0]},
                                       {"gamma1", st.gamma.size() > 1 ? st.gamma[1] : 0},
                                       {"value", st.value},
                                       {"degree", BigNat::pow(static_cast<unsigned long long>(p),
                                                              static_cast<unsigned long long>(st.degree_exponent))
                                                      .to_string()}});
                }
                out << json{{"p", p}, {"k", k}, {"count", orbits.size()}, {"orbits", arr}}.dump(2)
                    << "\n";
            } else {
                out << "# admissible orbits p=" << p << " k=" << k << " count=" << orbits.size()
                    << "\n";
                std::vector<Row> rows;
                for (const auto& o : orbits) {
                    auto st = o.stats();
                    rows.push_back({{o.to_string(), std::to_string(st.eta),
                                     std::to_string(st.gamma.empty() ? 0 : st.gamma[0]),
                                     std::to_string(st.gamma.size() > 1 ? st.gamma[1] : 0),
                                     std::to_string(st.value),
                                     BigNat::pow(static_cast<unsigned long long>(p),
                                                 static_cast<unsigned long long>(st.degree_exponent))
                                         .to_string()}});
                }
                print_table(out, {"tree", "eta", "g0", "g1", "value", "deg"}, rows);
            }
            return 0;
        }
        if (om_desc->parsed()) {
            CharDescriptor theta = CharDescriptor::parse(p, theta_text);
            if (n != 0 && n != theta.n())
                throw std::invalid_argument("-n does not match the parsed character (n = " +
                                            std::to_string(theta.n()) + ")");
            auto shape = omega_shape(theta);
            auto rep = gap_report(theta);
            const char* claim =
                boundary_multiplicity_claim(theta) == BoundaryMultiplicity::One ? "1" : ">=2";
            if (as_json) {
                out << json{{"p", p},
                            {"n", theta.n()},
                            {"theta", theta.to_string()},
                            {"eta", theta.eta()},
                            {"gamma0", theta.gamma(0)},
                            {"gamma1", theta.gamma(1)},
                            {"value", theta.value()},
                            {"degree", theta.degree().to_string()},
                            {"m", little_m(theta)},
                            {"M", capital_M(theta)},
                            {"gap", json{{"gap", rep.gap}, {"gamma1", rep.gamma1}, {"c", rep.c}}},
                            {"boundary_multiplicity", claim},
                            {"shape", shape.to_json()}}
                           .dump(2)
                    << "\n";
            } else {
                out << "theta = " << theta.to_string() << "  (n = " << theta.n() << ", p = " << p
                    << ")\n";
                out << "degree " << theta.degree().to_string() << ", eta " << theta.eta()
                    << ", gamma0 " << theta.gamma(0) << ", gamma1 " << theta.gamma(1) << ", value "
                    << theta.value() << "\n";
                out << "m = " << little_m(theta) << ", M = " << capital_M(theta) << "\n";
                out << "Omega: " << shape.to_string() << "\n";
            }
            return 0;
        }
        if (om_member->parsed()) {
            CharDescriptor theta = CharDescriptor::parse(p, theta_text);
            Partition lambda = Partition::parse(lambda_text);
            Membership m = omega_member(theta, lambda);
            if (as_json)
                out << json{{"theta", theta.to_string()},
                            {"lambda", lambda.parts()},
                            {"membership", to_string(m)}}
                           .dump(2)
                    << "\n";
            else
                out << to_string(m) << "\n";
            return 0;
        }
        if (om_gap->parsed()) {
            CharDescriptor theta = CharDescriptor::parse(p, theta_text);
            auto rep = gap_report(theta);
            if (as_json)
                out << json{{"theta", theta.to_string()},
                            {"gap", rep.gap},
                            {"gamma1", rep.gamma1},
                            {"c", rep.c}}
                           .dump(2)
                    << "\n";
            else
                out << "M - m = " << rep.gap << " = gamma1 (" << rep.gamma1 << ") + c (" << rep.c
                    << ")\n";
            return 0;
        }
        if (om_lower->parsed()) {
            auto box = omega_intersection_lower(p, n);
            if (as_json)
                out << box.to_json().dump(2) << "\n";
            else
                out << box.to_string() << "\n";
            return 0;
        }
        if (lr_cmd->parsed()) {
            Partition lambda = Partition::parse(lambda_text);
            long long coeff = 0;
            if (!factors_text.empty()) {
                std::vector<Partition> factors;
                std::size_t start = 0;
                for (std::size_t i = 0; i <= factors_text.size(); ++i)
                    if (i == factors_text.size() || factors_text[i] == ';') {
                        factors.push_back(Partition::parse(
                            std::string_view(factors_text).substr(start, i - start)));
                        start = i + 1;
                    }
                coeff = lr_multi(lambda, factors);
            } else {
                if (mu_text.empty() || nu_text.empty())
                    throw std::invalid_argument("lr needs either --mu and --nu, or --factors");
                coeff = lr_coeff(lambda, Partition::parse(mu_text), Partition::parse(nu_text));
            }
            if (as_json)
                out << json{{"coefficient", coeff}}.dump() << "\n";
            else
                out << coeff << "\n";
            return 0;
        }
        if (star_cmd->parsed()) {
            auto a = SymbolicPartitionSet::parse(set_a);
            auto b = SymbolicPartitionSet::parse(set_b);
            if (!force_explicit) {
                try {
                    auto result = star_symbolic(a, b);
                    if (as_json)
                        out << result.to_json().dump() << "\n";
                    else
                        out << result.to_string() << "\n";
                    return 0;
                } catch (const StarHypothesisError& e) {
                    err << "note: " << e.what() << "\n";
                }
            }
            auto result = star_explicit(a.materialize(), b.materialize());
            if (as_json)
                out << set_to_json(result).dump() << "\n";
            else
                out << set_to_text(result) << "\n";
            return 0;
        }
        if (mixed_cmd->parsed()) {
            auto a = SymbolicPartitionSet::parse(set_a);
            auto result = mixed_set(q, a.materialize());
            if (as_json)
                out << set_to_json(result).dump() << "\n";
            else
                out << set_to_text(result) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerificationReport rep;
            if (!theta_text.empty()) {
                CharDescriptor theta = CharDescriptor::parse(p, theta_text);
                if (theta.n() != n && n != 0)
                    throw std::invalid_argument("-n does not match the parsed character");
                rep = verify_theta(theta);
            } else {
                rep = verify_sweep(p, n, seed, threads);
            }
            if (as_json)
                out << rep.to_json().dump(2) << "\n";
            else
                out << rep.to_text();
            return rep.ok() ? 0 : 1;
        }
        if (tables_cmd->parsed()) return cmd_tables(out, table_id);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace sbc::cli
