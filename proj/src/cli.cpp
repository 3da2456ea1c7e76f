#include "expdeg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "expdeg/dot.hpp"
#include "expdeg/json_io.hpp"

namespace expdeg {

namespace {

Json load_input(const std::string& spec) {
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_text(buf.str());
    }
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) return parse_text(spec);
    std::ifstream file(spec);
    if (!file) throw InputError("cannot read input '" + spec + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_text(buf.str());
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<std::int64_t> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(token, &pos));
            if (pos != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InputError("malformed " + what + " entry '" + token + "'");
        }
    }
    if (out.empty()) throw InputError(what + " must not be empty");
    return out;
}

void write_dot(const std::string& path, const std::string& dot) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write dot file '" + path + "'");
    file << dot;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void warn_small_ell(std::ostream& err, int n, std::int64_t ell) {
    if (ell < default_ell(n))
        err << "warning: ell=" << ell << " is below the dominance threshold 2n^2+1="
            << default_ell(n) << "; verdict sign is not guaranteed by the envelope\n";
}

OneParamSubgroup oneps_from_flag(const std::string& text, int n) {
    auto entries = parse_int_list(text, "--s");
    OneParamSubgroup s{std::move(entries)};
    if (s.n() != n)
        throw InputError("--s needs exactly " + std::to_string(n) + " exponents");
    return s;
}

// ---- verify sweep ---------------------------------------------------------

struct VerifyReport {
    std::int64_t forcing_instances = 0;
    bool forcing_ok = true;
    std::int64_t smooth_configs = 0;
    std::int64_t corner_configs = 0;
    std::int64_t disagreements = 0;
    std::int64_t strictly_semistable = 0;
    std::int64_t witnesses_verified = 0;
    std::int64_t stabilizer_samples = 0;
    std::int64_t stabilizer_mismatches = 0;
    bool ok() const {
        return forcing_ok && disagreements == 0 && strictly_semistable == 0 &&
               stabilizer_mismatches == 0;
    }
};

void check_one(const Configuration& c, std::int64_t box, VerifyReport& report) {
    const StabilityVerdict verdict = git_stable(c);
    const OracleScan scan = oracle_scan(c, box);
    const bool oracle_ok = !scan.any_admissible || scan.min_weight > 0;
    const bool oracle_semi = !scan.any_admissible || scan.min_weight >= 0;
    const bool predicted =
        c.has_smooth_support() &&
        numerical_support(c) == canonical_support(c.avector());

    if ((verdict.status == Stability::Stable) != predicted || oracle_ok != predicted)
        ++report.disagreements;
    if (oracle_ok != oracle_semi) ++report.strictly_semistable;
    if (verdict.status == Stability::Unstable) {
        const Weight w = cycle_weight(c, *verdict.witness);
        if (!w.is_infinite() && w.value() < 0 && w.value() == *verdict.witness_weight)
            ++report.witnesses_verified;
        else
            ++report.disagreements;
    }
}

// All placements of n points over the 2r+1 cells (r+1 levels and r corners)
// of the single-edge chain, with at least one corner occupied.
void sweep_corner_configs(int n, const AVector& a, std::int64_t box, VerifyReport& report) {
    const DualGraph g = single_edge_graph();
    const int r = a.r();
    const int cells = 2 * r + 1;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(cells), 0);

    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == cells - 1) {
            counts[pos] = remaining;
            bool any_corner = false;
            for (int i = r + 1; i < cells; ++i) any_corner |= counts[i] > 0;
            if (!any_corner) return;
            std::vector<ConfigPoint> points;
            for (int i = 0; i <= r; ++i)
                if (counts[i] > 0)
                    points.push_back({PointPosition::smooth(a, "D", a.label_of_level(i)),
                                      counts[i], std::nullopt, std::nullopt});
            for (int i = 1; i <= r; ++i)
                if (counts[r + i] > 0)
                    points.push_back(
                        {PointPosition::corner(a, "D", a.label_of_level(i - 1), a.at(i)),
                         counts[r + i], std::nullopt, std::nullopt});
            const Configuration c(n, g, a, std::move(points));
            ++report.corner_configs;
            check_one(c, box, report);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            counts[pos] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    rec(rec, 0, n);
}

void sweep_stabilizer_coincidence(int n, std::uint64_t seed, VerifyReport& report) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t k) { return static_cast<int>(rng() % k); };
    const std::vector<Rational> pool = {Rational(1),      Rational(-1), Rational(2),
                                        Rational(-2),     Rational(1, 2), Rational(-1, 2),
                                        Rational(3, 2),   Rational(5),  Rational(-5, 3)};
    const DualGraph g = single_edge_graph();

    for (int sample = 0; sample < 1000; ++sample) {
        const int r = 1 + pick(static_cast<std::uint64_t>(n) + 1);
        std::vector<int> I;
        while (static_cast<int>(I.size()) < r) {
            const int i = 1 + pick(static_cast<std::uint64_t>(n) + 1);
            if (std::find(I.begin(), I.end(), i) == I.end()) I.push_back(i);
        }
        const AVector a = avector_from_set(n, I);
        std::vector<ConfigPoint> points;
        for (int p = 0; p < n; ++p) {
            const int level = pick(static_cast<std::uint64_t>(r) + 1);
            ConfigPoint pt{PointPosition::smooth(a, "D", a.label_of_level(level)), 1,
                           std::nullopt, std::nullopt};
            if (level > 0 && level < r) {
                pt.fiber = pool[pick(pool.size())];
                if (pick(2)) pt.base_point = std::string(1, char('p' + pick(3)));
            }
            points.push_back(std::move(pt));
        }
        const Configuration c(n, g, a, std::move(points));
        ++report.stabilizer_samples;
        if (lw_stable(c) != stabilizer(c).finite) ++report.stabilizer_mismatches;
    }
}

VerifyReport run_verify(int n, std::int64_t box, std::uint64_t seed) {
    VerifyReport report;
    for (int r = 1; r <= n + 1; ++r)
        for (const AVector& a : all_avectors(n, r)) {
            ++report.forcing_instances;
            if (!verify_forcing_lemma(n, r, a)) report.forcing_ok = false;
        }

    const DualGraph g = single_edge_graph();
    for (int r = 1; r <= n + 1; ++r)
        for (const AVector& a : all_avectors(n, r)) {
            for (const SupportVector& v : all_support_vectors(n, r)) {
                const Configuration c = configuration_from_support(g, "D", a, v);
                ++report.smooth_configs;
                check_one(c, box, report);
            }
            sweep_corner_configs(n, a, box, report);
        }

    sweep_stabilizer_coincidence(std::max(2, std::min(n, 4)), seed, report);
    return report;
}

// ---- command handlers ------------------------------------------------------

int cmd_graph_check(const std::string& input, const std::string& dot_path, bool human,
                    std::ostream& out) {
    const DualGraph g = parse_graph(load_input(input));
    const bool strict = is_strict(g);
    const bool cyclic = strict ? has_directed_cycle(g) : true;
    const auto splits = strict ? bipartite_orientations(g) : std::vector<BipartiteSplit>{};

    Json j;
    j["strict"] = strict;
    j["directed_cycle"] = cyclic;
    j["bipartite"] = !splits.empty();
    j["orientations"] = Json::array();
    for (const auto& split : splits)
        j["orientations"].push_back({{"v_minus", split.v_minus}, {"v_plus", split.v_plus}});
    if (strict && !cyclic) {
        j["blowup_order"] = Json::array();
        for (const auto& level : blowup_order(g)) j["blowup_order"].push_back(level);
    }
    if (!dot_path.empty()) write_dot(dot_path, graph_to_dot(g));
    if (human) {
        out << "strict: " << (strict ? "yes" : "no") << "\n"
            << "directed cycle: " << (cyclic ? "yes" : "no") << "\n"
            << "bipartite orientations: " << splits.size() << "\n";
    } else {
        emit(out, j);
    }
    return (strict && !cyclic && !splits.empty()) ? 0 : 1;
}

int cmd_graph_transform(const std::string& input, bool do_bipartify,
                        const std::string& dot_path, std::ostream& out) {
    const DualGraph g = parse_graph(load_input(input));
    const DualGraph result = do_bipartify ? bipartify(g) : reverse_orientation(g);
    if (!dot_path.empty()) write_dot(dot_path, graph_to_dot(result));
    emit(out, graph_to_json(result));
    return 0;
}

int cmd_expand(const std::string& input, int n, const std::string& index_list,
               const std::string& dot_path, std::ostream& out) {
    const DualGraph g = parse_graph(load_input(input));
    std::vector<int> I;
    for (const auto v : parse_int_list(index_list, "--I")) I.push_back(static_cast<int>(v));
    const ExpandedGraph eg = expand(g, avector_from_set(n, I));
    if (!dot_path.empty()) write_dot(dot_path, expanded_to_dot(eg));
    emit(out, expanded_to_json(eg));
    return 0;
}

int cmd_limit(const std::string& input, const std::string& s_text, std::ostream& out) {
    const Configuration c = parse_configuration(load_input(input));
    const OneParamSubgroup s = oneps_from_flag(s_text, c.n());

    Json j;
    if (c.is_generic()) {
        j["exists"] = s.is_trivial();
        if (s.is_trivial()) j["J"] = Json::array();
        emit(out, j);
        return s.is_trivial() ? 0 : 1;
    }
    const bool exists = limit_exists(c.avector(), s);
    j["exists"] = exists;
    if (exists) {
        j["J"] = limit_index_set(c.avector(), s);
        j["landings"] = Json::array();
        for (const auto& pt : c.points()) {
            const LimitOutcome outcome = limit(pt.position, s);
            Json jl = position_to_json(*outcome.landing);
            jl["mult"] = pt.multiplicity;
            j["landings"].push_back(std::move(jl));
        }
    }
    emit(out, j);
    return exists ? 0 : 1;
}

int cmd_weight(const std::string& input, const std::string& s_text, std::int64_t ell,
               bool human, std::ostream& out, std::ostream& err) {
    const Configuration c = parse_configuration(load_input(input));
    const OneParamSubgroup s = oneps_from_flag(s_text, c.n());
    if (ell == 0) ell = default_ell(c.n());
    warn_small_ell(err, c.n(), ell);

    const Weight w = cycle_weight(c, s);
    Json j;
    if (w.is_infinite()) {
        j["omega"] = "infinity";
    } else {
        j["omega"] = w.value();
        j["envelope"] = envelope_to_json(weight_envelope(c, s, ell));
        j["ell"] = ell;
    }
    if (human)
        out << "omega = " << (w.is_infinite() ? std::string("infinity")
                                              : std::to_string(w.value()))
            << "\n";
    else
        emit(out, j);
    return 0;
}

int cmd_stability(const std::string& input, std::int64_t ell, bool human, std::ostream& out,
                  std::ostream& err) {
    const Configuration c = parse_configuration(load_input(input));
    if (ell != 0) warn_small_ell(err, c.n(), ell);
    StabilityVerdict verdict = git_stable(c);
    if (ell != 0) verdict.ell_threshold = ell;
    if (human) {
        out << (verdict.status == Stability::Stable ? "stable" : "unstable") << "\n";
    } else {
        emit(out, verdict_to_json(verdict));
    }
    return verdict.status == Stability::Stable ? 0 : 1;
}

int cmd_witness(const std::string& input, bool human, std::ostream& out) {
    const Configuration c = parse_configuration(load_input(input));
    StabilityVerdict verdict = git_stable(c);
    if (verdict.status == Stability::Stable) {
        if (human)
            out << "stable: no destabilizing one-parameter subgroup exists\n";
        else
            emit(out, verdict_to_json(verdict));
        return 1;
    }
    if (human) {
        out << "witness s = (";
        for (int i = 0; i < verdict.witness->n(); ++i)
            out << (i ? "," : "") << verdict.witness->s[i];
        out << "), omega = " << *verdict.witness_weight << "\n";
    } else {
        emit(out, verdict_to_json(verdict));
    }
    return 0;
}

int cmd_oracle(const std::string& input, std::int64_t box, bool human, std::ostream& out) {
    const Configuration c = parse_configuration(load_input(input));
    if (box == 0) box = default_box(c.n());
    const OracleScan scan = oracle_scan(c, box);
    const bool stable = !scan.any_admissible || scan.min_weight > 0;

    Json j;
    j["stable"] = stable;
    j["box"] = box;
    if (!stable) {
        j["witness"] = oneps_to_json(scan.argmin);
        j["omega"] = scan.min_weight;
    }
    if (human)
        out << (stable ? "stable" : "unstable") << " (box " << box << ")\n";
    else
        emit(out, j);
    return stable ? 0 : 1;
}

int cmd_verify(int n, std::int64_t box, std::uint64_t seed, bool human, std::ostream& out) {
    if (n < 1) throw InputError("--n must be positive");
    if (box == 0) box = default_box(n);
    const VerifyReport report = run_verify(n, box, seed);

    Json j;
    j["n"] = n;
    j["forcing_lemma"] = {{"instances", report.forcing_instances}, {"ok", report.forcing_ok}};
    j["sweep"] = {{"smooth_configurations", report.smooth_configs},
                  {"corner_configurations", report.corner_configs},
                  {"disagreements", report.disagreements},
                  {"strictly_semistable", report.strictly_semistable},
                  {"witnesses_verified", report.witnesses_verified}};
    j["stabilizer_coincidence"] = {{"samples", report.stabilizer_samples},
                                   {"mismatches", report.stabilizer_mismatches}};
    j["ok"] = report.ok();
    if (human)
        out << (report.ok() ? "verify: ok" : "verify: FAILED") << " (n=" << n << ", "
            << report.smooth_configs + report.corner_configs << " configurations)\n";
    else
        emit(out, j);
    return report.ok() ? 0 : 1;
}

int cmd_strata(const std::string& input, int n, int fibre_dim, const std::string& dot_path,
               std::ostream& out) {
    DualGraph g = input.empty() ? single_edge_graph() : parse_graph(load_input(input));
    if (fibre_dim >= 0)
        g = DualGraph(g.vertices(), g.edges(), fibre_dim);
    const auto st = strata(g, n);
    const auto order = closure_order(st);
    if (!dot_path.empty()) write_dot(dot_path, closure_to_dot(st, order));
    emit(out, strata_to_json(st, order));
    return 0;
}

int cmd_dual_complex(int n, const std::string& dot_path, bool human, std::ostream& out) {
    const DualComplex complex = dual_complex(n);
    if (!dot_path.empty()) {
        const auto st = strata(single_edge_graph(), n);
        write_dot(dot_path, closure_to_dot(st, closure_order(st)));
    }
    if (human) {
        out << "f-vector: (";
        const auto f = complex.f_vector();
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
        out << ")\n";
    } else {
        emit(out, dual_complex_to_json(complex));
    }
    return 0;
}

int cmd_stabilizer(const std::string& input, bool human, std::ostream& out) {
    const Configuration c = parse_configuration(load_input(input));
    const StabilizerResult result = stabilizer(c);
    if (human) {
        if (result.finite)
            out << "stabilizer order " << result.order << "\n";
        else
            out << "stabilizer infinite\n";
    } else {
        emit(out, stabilizer_to_json(result));
    }
    return result.finite ? 0 : 1;
}

int cmd_singularity(int n, int d, std::ostream& out) {
    emit(out, singularity_to_json(singularity_report(n, d)));
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stability calculus for expanded degenerations of Hilbert schemes of points"};
    app.require_subcommand(1);

    std::string input, s_text, index_list, dot_path;
    int n = 0, fibre_dim = -1;
    std::int64_t box = 0, ell = 0;
    std::uint64_t seed = 0;
    bool human = false;

    auto add_input = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("input", input, "path, inline JSON, or - for stdin");
        if (required) opt->required();
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--human", human, "plain-text summary instead of JSON");
        cmd->add_option("--dot", dot_path, "write a DOT rendering to this path");
    };

    auto* graph_cmd = app.add_subcommand("graph", "dual-graph structure checks and surgery");
    graph_cmd->require_subcommand(1);
    auto* check_cmd = graph_cmd->add_subcommand("check", "strictness, cycles, bipartiteness");
    add_input(check_cmd);
    add_common(check_cmd);
    auto* bipartify_cmd =
        graph_cmd->add_subcommand("bipartify", "quadratic base-change surgery");
    add_input(bipartify_cmd);
    add_common(bipartify_cmd);
    auto* reverse_cmd = graph_cmd->add_subcommand("reverse", "reverse the orientation");
    add_input(reverse_cmd);
    add_common(reverse_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "expanded graph of the fibre over I");
    add_input(expand_cmd);
    expand_cmd->add_option("--n", n, "degree")->required();
    expand_cmd->add_option("--I", index_list, "comma-separated index set")->required();
    add_common(expand_cmd);

    auto* limit_cmd = app.add_subcommand("limit", "limit existence and landing positions");
    add_input(limit_cmd);
    limit_cmd->add_option("--s", s_text, "comma-separated exponents")->required();
    add_common(limit_cmd);

    auto* weight_cmd = app.add_subcommand("weight", "combinatorial weight of a configuration");
    add_input(weight_cmd);
    weight_cmd->add_option("--s", s_text, "comma-separated exponents")->required();
    weight_cmd->add_option("--ell", ell, "linearization power (default 2n^2+1)");
    add_common(weight_cmd);

    auto* stability_cmd = app.add_subcommand("stability", "stability verdict");
    add_input(stability_cmd);
    stability_cmd->add_option("--ell", ell, "linearization power (default 2n^2+1)");
    add_common(stability_cmd);

    auto* witness_cmd = app.add_subcommand("witness", "destabilizing one-parameter subgroup");
    add_input(witness_cmd);
    add_common(witness_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force stability sweep");
    add_input(oracle_cmd);
    oracle_cmd->add_option("--box", box, "sweep radius (default n+1)");
    add_common(oracle_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "forcing lemma and stability-theorem sweep for one n");
    verify_cmd->add_option("--n", n, "degree")->required();
    verify_cmd->add_option("--box", box, "sweep radius (default n+1)");
    verify_cmd->add_option("--seed", seed, "seed for the randomized stabilizer sweep");
    add_common(verify_cmd);

    auto* strata_cmd = app.add_subcommand("strata", "stratification of the central fibre");
    add_input(strata_cmd, false);
    strata_cmd->add_option("--n", n, "degree")->required();
    strata_cmd->add_option("--fibre-dim", fibre_dim, "fibre dimension d");
    add_common(strata_cmd);

    auto* complex_cmd = app.add_subcommand("dual-complex", "dual complex of the central fibre");
    complex_cmd->add_option("--n", n, "degree")->required();
    add_common(complex_cmd);

    auto* stabilizer_cmd = app.add_subcommand("stabilizer", "stabilizer of a reduced cycle");
    add_input(stabilizer_cmd);
    add_common(stabilizer_cmd);

    auto* singularity_cmd =
        app.add_subcommand("singularity", "transversal singularity report (degree 2)");
    singularity_cmd->add_option("--n", n, "degree")->required();
    singularity_cmd->add_option("--fibre-dim", fibre_dim, "fibre dimension d")->required();
    add_common(singularity_cmd);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check_cmd->parsed()) return cmd_graph_check(input, dot_path, human, out);
        if (bipartify_cmd->parsed()) return cmd_graph_transform(input, true, dot_path, out);
        if (reverse_cmd->parsed()) return cmd_graph_transform(input, false, dot_path, out);
        if (expand_cmd->parsed()) return cmd_expand(input, n, index_list, dot_path, out);
        if (limit_cmd->parsed()) return cmd_limit(input, s_text, out);
        if (weight_cmd->parsed()) return cmd_weight(input, s_text, ell, human, out, err);
        if (stability_cmd->parsed()) return cmd_stability(input, ell, human, out, err);
        if (witness_cmd->parsed()) return cmd_witness(input, human, out);
        if (oracle_cmd->parsed()) return cmd_oracle(input, box, human, out);
        if (verify_cmd->parsed()) return cmd_verify(n, box, seed, human, out);
        if (strata_cmd->parsed()) return cmd_strata(input, n, fibre_dim, dot_path, out);
        if (complex_cmd->parsed()) return cmd_dual_complex(n, dot_path, human, out);
        if (stabilizer_cmd->parsed()) return cmd_stabilizer(input, human, out);
        if (singularity_cmd->parsed()) return cmd_singularity(n, fibre_dim, out);
    } catch (const InputError& e) {
        Json j;
        j["error"] = {{"message", e.what()}, {"path", e.path}};
        emit(out, j);
        return 2;
    } catch (const Error& e) {
        Json j;
        j["error"] = {{"message", e.what()}};
        emit(out, j);
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace expdeg
