// Command-line surface: validation, enumeration, membership, form
// inspection, characters and graph export for crystals over
// Borcherds-Cartan data.

#include "gkm/graph.hpp"
#include "gkm/json_io.hpp"
#include "gkm/membership.hpp"
#include "gkm/monster.hpp"
#include "gkm/polyhedral.hpp"
#include "gkm/presets.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gkm;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // verdict "out" or validation violations
constexpr int kExitUsage = 2;      // bad flags, files or descriptors
constexpr int kExitUnknown = 3;    // membership undecided under the cap

struct ModelOptions {
    std::string datum_file;
    std::string iota_file;
    std::string rank2;    // "a,b,c"
    std::string rank3;    // "a,b,c,d,e,f,g,h"
    std::string monster;  // "toy" or "real"
    std::string charges_file;
    std::int64_t max_level = 0;  // 0: follow the charge table
};

struct Model {
    PathCrystal crystal;
    std::optional<MonsterConfig> monster;
};

std::vector<Int> parse_int_list(const std::string& text, std::size_t expected,
                                const std::string& what) {
    std::vector<Int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        values.push_back(parse_int(token));
    if (values.size() != expected)
        throw std::invalid_argument(what + ": expected " + std::to_string(expected) +
                                    " comma-separated integers, got '" + text + "'");
    return values;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    auto* datum = cmd->add_option("--datum", opts.datum_file, "datum descriptor (JSON file)");
    auto* iota = cmd->add_option("--iota", opts.iota_file, "iota descriptor (JSON file)");
    auto* r2 = cmd->add_option("--rank2", opts.rank2, "rank-2 preset parameters a,b,c");
    auto* r3 = cmd->add_option("--rank3", opts.rank3, "rank-3 preset parameters a,b,c,d,e,f,g,h");
    auto* mon = cmd->add_option("--monster", opts.monster, "monster preset: toy or real");
    cmd->add_option("--charges", opts.charges_file,
                    "charge file of lines '<level> <multiplicity>', merged over the embedded "
                    "defaults");
    cmd->add_option("--max-level", opts.max_level, "level cutoff for the monster preset");
    iota->needs(datum);
    r2->excludes(r3)->excludes(mon)->excludes(datum);
    r3->excludes(mon)->excludes(datum);
    mon->excludes(datum);
}

MonsterConfig monster_config_from(const ModelOptions& opts) {
    ChargeTable charges = opts.monster == "toy" && opts.charges_file.empty()
                              ? ChargeTable::toy()
                              : ChargeTable::embedded_defaults();
    if (!opts.charges_file.empty())
        charges = ChargeTable::load(opts.charges_file);
    Int cap = opts.max_level > 0 ? Int(opts.max_level) : charges.max_level();
    return MonsterConfig{std::move(charges), std::move(cap)};
}

Model build_model(const ModelOptions& opts) {
    if (!opts.rank2.empty()) {
        auto v = parse_int_list(opts.rank2, 3, "--rank2");
        return {rank2_crystal({v[0], v[1], v[2]}), std::nullopt};
    }
    if (!opts.rank3.empty()) {
        auto v = parse_int_list(opts.rank3, 8, "--rank3");
        return {rank3_crystal({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}), std::nullopt};
    }
    if (!opts.monster.empty()) {
        if (opts.monster != "toy" && opts.monster != "real")
            throw std::invalid_argument("--monster must be 'toy' or 'real'");
        MonsterConfig cfg = monster_config_from(opts);
        return {monster_crystal(cfg), std::move(cfg)};
    }
    if (!opts.datum_file.empty()) {
        if (opts.iota_file.empty())
            throw std::invalid_argument("--datum needs --iota");
        LoadedModel loaded = load_model(slurp(opts.datum_file), slurp(opts.iota_file));
        return {PathCrystal(loaded.datum, loaded.iota), loaded.monster};
    }
    throw std::invalid_argument(
        "no model given: use --rank2/--rank3/--monster or --datum with --iota");
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
}

ordered_json form_to_json(const LinearForm& f) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [k, c] : f.coeffs())
        coeffs[k.str()] = static_cast<std::int64_t>(c);
    return coeffs;
}

// ---------------------------------------------------------------------------

int cmd_validate(const ModelOptions& mopts, std::int64_t window) {
    Model model = build_model(mopts);
    const auto& z = model.crystal;
    bool ok = true;

    auto datum_report = validate_datum(z.datum());
    if (datum_report.ok()) {
        std::cout << "datum: ok (" << z.datum().sample_indices().size()
                  << " indices sampled)\n";
    } else {
        ok = false;
        std::cout << "datum: " << datum_report.violations.size() << " violation(s)\n";
        for (const auto& v : datum_report.violations)
            std::cout << "  " << v.axiom << " at (" << v.i.str() << "," << v.j.str()
                      << "): " << v.detail << "\n";
    }

    auto seq_report = check_prefix_constraints(z.iota(), 2 * window);
    if (seq_report.ok()) {
        std::cout << "iota: ok on positions 1.." << 2 * window << "\n";
    } else {
        ok = false;
        std::cout << "iota: " << seq_report.issues.size() << " issue(s)\n";
        for (const auto& issue : seq_report.issues)
            std::cout << "  " << issue.what << "\n";
    }

    auto theta = generate_theta(z, {Int(window), 100000});
    auto positivity = check_positivity(z, theta);
    if (positivity.ok()) {
        std::cout << "positivity: ok on " << theta.size() << " forms in window " << window
                  << (theta.saturated() ? "" : " (generation capped)") << "\n";
    } else {
        ok = false;
        std::cout << "positivity: " << positivity.violations.size() << " violation(s)\n";
        for (const auto& v : positivity.violations)
            std::cout << "  position " << v.position.str() << " in " << v.form.str() << "\n";
    }

    return ok ? kExitOk : kExitNegative;
}

std::string graph_table(const PathCrystal& z, const CrystalGraph& g) {
    std::ostringstream out;
    out << "degree vector weight\n";
    for (const auto& node : g.nodes)
        out << node.degree().str() << " " << node.str() << " " << z.weight(node).str() << "\n";
    out << "total " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
    return out.str();
}

int cmd_enumerate(const ModelOptions& mopts, std::int64_t depth, std::int64_t window,
                  const std::string& format, const std::string& out_path) {
    Model model = build_model(mopts);
    const auto& z = model.crystal;
    const Int w = window > 0 ? Int(window) : Int(3 * depth);
    auto g = bfs_image(z, depth, w);
    if (g.window_edge_hit)
        std::cerr << "note: a lowering landed at the window edge; rerun with a larger "
                     "--window to be sure no index is missing\n";
    if (format == "table")
        write_output(out_path, graph_table(z, g));
    else if (format == "json")
        write_output(out_path, export_json(g));
    else if (format == "dot")
        write_output(out_path, export_dot(g));
    else
        throw std::invalid_argument("--format must be table, json or dot");
    return kExitOk;
}

int cmd_member(const ModelOptions& mopts, const std::string& vector_text, std::int64_t window,
               std::int64_t cap) {
    Model model = build_model(mopts);
    const auto& z = model.crystal;
    PathVector x = PathVector::parse(vector_text);
    Int w = window > 0 ? Int(window) : Int(12);
    const Int needed = 2 * x.max_position() + 4;
    if (window <= 0 && needed > w)
        w = needed;
    GammaMembership membership(z, ThetaOptions{w, static_cast<std::size_t>(cap)});
    if (!membership.positivity().ok())
        std::cerr << "note: the positivity assumption fails in window " << w.str()
                  << "; verdicts follow the generated forms regardless\n";
    auto res = membership.check(x);
    switch (res.verdict) {
    case Verdict::in:
        std::cout << "in\n";
        return kExitOk;
    case Verdict::out:
        std::cout << "out (" << res.reason << ")\n";
        return kExitNegative;
    case Verdict::unknown:
        std::cout << "unknown (" << res.reason << ")\n";
        return kExitUnknown;
    }
    return kExitUsage;
}

int cmd_theta(const ModelOptions& mopts, std::int64_t window, std::int64_t cap,
              const std::string& excluding, const std::string& format,
              const std::string& out_path) {
    Model model = build_model(mopts);
    const auto& z = model.crystal;
    ThetaOptions opts{Int(window), static_cast<std::size_t>(cap)};
    ThetaSet theta = [&] {
        if (excluding.empty())
            return generate_theta(z, opts);
        auto st = parse_int_list(excluding, 2, "--excluding");
        return generate_theta_excluding(z, st[0], st[1], opts);
    }();

    if (format == "json") {
        ordered_json doc;
        doc["window"] = static_cast<std::int64_t>(theta.window());
        doc["saturated"] = theta.saturated();
        doc["generation_cap_hit"] = theta.generation_cap_hit();
        doc["escaped"] = theta.escaped_count();
        ordered_json forms = ordered_json::array();
        for (const auto& f : theta.forms())
            forms.push_back(form_to_json(f));
        doc["forms"] = std::move(forms);
        ordered_json forced = ordered_json::array();
        for (const auto& j : theta.forced_zero())
            forced.push_back(static_cast<std::int64_t>(j));
        doc["forced_zero"] = std::move(forced);
        write_output(out_path, doc.dump(2) + "\n");
        return kExitOk;
    }
    if (format != "table")
        throw std::invalid_argument("--format must be table or json");

    std::ostringstream out;
    out << theta.size() << " forms in window " << theta.window().str()
        << (theta.saturated() ? ", saturated" : ", generation capped") << ", "
        << theta.escaped_count() << " escaped\n";
    for (const auto& f : theta.forms())
        out << "psi = " << f.str() << "\n";
    for (const auto& j : theta.forced_zero())
        out << "forced: x_" << j.str() << " = 0\n";
    write_output(out_path, out.str());
    return kExitOk;
}

int cmd_char(const ModelOptions& mopts, std::int64_t depth, std::int64_t window, bool collapse,
             const std::string& format, const std::string& out_path) {
    Model model = build_model(mopts);
    const auto& z = model.crystal;
    const Int w = window > 0 ? Int(window) : Int(3 * depth);
    auto g = bfs_image(z, depth, w);
    auto table = character(z, g, collapse);

    if (format == "json") {
        ordered_json doc = ordered_json::array();
        for (const auto& [deg, row] : table) {
            ordered_json entry;
            entry["degree"] = static_cast<std::int64_t>(deg);
            ordered_json weights = ordered_json::array();
            for (const auto& [wt, count] : row) {
                ordered_json cell;
                cell["weight"] = wt.str();
                cell["count"] = static_cast<std::int64_t>(count);
                weights.push_back(std::move(cell));
            }
            entry["weights"] = std::move(weights);
            doc.push_back(std::move(entry));
        }
        write_output(out_path, doc.dump(2) + "\n");
        return kExitOk;
    }
    if (format != "table")
        throw std::invalid_argument("--format must be table or json");

    std::ostringstream out;
    for (const auto& [deg, row] : table) {
        Int total = 0;
        for (const auto& [wt, count] : row)
            total += count;
        out << "degree " << deg.str() << " (" << total.str() << " elements)\n";
        for (const auto& [wt, count] : row)
            out << "  " << wt.str() << ": " << count.str() << "\n";
    }
    write_output(out_path, out.str());
    return kExitOk;
}

int cmd_graph(const ModelOptions& mopts, std::int64_t depth, std::int64_t window,
              const std::string& format, const std::string& out_path) {
    if (format != "dot" && format != "json")
        throw std::invalid_argument("--format must be dot or json");
    return cmd_enumerate(mopts, depth, window, format, out_path);
}

int cmd_monster_member(const ModelOptions& mopts, const std::string& vector_text) {
    MonsterConfig cfg = monster_config_from(mopts);
    PathVector x = PathVector::parse(vector_text);
    if (monster_member(cfg, x)) {
        std::cout << "in\n";
        return kExitOk;
    }
    std::cout << "out\n";
    return kExitNegative;
}

int cmd_monster_b(const ModelOptions& mopts, std::int64_t n) {
    MonsterConfig cfg = monster_config_from(mopts);
    std::cout << b_of_n(cfg.charges, n).str() << "\n";
    return kExitOk;
}

int cmd_monster_sigma(const ModelOptions& mopts, std::int64_t n) {
    MonsterConfig cfg = monster_config_from(mopts);
    std::cout << sigma_sum(cfg.charges, n).str() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal enumeration and polyhedral membership for Borcherds-Cartan data"};
    app.require_subcommand(1);

    ModelOptions mopts;
    std::int64_t depth = 4;
    std::int64_t window = 0;  // 0: derived from depth or the vector
    std::int64_t cap = 100000;
    std::string enum_format = "table";
    std::string theta_format = "table";
    std::string char_format = "table";
    std::string graph_format = "dot";
    std::string out_path;
    std::string vector_text = "[]";
    std::string excluding;
    bool collapse = false;
    std::int64_t validate_window = 15;
    std::int64_t level_arg = 1;

    auto* validate = app.add_subcommand("validate", "check datum axioms, sequence constraints "
                                                    "and first-occurrence positivity");
    add_model_options(validate, mopts);
    validate->add_option("--window", validate_window, "positivity window (default 15)");

    auto* enumerate = app.add_subcommand("enumerate", "breadth-first enumeration of the "
                                                      "lowering closure of the zero vector");
    add_model_options(enumerate, mopts);
    enumerate->add_option("--depth", depth, "total-degree cutoff")->required();
    enumerate->add_option("--window", window, "index window (default 3*depth)");
    enumerate->add_option("--format", enum_format, "table, json or dot");
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    auto* member = app.add_subcommand("member", "membership of a vector in the embedding image");
    add_model_options(member, mopts);
    member->add_option("--vector", vector_text, "vector in text form [x_N,...,x_1]")->required();
    member->add_option("--window", window, "form window (default from the vector)");
    member->add_option("--cap", cap, "form generation cap");

    auto* theta = app.add_subcommand("theta", "generated linear forms in a window");
    add_model_options(theta, mopts);
    theta->add_option("--window", window, "position window")->required();
    theta->add_option("--cap", cap, "form generation cap");
    theta->add_option("--excluding", excluding,
                      "s,t: closure of x_s never applying the transformation at t");
    theta->add_option("--format", theta_format, "table or json");
    theta->add_option("--out", out_path, "output file (default stdout)");

    auto* charcmd = app.add_subcommand("char", "graded weight histogram of the enumeration");
    add_model_options(charcmd, mopts);
    charcmd->add_option("--depth", depth, "total-degree cutoff")->required();
    charcmd->add_option("--window", window, "index window (default 3*depth)");
    charcmd->add_flag("--collapse-levels", collapse, "fold copy indices onto their level");
    charcmd->add_option("--format", char_format, "table or json");
    charcmd->add_option("--out", out_path, "output file (default stdout)");

    auto* graph = app.add_subcommand("graph", "crystal graph export");
    add_model_options(graph, mopts);
    graph->add_option("--depth", depth, "total-degree cutoff")->required();
    graph->add_option("--window", window, "index window (default 3*depth)");
    graph->add_option("--format", graph_format, "dot or json");
    graph->add_option("--out", out_path, "output file (default stdout)");

    auto* monster = app.add_subcommand("monster", "charged-family specific queries");
    monster->require_subcommand(1);
    auto* mmember = monster->add_subcommand("member", "closed-form membership test");
    mmember->add_option("--charges", mopts.charges_file, "charge file");
    mmember->add_option("--max-level", mopts.max_level, "level cutoff");
    mmember->add_flag_callback("--toy", [&] { mopts.monster = "toy"; }, "toy charges (2, 1)");
    mmember->add_option("--vector", vector_text, "vector in text form")->required();
    auto* mb = monster->add_subcommand("b-of-n", "position of the n-th recurrence of index -1");
    mb->add_option("n", level_arg, "block number")->required();
    mb->add_option("--charges", mopts.charges_file, "charge file");
    mb->add_flag_callback("--toy", [&] { mopts.monster = "toy"; }, "toy charges (2, 1)");
    auto* msigma = monster->add_subcommand("sigma-of-n", "sum of charges through level n");
    msigma->add_option("n", level_arg, "level")->required();
    msigma->add_option("--charges", mopts.charges_file, "charge file");
    msigma->add_flag_callback("--toy", [&] { mopts.monster = "toy"; }, "toy charges (2, 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(mopts, validate_window);
        if (enumerate->parsed())
            return cmd_enumerate(mopts, depth, window, enum_format, out_path);
        if (member->parsed())
            return cmd_member(mopts, vector_text, window, cap);
        if (theta->parsed())
            return cmd_theta(mopts, window, cap, excluding, theta_format, out_path);
        if (charcmd->parsed())
            return cmd_char(mopts, depth, window, collapse, char_format, out_path);
        if (graph->parsed())
            return cmd_graph(mopts, depth, window, graph_format, out_path);
        if (monster->parsed()) {
            if (mopts.monster.empty() && mopts.charges_file.empty())
                mopts.monster = "real";
            if (mmember->parsed())
                return cmd_monster_member(mopts, vector_text);
            if (mb->parsed())
                return cmd_monster_b(mopts, level_arg);
            if (msigma->parsed())
                return cmd_monster_sigma(mopts, level_arg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
