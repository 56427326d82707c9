// bsassign: polynomial assignment modules for torus actions on
// Bott-Samelson spaces. Subcommands cover the whole pipeline: graph, basis,
// cohomology, check, defect, integrate, morse, oracle.
//
// Exit codes: 0 success, 2 usage error, 3 rref obstruction, 4 pair budget
// exceeded, 5 covector not polarizing. Data goes to stdout, diagnostics to
// stderr; BSASSIGN_LOG=debug enables progress logging.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bsassign/assignmod.hpp"
#include "bsassign/bsgraph.hpp"
#include "bsassign/errors.hpp"
#include "bsassign/morse.hpp"
#include "bsassign/serialize.hpp"

namespace {

using namespace bsassign;

bool log_enabled() {
    const char* env = std::getenv("BSASSIGN_LOG");
    return env && std::string(env) != "" && std::string(env) != "0";
}

void log_debug(const std::string& message) {
    if (log_enabled())
        std::cerr << "[bsassign] " << message << "\n";
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty())
        return w;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            std::size_t pos = 0;
            int letter = std::stoi(part, &pos);
            if (pos != part.size())
                throw std::invalid_argument(part);
            w.letters.push_back(letter);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--word", "invalid letter '" + part + "'");
        }
    }
    return w;
}

Polarization parse_xi(const std::string& text, int rank) {
    Polarization xi;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ','))
        xi.values.push_back(rational_from_string(part));
    if (xi.rank() != rank)
        throw CLI::ValidationError("--xi", "expected " + std::to_string(rank) + " comma-separated rationals");
    return xi;
}

FaceSpec parse_face(const BSGraph& g, const std::string& pattern) {
    std::string fixed;
    std::vector<bool> free_pos;
    for (char c : pattern) {
        if (c == '*' || c == '_') {
            fixed.push_back('0');
            free_pos.push_back(true);
        } else {
            fixed.push_back(c);
            free_pos.push_back(false);
        }
    }
    auto base = g.parse_vertex(fixed);
    if (!base || static_cast<int>(free_pos.size()) != g.dim())
        throw CLI::ValidationError("--face", "pattern must give each position a bit or '*'");
    FaceSpec spec;
    for (int t = 1; t <= g.dim(); ++t)
        if (!free_pos[t - 1])
            spec.fixed_positions |= VertexMask{1} << (t - 1);
    spec.fixed_bits = *base & spec.fixed_positions;
    return spec;
}

VertexMask parse_vertex_arg(const BSGraph& g, const std::string& name, const std::string& flag) {
    auto v = g.parse_vertex(name);
    if (!v)
        throw CLI::ValidationError(flag, "'" + name + "' is not a subword of the word");
    return *v;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string render_values_row(const BSGraph& g, std::span<const Polynomial> values) {
    std::ostringstream os;
    for (std::size_t v = 0; v < values.size(); ++v)
        os << (v ? "  " : "") << g.vertex_name(static_cast<VertexMask>(v)) << ": " << to_text(values[v]);
    return os.str();
}

void print_basis_text(const BasisMatrix& b) {
    const BSGraph& g = *b.graph;
    std::cout << (b.kind == BasisKind::Assignment ? "A" : "H") << "^I for " << g.lie_type().name()
              << ", word " << g.vertex_name(static_cast<VertexMask>(g.vertex_count() - 1)) << "\n";
    for (std::size_t i = 0; i < b.mat.rows(); ++i) {
        std::cout << g.vertex_name(static_cast<VertexMask>(i)) << " |";
        for (std::size_t j = 0; j < b.mat.cols(); ++j)
            std::cout << " " << to_text(b.mat.at(i, j)) << (j + 1 < b.mat.cols() ? " ;" : "");
        std::cout << "\n";
    }
}

struct CommonOptions {
    std::string type = "A2";
    std::string word;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_format = true) {
    cmd->add_option("--type", opts.type, "Lie type, e.g. A2, B3, G2")->required();
    cmd->add_option("--word", opts.word, "comma-separated 1-based letters; empty allowed");
    if (with_format)
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
}

int run(int argc, char** argv) {
    CLI::App app{"polynomial assignment modules on Bott-Samelson graphs"};
    app.require_subcommand(1);

    CommonOptions graph_opts;
    std::string graph_xi;
    auto* cmd_graph = app.add_subcommand("graph", "build and export the labeled graph");
    add_common(cmd_graph, graph_opts);
    cmd_graph->add_option("--xi", graph_xi, "orient edges ascending by this covector (r rationals)");

    CommonOptions basis_opts;
    auto* cmd_basis = app.add_subcommand("basis", "assignment-module basis A^I");
    add_common(cmd_basis, basis_opts);

    CommonOptions coh_opts;
    auto* cmd_coh = app.add_subcommand("cohomology", "cohomological basis H^I");
    add_common(cmd_coh, coh_opts);

    CommonOptions check_opts;
    std::string check_file;
    auto* cmd_check = app.add_subcommand("check", "assignment + cohomologicality verdict for a values file");
    cmd_check->add_option("--type", check_opts.type, "Lie type (may be omitted if the file has one)");
    cmd_check->add_option("--file", check_file, "assignment JSON file")->required()->check(CLI::ExistingFile);
    cmd_check->add_option("--format", check_opts.format, "output format")->check(CLI::IsMember({"text", "json"}));

    CommonOptions defect_opts;
    auto* cmd_defect = app.add_subcommand("defect", "columns of A^I with non-polynomial H-coefficients");
    add_common(cmd_defect, defect_opts);

    CommonOptions int_opts;
    std::string int_file, int_delta, int_face;
    auto* cmd_integrate = app.add_subcommand("integrate", "localization integral of an assignment");
    add_common(cmd_integrate, int_opts);
    cmd_integrate->add_option("--file", int_file, "assignment JSON file")->check(CLI::ExistingFile);
    cmd_integrate->add_option("--delta-vertex", int_delta, "integrate the vertex delta class at this subword");
    cmd_integrate->add_option("--face", int_face, "integrate the face delta class for this pattern (* = free)");

    CommonOptions morse_opts;
    std::string morse_xi;
    std::uint64_t pair_budget = 1'000'000;
    auto* cmd_morse = app.add_subcommand("morse", "flow-ups, Morse generators, generating ideals");
    add_common(cmd_morse, morse_opts);
    cmd_morse->add_option("--xi", morse_xi, "polarizing covector (r rationals)")->required();
    cmd_morse->add_option("--pair-budget", pair_budget, "Groebner pair budget");

    CommonOptions oracle_opts;
    int max_degree = 4;
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force vs basis-span dimension table");
    add_common(cmd_oracle, oracle_opts);
    cmd_oracle->add_option("-K,--max-degree", max_degree, "degree bound (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_graph->parsed()) {
        LieType lt = LieType::parse(graph_opts.type);
        auto g = BSGraph::build_shared(lt, parse_word(graph_opts.word));
        log_debug("graph built: " + std::to_string(g->vertex_count()) + " vertices");
        std::optional<Polarization> xi;
        if (!graph_xi.empty())
            xi = parse_xi(graph_xi, lt.rank);
        if (graph_opts.format == "json") {
            emit(graph_to_json(*g));
        } else if (graph_opts.format == "dot") {
            std::cout << export_dot(*g, xi ? &*xi : nullptr);
        } else {
            if (xi && !is_polarizing(*xi, g->label_set()))
                throw NotPolarizing("covector vanishes on an edge label of the graph");
            std::cout << g->lie_type().name() << " graph, " << g->vertex_count() << " vertices\n";
            for (const Edge& e : g->edges()) {
                bool up = !xi || eval(g->edge_label(e.from, e.position), *xi) > 0;
                VertexMask src = up ? e.from : e.to;
                VertexMask dst = up ? e.to : e.from;
                std::cout << g->vertex_name(src) << (xi ? " -> " : " -- ") << g->vertex_name(dst) << "  ["
                          << to_text(from_weight(g->edge_label(src, e.position))) << "]\n";
            }
        }
        return 0;
    }
    if (cmd_basis->parsed() || cmd_coh->parsed()) {
        const CommonOptions& opts = cmd_basis->parsed() ? basis_opts : coh_opts;
        LieType lt = LieType::parse(opts.type);
        Word word = parse_word(opts.word);
        BasisMatrix b = cmd_basis->parsed() ? assignment_basis(lt, word) : cohomology_basis(lt, word);
        if (opts.format == "json")
            emit(basis_to_json(b));
        else
            print_basis_text(b);
        return 0;
    }
    if (cmd_check->parsed()) {
        std::ifstream in(check_file);
        Json j = Json::parse(in);
        std::optional<LieType> lt;
        if (!check_opts.type.empty() && cmd_check->count("--type"))
            lt = LieType::parse(check_opts.type);
        bool valid = true;
        std::string why;
        std::optional<Assignment> eta;
        try {
            eta = assignment_from_json(j, lt);
        } catch (const std::invalid_argument& e) {
            valid = false;
            why = e.what();
            if (std::string(e.what()).find("edge congruence") == std::string::npos)
                throw;
        }
        Json out;
        out["is_assignment"] = valid;
        if (valid) {
            CoefficientVector coeffs = express_in_cohomology(*eta);
            out["is_cohomological"] = is_polynomial_vector(coeffs);
            out["coefficients"] = coefficients_to_json(coeffs);
            if (check_opts.format == "text") {
                std::cout << "is_assignment: yes\nis_cohomological: "
                          << (out["is_cohomological"].get<bool>() ? "yes" : "no") << "\ncoefficients:\n";
                for (std::size_t v = 0; v < coeffs.size(); ++v)
                    std::cout << "  " << eta->graph().vertex_name(static_cast<VertexMask>(v)) << ": "
                              << to_text(coeffs[v]) << "\n";
                return 0;
            }
        } else if (check_opts.format == "text") {
            std::cout << "is_assignment: no (" << why << ")\n";
            return 0;
        }
        emit(out);
        return 0;
    }
    if (cmd_defect->parsed()) {
        LieType lt = LieType::parse(defect_opts.type);
        DefectReport report = defect_report(lt, parse_word(defect_opts.word));
        if (defect_opts.format == "json") {
            emit(defect_to_json(report));
        } else {
            const BSGraph& g = *report.trace.basis.graph;
            if (report.defect_columns.empty())
                std::cout << "no defect columns: every A^I column is cohomological\n";
            for (VertexMask j : report.defect_columns) {
                std::cout << "defect column " << g.vertex_name(j) << "; H-coefficients:\n";
                for (std::size_t v = 0; v < report.coefficients[j].size(); ++v)
                    std::cout << "  " << g.vertex_name(static_cast<VertexMask>(v)) << ": "
                              << to_text(report.coefficients[j][v]) << "\n";
            }
        }
        return 0;
    }
    if (cmd_integrate->parsed()) {
        LieType lt = LieType::parse(int_opts.type);
        auto g = BSGraph::build_shared(lt, parse_word(int_opts.word));
        std::optional<Assignment> eta;
        if (!int_file.empty()) {
            std::ifstream in(int_file);
            eta = assignment_from_json(Json::parse(in), lt);
        } else if (!int_delta.empty()) {
            eta = delta_vertex(g, parse_vertex_arg(*g, int_delta, "--delta-vertex"));
        } else if (!int_face.empty()) {
            eta = delta_face(g, parse_face(*g, int_face));
        } else {
            throw CLI::ValidationError("integrate", "one of --file, --delta-vertex, --face is required");
        }
        RationalFunction value = integrate(*eta);
        if (int_opts.format == "json") {
            Json out;
            out["value"] = to_json(value);
            out["polynomial"] = value.as_polynomial().has_value();
            emit(out);
        } else {
            std::cout << to_text(value) << (value.as_polynomial() ? "  (polynomial)" : "  (not a polynomial)")
                      << "\n";
        }
        return 0;
    }
    if (cmd_morse->parsed()) {
        LieType lt = LieType::parse(morse_opts.type);
        Word word = parse_word(morse_opts.word);
        Polarization xi = parse_xi(morse_xi, lt.rank);
        GroebnerOptions gopts;
        gopts.pair_budget = pair_budget;
        MorseGeneratorSet set = morse_generators(lt, word, xi, gopts);
        if (morse_opts.format == "json") {
            emit(morse_to_json(set));
        } else {
            const BSGraph& g = *set.graph;
            for (const MorseVertexReport& report : set.per_vertex) {
                std::cout << "vertex " << g.vertex_name(report.vertex) << "\n  flow-up:";
                for (VertexMask v : report.flow_up)
                    std::cout << " " << g.vertex_name(v);
                std::cout << "\n";
                for (std::size_t i = 0; i < report.generators.size(); ++i)
                    std::cout << "  eta_" << (i + 1) << ": "
                              << render_values_row(g, report.generators[i].values()) << "\n";
                std::cout << "  ideal: <";
                for (std::size_t i = 0; i < report.ideal_minimal.size(); ++i)
                    std::cout << (i ? ", " : "") << to_text(report.ideal_minimal[i]);
                std::cout << ">" << (report.principal ? "  (principal)" : "") << "\n";
            }
            std::cout << "minimal generators:";
            for (const GeneratorRef& ref : set.minimal)
                std::cout << " " << g.vertex_name(ref.vertex) << "#" << (ref.index + 1);
            std::cout << "\n";
        }
        return 0;
    }
    if (cmd_oracle->parsed()) {
        LieType lt = LieType::parse(oracle_opts.type);
        Word word = parse_word(oracle_opts.word);
        BasisMatrix a = assignment_basis(lt, word);
        Json rows = Json::array();
        bool all_equal = true;
        for (int k = 0; k <= max_degree; ++k) {
            int brute = assignment_slice_dimension(*a.graph, k);
            int span = basis_span_slice_dimension(a, k);
            all_equal = all_equal && brute == span;
            if (oracle_opts.format == "json") {
                Json row;
                row["k"] = k;
                row["brute_dim"] = brute;
                row["span_dim"] = span;
                row["equal"] = brute == span;
                rows.push_back(std::move(row));
            } else {
                std::cout << "k=" << k << "  brute=" << brute << "  span=" << span << "  "
                          << (brute == span ? "ok" : "MISMATCH") << "\n";
            }
        }
        if (oracle_opts.format == "json") {
            Json out;
            out["rows"] = std::move(rows);
            out["all_equal"] = all_equal;
            emit(out);
        }
        return all_equal ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bsassign::RrefObstruction& e) {
        std::cerr << "error: " << e.what() << "\n" << e.dump();
        return 3;
    } catch (const bsassign::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const bsassign::NotPolarizing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
