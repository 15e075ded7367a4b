// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "anyon/anyon_model.h"
#include "anyon/braid.h"
#include "anyon/errors.h"
#include "anyon/fr_symbols.h"
#include "anyon/knot.h"
#include "anyon/state_vector.h"
#include "anyon/string_net.h"
#include "anyon/surface_code.h"
#include "anyon/trace_estimator.h"

namespace anyon::cli {

using io::Json;

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
    }
    return out;
}

double parse_double(const std::string &text, const char *what) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception &) {
        throw InputError(std::string("cannot read ") + what + " from '" + text + "'");
    }
}

std::complex<double> parse_complex(const std::string &text) {
    auto parts = split(text, ',');
    if (parts.size() == 1) {
        return {parse_double(parts[0], "a real number"), 0};
    }
    if (parts.size() != 2) {
        throw InputError("complex values are written re,im; got '" + text + "'");
    }
    return {parse_double(parts[0], "a real part"), parse_double(parts[1], "an imaginary part")};
}

std::vector<Label> parse_labels(const AnyonModel &model, const std::string &text) {
    std::vector<Label> out;
    for (const auto &name : split(text, ',')) {
        out.push_back(model.label(name));
    }
    if (out.empty()) {
        throw InputError("need at least one input label");
    }
    return out;
}

std::vector<int> parse_ints(const std::string &text) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    for (const auto &s : split(text, ',')) {
        double v = parse_double(s, "an integer");
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            throw InputError("'" + s + "' is not an integer");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

AnyonModel load_model(const std::string &name, const std::string &file) {
    if (!file.empty()) {
        return io::model_from_json(read_json_file(file));
    }
    return AnyonModel::named(name);
}

std::vector<std::string> names_of(const AnyonModel &model, std::span<const Label> labels) {
    std::vector<std::string> out;
    for (Label l : labels) {
        out.push_back(model.name(l));
    }
    return out;
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(io::complex_to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

Json header(const std::string &command) {
    Json out;
    out["schema"] = 1;
    out["command"] = command;
    return out;
}

struct Tables {
    FSymbolTable f;
    RSymbolTable r;
};

// Fibonacci data for the Fibonacci model, trivial F = R = 1 for any other model.
Tables default_tables(const AnyonModel &model) {
    if (model.names() == AnyonModel::fibonacci().names() && model.rules().size() == 5) {
        FibonacciData fib = fibonacci_data();
        return {fib.f, fib.r};
    }
    return {FSymbolTable::filled(model, 1), RSymbolTable::filled(model, 1)};
}

ConsistencyForm parse_form(const std::string &s) {
    if (s == "auto") {
        return ConsistencyForm::automatic;
    }
    if (s == "unoriented") {
        return ConsistencyForm::unoriented;
    }
    if (s == "oriented") {
        return ConsistencyForm::oriented;
    }
    throw InputError("--form must be auto, unoriented or oriented");
}

struct RepChoice {
    std::string rep = "fib";
    double phi = std::numbers::pi;
    std::string t = "0,-1";
};

BraidRep make_rep(const RepChoice &c) {
    if (c.rep == "fib") {
        return fib_qubit_rep();
    }
    if (c.rep == "tl") {
        return tl_b3_rep(parse_complex(c.t));
    }
    if (c.rep == "abelian") {
        return abelian_rep(c.phi);
    }
    throw InputError("--rep must be fib, tl or abelian");
}

Eigen::Matrix2cd named_gate(const std::string &name) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    double h = 1 / std::sqrt(2.0);
    if (name == "identity") {
        m << 1, 0, 0, 1;
    } else if (name == "not") {
        m << 0, 1, 1, 0;
    } else if (name == "hadamard") {
        m << h, h, h, -h;
    } else if (name == "z") {
        m << 1, 0, 0, -1;
    } else if (name == "s") {
        m << 1, 0, 0, C(0, 1);
    } else if (name == "t") {
        m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
    } else {
        throw InputError("unknown gate '" + name + "' (identity, not, hadamard, z, s, t)");
    }
    return m;
}

Eigen::Matrix2cd parse_matrix(const std::string &text) {
    auto parts = split(text, ',');
    if (parts.size() != 8) {
        throw InputError("--matrix takes 8 numbers: re,im of m00, m01, m10, m11");
    }
    Eigen::Matrix2cd m;
    for (int k = 0; k < 4; k++) {
        m(k / 2, k % 2) = {parse_double(parts[2 * k], "a matrix entry"), parse_double(parts[2 * k + 1], "a matrix entry")};
    }
    return m;
}

Json syndrome_to_json(const Syndrome &syn) {
    Json charges = Json::array();
    Json fluxes = Json::array();
    for (size_t v = 0; v < syn.vertex.size(); v++) {
        if (syn.vertex[v]) {
            charges.push_back({v, syn.vertex[v]});
        }
    }
    for (size_t f = 0; f < syn.face.size(); f++) {
        if (syn.face[f]) {
            fluxes.push_back({f, syn.face[f]});
        }
    }
    Json out;
    out["charges"] = charges;
    out["fluxes"] = fluxes;
    return out;
}

Json homology_to_json(const HomologyClass &h) {
    Json out;
    out["charge"] = {h.charge.x, h.charge.y};
    out["flux"] = {h.flux.x, h.flux.y};
    return out;
}

std::string pauli_label(int mask) {
    if (mask == 0) {
        return "I";
    }
    std::string out;
    for (int k = 0; k < 3; k++) {
        if (mask >> k & 1) {
            out += "Z" + std::to_string(k);
        }
    }
    return out;
}

// A subcommand: registers its options, then runs once parsed.
struct Command {
    std::string name;
    std::string help;
    std::function<void(CLI::App &)> setup;
    std::function<Json(CommandResult &)> action;
};

}  // namespace

std::vector<std::string> subcommands() {
    return {"fusion-dim", "fusion-trees", "fuse",      "qdims",   "entropy",       "cf-stats",
            "su2k",       "tables",       "pentagon",  "hexagon", "braid-check",   "compile",
            "jones",      "bracket",      "trace-est", "toric",   "decode",        "dyon",
            "interferometer", "stringnet-check", "honeycomb"};
}

CommandResult run(std::span<const std::string> args) {
    CommandResult result;
    CLI::App app{"Anyon algebra, braids, knot invariants and topological codes", "anyon"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    // Option storage shared across subcommands; only the parsed one reads it.
    std::string model_name = "fibonacci";
    std::string model_file;
    std::string inputs;
    std::string total;
    std::string label_a;
    std::string label_b;
    uint64_t cap = kDefaultTreeCap;
    double commutation_tolerance = 1e-12;
    int max_iterations = QuantumDimensionOptions{}.max_iterations;
    std::string base = "e";
    int cf_j = 1;
    int cf_p = 1;
    std::string spin1;
    std::string spin2;
    std::string spin;
    int level = 2;
    std::string f_file;
    std::string r_file;
    std::string form = "auto";
    RepChoice rep;
    int strands = 3;
    std::string braid_text;
    std::string target = "not";
    std::string matrix_text;
    int max_len = 10;
    int compile_cap = kDefaultCompileCap;
    std::optional<std::string> t_value;
    std::string method = "state-sum";
    int bracket_cap = kDefaultBracketCap;
    uint64_t shots = 10000;
    uint64_t seed = 0;
    std::optional<size_t> basis_state;
    unsigned threads = 1;
    int qudit = 2;
    std::string error_file;
    int random_errors = 0;
    std::string path_kind = "charge";
    int path_start = 0;
    std::string path_edges;
    int path_power = 1;
    int r1 = 1;
    int s1 = 0;
    int r2 = 0;
    int s2 = 1;
    double beta = std::numbers::pi / 4;
    int splitter = 0;
    std::string loop_faces;
    bool braid_flag = false;
    double jx = 1;
    double jy = 1;
    double jz = 1;

    auto model_opts = [&](CLI::App &c) {
        c.add_option("--model", model_name, "fibonacci, toric, trivial or z_d:<d>")->capture_default_str();
        c.add_option("--model-file", model_file, "Model JSON file (overrides --model)");
    };
    // Defaults differ per subcommand, so each one gets its own slot.
    std::map<std::string, double> tolerances;
    auto tol_opt = [&](CLI::App &c, double def) {
        double &slot = tolerances[c.get_name()] = def;
        c.add_option("--tolerance", slot, "Pass threshold")->capture_default_str();
    };
    auto braid_opt = [&](CLI::App &c) {
        c.add_option("--braid", braid_text, "Braid word, e.g. \"B3: s1 s2^-1\"")->required();
    };

    double tolerance = 0;
    int lx = 2;
    int ly = 2;
    std::vector<Command> commands;
    commands.push_back({"fusion-dim", "Dimension of a fusion space",
                        [&](CLI::App &c) {
                            model_opts(c);
                            c.add_option("--inputs", inputs, "Comma-separated labels")->required();
                            c.add_option("--total", total, "Total charge")->required();
                        },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            auto in = parse_labels(m, inputs);
                            Json out = header("fusion-dim");
                            out["inputs"] = names_of(m, in);
                            out["total"] = total;
                            out["dim"] = fusion_space_dim(m, in, m.label(total));
                            return out;
                        }});
    commands.push_back({"fusion-trees", "List left-associated fusion trees",
                        [&](CLI::App &c) {
                            model_opts(c);
                            c.add_option("--inputs", inputs, "Comma-separated labels")->required();
                            c.add_option("--total", total, "Total charge")->required();
                            c.add_option("--cap", cap, "Maximum number of trees")->capture_default_str();
                        },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            auto in = parse_labels(m, inputs);
                            auto trees = enumerate_fusion_trees(m, in, m.label(total), cap);
                            Json list = Json::array();
                            for (const auto &t : trees) {
                                Json entry;
                                entry["internal"] = names_of(m, t.internal);
                                entry["copies"] = t.copies;
                                list.push_back(entry);
                            }
                            Json out = header("fusion-trees");
                            out["inputs"] = names_of(m, in);
                            out["total"] = total;
                            out["count"] = trees.size();
                            out["trees"] = list;
                            return out;
                        }});
    commands.push_back({"fuse", "Fusion channels of two labels",
                        [&](CLI::App &c) {
                            model_opts(c);
                            c.add_option("a", label_a, "First label")->required();
                            c.add_option("b", label_b, "Second label")->required();
                        },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            Json list = Json::array();
                            for (auto ch : fuse(m, m.label(label_a), m.label(label_b))) {
                                list.push_back({m.name(ch.label), ch.multiplicity});
                            }
                            Json out = header("fuse");
                            out["channels"] = list;
                            return out;
                        }});
    commands.push_back({"qdims", "Quantum dimensions",
                        [&](CLI::App &c) {
                            model_opts(c);
                            tol_opt(c, QuantumDimensionOptions{}.tolerance);
                            c.add_option("--max-iterations", max_iterations)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            auto dims = quantum_dimensions(m, {tolerance, max_iterations});
                            Json d = Json::object();
                            Json ann = Json::object();
                            for (size_t a = 0; a < m.size(); a++) {
                                d[m.name(static_cast<Label>(a))] = dims[a];
                                ann[m.name(static_cast<Label>(a))] = annihilation_probability(m, static_cast<Label>(a));
                            }
                            Json out = header("qdims");
                            out["dims"] = d;
                            out["annihilation_probability"] = ann;
                            out["product_rule_residual"] = product_rule_residual(m, dims);
                            return out;
                        }});
    commands.push_back({"entropy", "Total quantum dimension and topological entropy",
                        [&](CLI::App &c) {
                            model_opts(c);
                            c.add_option("--base", base, "Logarithm base: e or a number")->capture_default_str();
                        },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            double b = base == "e" ? std::exp(1.0) : parse_double(base, "a log base");
                            if (!(b > 0) || b == 1) {
                                throw InputError("log base must be positive and not 1");
                            }
                            TotalDimension td = total_dimension_entropy(m, b);
                            Json out = header("entropy");
                            out["base"] = base;
                            out["total_dimension"] = td.total;
                            out["entropy"] = td.entropy;
                            return out;
                        }});
    commands.push_back({"cf-stats", "Composite-fermion statistics 2j/(2jp+1)",
                        [&](CLI::App &c) {
                            c.add_option("--j", cf_j)->capture_default_str();
                            c.add_option("--p", cf_p)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            Rational q = composite_fermion_statistics(cf_j, cf_p);
                            Json out = header("cf-stats");
                            out["numerator"] = q.num;
                            out["denominator"] = q.den;
                            out["value"] = static_cast<double>(q.num) / q.den;
                            return out;
                        }});
    commands.push_back({"su2k", "SU(2)_k admissibility of (j1, j2, j)",
                        [&](CLI::App &c) {
                            c.add_option("--j1", spin1)->required();
                            c.add_option("--j2", spin2)->required();
                            c.add_option("--j", spin)->required();
                            c.add_option("--k", level)->required();
                        },
                        [&](CommandResult &) {
                            Json out = header("su2k");
                            out["admissible"] = su2k_admissible(
                                HalfInteger::parse(spin1), HalfInteger::parse(spin2), HalfInteger::parse(spin), level);
                            return out;
                        }});
    commands.push_back({"tables", "Print a model with its F and R tables",
                        [&](CLI::App &c) { model_opts(c); },
                        [&](CommandResult &) {
                            AnyonModel m = load_model(model_name, model_file);
                            Tables t = default_tables(m);
                            Json out = header("tables");
                            out["model"] = io::model_to_json(m);
                            out["F"] = io::f_table_to_json(t.f)["F"];
                            out["R"] = io::r_table_to_json(t.r)["R"];
                            return out;
                        }});
    auto table_opts = [&](CLI::App &c) {
        model_opts(c);
        c.add_option("--f-file", f_file, "F table JSON (includes its model)");
        c.add_option("--form", form, "auto, unoriented or oriented")->capture_default_str();
        tol_opt(c, 1e-12);
    };
    auto load_tables = [&]() {
        if (!f_file.empty()) {
            FSymbolTable f = io::f_table_from_json(read_json_file(f_file));
            RSymbolTable r = r_file.empty() ? default_tables(f.model()).r
                                            : io::r_table_from_json(read_json_file(r_file), f.model());
            return Tables{f, r};
        }
        Tables t = default_tables(load_model(model_name, model_file));
        if (!r_file.empty()) {
            t.r = io::r_table_from_json(read_json_file(r_file), t.f.model());
        }
        return t;
    };
    commands.push_back({"pentagon", "Pentagon and unitarity residuals",
                        [&](CLI::App &c) { table_opts(c); },
                        [&](CommandResult &res) {
                            Tables t = load_tables();
                            double pent = pentagon_residual(t.f, parse_form(form));
                            double unit = f_unitarity_residual(t.f);
                            Json out = header("pentagon");
                            out["residual"] = pent;
                            out["unitarity_residual"] = unit;
                            out["tolerance"] = tolerance;
                            out["pass"] = pent < tolerance && unit < tolerance;
                            if (!out["pass"].get<bool>()) {
                                res.status = kInvariantError;
                                res.message = "pentagon or unitarity residual above tolerance";
                            }
                            return out;
                        }});
    commands.push_back({"hexagon", "Hexagon residual",
                        [&](CLI::App &c) {
                            table_opts(c);
                            c.add_option("--r-file", r_file, "R table JSON");
                        },
                        [&](CommandResult &res) {
                            Tables t = load_tables();
                            double hex = hexagon_residual(t.f, t.r, parse_form(form));
                            Json out = header("hexagon");
                            out["residual"] = hex;
                            out["tolerance"] = tolerance;
                            out["pass"] = hex < tolerance;
                            if (!(hex < tolerance)) {
                                res.status = kInvariantError;
                                res.message = "hexagon residual above tolerance";
                            }
                            return out;
                        }});
    commands.push_back({"braid-check", "Braid relations of a representation",
                        [&](CLI::App &c) {
                            c.add_option("--rep", rep.rep, "fib, tl or abelian")->capture_default_str();
                            c.add_option("--phi", rep.phi, "Abelian phase")->capture_default_str();
                            c.add_option("--t", rep.t, "Temperley-Lieb parameter re,im")->capture_default_str();
                            c.add_option("--strands", strands, "Strand count checked")->capture_default_str();
                            c.add_option("--braid", braid_text, "Also evaluate this word");
                            tol_opt(c, 1e-12);
                        },
                        [&](CommandResult &res) {
                            BraidRep r = make_rep(rep);
                            double resid = relation_residual(r, strands);
                            Json out = header("braid-check");
                            out["rep"] = r.name;
                            out["dimension"] = r.dimension;
                            out["unitary"] = r.unitary;
                            out["relation_residual"] = resid;
                            bool pass = resid < tolerance;
                            if (rep.rep == "tl") {
                                auto [v1, v2] = tl_generators(parse_complex(rep.t));
                                double tl = std::max((v1 * v2 * v1 - v1).cwiseAbs().maxCoeff(),
                                                     (v2 * v1 * v2 - v2).cwiseAbs().maxCoeff());
                                out["temperley_lieb_residual"] = tl;
                                pass = pass && tl < tolerance;
                            }
                            if (!braid_text.empty()) {
                                out["braid"] = braid_text;
                                out["matrix"] = matrix_to_json(evaluate(r, parse_braid(braid_text)));
                            }
                            out["tolerance"] = tolerance;
                            out["pass"] = pass;
                            if (!pass) {
                                res.status = kInvariantError;
                                res.message = "braid relation residual above tolerance";
                            }
                            return out;
                        }});
    commands.push_back({"compile", "Closest Fibonacci braid to a one-qubit gate",
                        [&](CLI::App &c) {
                            c.add_option("--target", target, "identity, not, hadamard, z, s or t")
                                ->capture_default_str();
                            c.add_option("--matrix", matrix_text, "Explicit target: 8 numbers re,im row-major");
                            c.add_option("--max-len", max_len)->capture_default_str();
                            c.add_option("--cap", compile_cap, "Largest allowed --max-len")->capture_default_str();
                        },
                        [&](CommandResult &) {
                            Eigen::Matrix2cd u = matrix_text.empty() ? named_gate(target) : parse_matrix(matrix_text);
                            CompiledGate g = compile_gate(u, max_len, compile_cap);
                            Json out = header("compile");
                            out["target"] = matrix_text.empty() ? target : "matrix";
                            out["max_len"] = max_len;
                            out["word"] = format_braid(g.word);
                            out["letters"] = g.word.letters;
                            out["distance"] = g.distance;
                            return out;
                        }});
    auto knot_opts = [&](CLI::App &c) {
        braid_opt(c);
        c.add_option("--t", t_value, "Evaluate at t = re,im");
        c.add_option("--cap", bracket_cap, "Maximum crossings")->capture_default_str();
        c.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    };
    commands.push_back({"jones", "Jones polynomial of a braid closure",
                        [&](CLI::App &c) { knot_opts(c); },
                        [&](CommandResult &) {
                            BraidWord w = parse_braid(braid_text);
                            LaurentPoly p = jones(w, {bracket_cap, threads});
                            Json out = header("jones");
                            out["braid"] = format_braid(w);
                            out["writhe"] = writhe(w);
                            out["poly"] = io::poly_to_json(p);
                            if (t_value) {
                                out["value"] = io::complex_to_json(p.evaluate(parse_complex(*t_value)));
                            }
                            return out;
                        }});
    commands.push_back({"bracket", "Kauffman bracket of a braid closure",
                        [&](CLI::App &c) {
                            knot_opts(c);
                            c.add_option("--method", method, "state-sum or tl (B3 trace formula, needs --t)")
                                ->capture_default_str();
                        },
                        [&](CommandResult &) {
                            BraidWord w = parse_braid(braid_text);
                            Json out = header("bracket");
                            out["braid"] = format_braid(w);
                            out["crossings"] = closure(w).crossings.size();
                            if (method == "tl") {
                                if (!t_value) {
                                    throw InputError("--method tl needs --t");
                                }
                                out["value"] = io::complex_to_json(bracket_tl_b3(w, parse_complex(*t_value)));
                                return out;
                            }
                            if (method != "state-sum") {
                                throw InputError("--method must be state-sum or tl");
                            }
                            LaurentPoly p = kauffman_bracket(w, {bracket_cap, threads});
                            out["poly"] = io::poly_to_json(p);
                            if (t_value) {
                                out["value"] = io::complex_to_json(p.evaluate(parse_complex(*t_value)));
                            }
                            return out;
                        }});
    commands.push_back({"trace-est", "Simulated Hadamard-test trace estimate",
                        [&](CLI::App &c) {
                            braid_opt(c);
                            c.add_option("--rep", rep.rep, "fib or tl")->capture_default_str();
                            c.add_option("--t", rep.t, "Temperley-Lieb parameter re,im")->capture_default_str();
                            c.add_option("--shots", shots)->capture_default_str();
                            c.add_option("--seed", seed)->capture_default_str();
                            c.add_option("--basis-state", basis_state, "Pure-state variant on this basis state");
                            c.add_option("--threads", threads)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            if (rep.rep == "abelian") {
                                throw InputError("trace-est takes --rep fib or tl");
                            }
                            BraidRep r = make_rep(rep);
                            BraidWord w = parse_braid(braid_text);
                            if (w.strands != r.strands) {
                                throw InputError("the representation acts on B" + std::to_string(r.strands));
                            }
                            // Gamma(r_k) ... Gamma(r_1), listed left to right.
                            std::vector<Matrix> mats;
                            for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
                                mats.push_back(r.letter(*it));
                            }
                            if (mats.empty()) {
                                mats.push_back(Matrix::Identity(r.dimension, r.dimension));
                            }
                            TraceEstimate est = hadamard_test_trace(mats, {shots, seed, basis_state, kDefaultTraceDimCap, threads});
                            Json out = header("trace-est");
                            out["re"] = est.value.real();
                            out["im"] = est.value.imag();
                            out["stderr_re"] = est.stderr_re;
                            out["stderr_im"] = est.stderr_im;
                            out["exact"] = io::complex_to_json(exact_normalized_trace(mats));
                            out["shots"] = est.shots;
                            out["seed"] = est.seed;
                            return out;
                        }});
    std::map<std::string, std::pair<int, int>> sizes;
    auto lattice_opts = [&](CLI::App &c, int def) {
        auto &slot = sizes[c.get_name()] = {def, def};
        c.add_option("--lx", slot.first)->capture_default_str();
        c.add_option("--ly", slot.second)->capture_default_str();
    };
    commands.push_back({"toric", "Toric code degeneracy, stabilizer checks and braiding phases",
                        [&](CLI::App &c) {
                            lattice_opts(c, 2);
                            c.add_option("--d", qudit, "Qudit dimension (prime)")->capture_default_str();
                        },
                        [&](CommandResult &res) {
                            TorusLattice lat(lx, ly);
                            Stabilizers stab = build_stabilizers(lat, qudit);
                            bool commuting = true;
                            std::vector<const PauliString *> all;
                            for (const auto &s : stab.vertices) {
                                all.push_back(&s);
                            }
                            for (const auto &s : stab.faces) {
                                all.push_back(&s);
                            }
                            for (size_t i = 0; i < all.size() && commuting; i++) {
                                for (size_t j = i + 1; j < all.size(); j++) {
                                    if (commutation_phase(*all[i], *all[j]) != 0) {
                                        commuting = false;
                                        break;
                                    }
                                }
                            }
                            PauliString vprod(lat.edge_count(), qudit);
                            PauliString fprod(lat.edge_count(), qudit);
                            for (const auto &s : stab.vertices) {
                                vprod *= s;
                            }
                            for (const auto &s : stab.faces) {
                                fprod *= s;
                            }
                            Json checks;
                            checks["vertex_operators"] = stab.vertices.size();
                            checks["face_operators"] = stab.faces.size();
                            checks["all_commute"] = commuting;
                            checks["vertex_product_identity"] = vprod.is_identity();
                            checks["face_product_identity"] = fprod.is_identity();
                            Json table = Json::array();
                            const std::pair<int, int> dyons[] = {{1, 0}, {0, 1}, {1, 1}};
                            for (auto a : dyons) {
                                for (auto b : dyons) {
                                    int p = dyon_braiding_phase(qudit, a, b);
                                    Json e;
                                    e["dyon1"] = {a.first, a.second};
                                    e["dyon2"] = {b.first, b.second};
                                    e["phase_exponent"] = p;
                                    e["phase"] = io::complex_to_json(std::polar(1.0, std::numbers::pi * p / qudit));
                                    table.push_back(e);
                                }
                            }
                            Json out = header("toric");
                            out["lattice"] = io::lattice_to_json(lat);
                            out["d"] = qudit;
                            out["degeneracy"] = ground_space_dim(lat, qudit);
                            out["stabilizers"] = checks;
                            out["braiding"] = table;
                            if (!commuting || !vprod.is_identity() || !fprod.is_identity()) {
                                res.status = kInvariantError;
                                res.message = "stabilizer checks failed";
                            }
                            return out;
                        }});
    commands.push_back({"decode", "Syndrome, greedy correction and homology of an error",
                        [&](CLI::App &c) {
                            lattice_opts(c, 5);
                            c.add_option("--d", qudit)->capture_default_str();
                            c.add_option("--error-file", error_file, "Error as Pauli-string JSON");
                            c.add_option("--random", random_errors, "Number of random single-edge errors");
                            c.add_option("--seed", seed)->capture_default_str();
                            c.add_option("--path-kind", path_kind, "charge or flux")->capture_default_str();
                            c.add_option("--path-start", path_start, "Start vertex (charge) or face (flux)");
                            c.add_option("--path-edges", path_edges, "Comma-separated edges of a string error");
                            c.add_option("--path-power", path_power)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            TorusLattice lat(lx, ly);
                            PauliString error(lat.edge_count(), qudit);
                            if (!error_file.empty()) {
                                error = io::pauli_from_json(read_json_file(error_file));
                            }
                            if (!path_edges.empty()) {
                                if (path_kind != "charge" && path_kind != "flux") {
                                    throw InputError("--path-kind must be charge or flux");
                                }
                                StringKind kind = path_kind == "charge" ? StringKind::charge : StringKind::flux;
                                error *= string_operator(lat, qudit, {path_start, parse_ints(path_edges)}, kind, path_power);
                            }
                            std::mt19937_64 rng(seed);
                            for (int k = 0; k < random_errors; k++) {
                                size_t e = rng() % lat.edge_count();
                                int power = 1 + static_cast<int>(rng() % (qudit - 1));
                                if (rng() % 2) {
                                    error.add_x(e, power);
                                } else {
                                    error.add_z(e, power);
                                }
                            }
                            Syndrome syn = syndrome(lat, error);
                            PauliString fix = correct(lat, syn);
                            PauliString composite = error * fix;
                            HomologyClass h = homology_class(lat, composite);
                            Json out = header("decode");
                            out["lattice"] = io::lattice_to_json(lat);
                            out["error"] = io::pauli_to_json(error);
                            out["syndrome"] = syndrome_to_json(syn);
                            out["correction"] = io::pauli_to_json(fix);
                            out["residual_syndrome_empty"] = syndrome(lat, composite).empty();
                            out["homology"] = homology_to_json(h);
                            out["logical_error"] = !h.trivial();
                            return out;
                        }});
    commands.push_back({"dyon", "Braiding phase of two dyons",
                        [&](CLI::App &c) {
                            c.add_option("--d", qudit)->capture_default_str();
                            c.add_option("--r1", r1)->capture_default_str();
                            c.add_option("--s1", s1)->capture_default_str();
                            c.add_option("--r2", r2)->capture_default_str();
                            c.add_option("--s2", s2)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            int p = dyon_braiding_phase(qudit, {r1, s1}, {r2, s2});
                            Json out = header("dyon");
                            out["phase_exponent"] = p;
                            out["phase"] = io::complex_to_json(std::polar(1.0, std::numbers::pi * p / qudit));
                            return out;
                        }});
    commands.push_back({"interferometer", "Flux-charge interferometer on the qubit toric code",
                        [&](CLI::App &c) {
                            lattice_opts(c, 3);
                            c.add_option("--beta", beta, "Dwell phase")->capture_default_str();
                            c.add_option("--edge", splitter, "Splitter edge")->capture_default_str();
                            c.add_option("--loop-faces", loop_faces, "Faces enclosed by the braiding loop");
                            c.add_flag("--braid", braid_flag, "Report the braiding run as z_expectation");
                        },
                        [&](CommandResult &) {
                            TorusLattice lat(lx, ly);
                            InterferometerSetup setup{splitter, parse_ints(loop_faces)};
                            InterferometerReading r = interferometer_phase(lat, beta, setup);
                            Json out = header("interferometer");
                            out["lattice"] = io::lattice_to_json(lat);
                            out["beta"] = beta;
                            out["no_braid"] = r.no_braid;
                            out["braid"] = r.braid;
                            out["z_expectation"] = braid_flag ? r.braid : r.no_braid;
                            out["phase"] = r.phase;
                            return out;
                        }});
    commands.push_back({"stringnet-check", "Fibonacci string-net face and vertex term checks",
                        [&](CLI::App &c) {
                            tol_opt(c, 1e-10);
                            c.add_option("--commutation-tolerance", commutation_tolerance)->capture_default_str();
                        },
                        [&](CommandResult &res) {
                            FaceTermReport rep_ = face_term_checks();
                            VertexProjector vp = vertex_projector();
                            Json pauli = Json::object();
                            for (int mask = 0; mask < 8; mask++) {
                                pauli[pauli_label(mask)] = vp.pauli[mask];
                            }
                            bool pass = rep_.hermiticity < tolerance && rep_.projector < tolerance &&
                                        rep_.eigenvalue < tolerance && rep_.vertex_commutation < commutation_tolerance;
                            Json out = header("stringnet-check");
                            out["constrained_dim"] = rep_.constrained_dim;
                            out["face_term_rank"] = rep_.rank;
                            out["hermiticity_residual"] = rep_.hermiticity;
                            out["projector_residual"] = rep_.projector;
                            out["eigenvalue_residual"] = rep_.eigenvalue;
                            out["vertex_commutation_residual"] = rep_.vertex_commutation;
                            out["vertex_projector_pauli"] = pauli;
                            out["pass"] = pass;
                            if (!pass) {
                                res.status = kInvariantError;
                                res.message = "string-net residuals above tolerance";
                            }
                            return out;
                        }});
    commands.push_back({"honeycomb", "Honeycomb phase and effective coupling",
                        [&](CLI::App &c) {
                            c.add_option("--jx", jx)->capture_default_str();
                            c.add_option("--jy", jy)->capture_default_str();
                            c.add_option("--jz", jz)->capture_default_str();
                        },
                        [&](CommandResult &) {
                            Json out = header("honeycomb");
                            out["phase"] = honeycomb_phase(jx, jy, jz) == HoneycombPhase::gapless ? "gapless" : "gapped";
                            out["effective_coupling"] = jz == 0 ? Json(nullptr) : Json(honeycomb_effective_coupling(jx, jy, jz));
                            return out;
                        }});

    std::vector<CLI::App *> subs;
    for (auto &cmd : commands) {
        CLI::App *sub = app.add_subcommand(cmd.name, cmd.help);
        cmd.setup(*sub);
        subs.push_back(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        CLI::App *target_app = &app;
        for (auto *s : subs) {
            if (s->parsed()) {
                target_app = s;
            }
        }
        result.message = target_app->help();
        return result;
    } catch (const CLI::CallForAllHelp &) {
        result.message = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError &e) {
        result.status = kInputError;
        result.message = std::string(e.what()) + "\n\n" + app.help();
        return result;
    }

    for (size_t i = 0; i < commands.size(); i++) {
        if (!subs[i]->parsed()) {
            continue;
        }
        tolerance = tolerances.count(commands[i].name) ? tolerances[commands[i].name] : 0.0;
        std::tie(lx, ly) = sizes.count(commands[i].name) ? sizes[commands[i].name] : std::pair{2, 2};
        try {
            result.payload = commands[i].action(result);
        } catch (const InputError &e) {
            result = {kInputError, nullptr, std::string("error: ") + e.what()};
        } catch (const ResourceError &e) {
            result = {kResourceError, nullptr, std::string("error: ") + e.what()};
        } catch (const InvariantError &e) {
            result = {kInvariantError, nullptr, std::string("error: ") + e.what()};
        } catch (const NumericError &e) {
            result = {kInvariantError, nullptr, std::string("error: ") + e.what()};
        }
        return result;
    }
    result.status = kInputError;
    result.message = app.help();
    return result;
}

std::string render_stdout(const CommandResult &result) {
    std::string out;
    if (!result.payload.is_null()) {
        out = result.payload.dump(2) + "\n";
    }
    if (result.status == kOk && !result.message.empty()) {
        out += result.message;
    }
    return out;
}

}  // namespace anyon::cli
