// dlower command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dlower/corpus.hpp"
#include "dlower/json_io.hpp"
#include "dlower/lowering.hpp"
#include "dlower/qracah.hpp"
#include "dlower/verify.hpp"

using namespace dlower;

namespace {

enum Exit { Ok = 0, BadInput = 1, Disagreement = 2 };

struct Options {
    std::string input;
    std::string q, a, b;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_n = 10;
    std::size_t min_n = 3;
    std::string kinds;
    std::string format = "json";
    std::string basis = "tau";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A single data object, a plain array of them, or a corpus.
std::vector<Data> load_data(const std::string& path, bool& many) {
    const Json j = parse_json(read_file(path));
    many = j.is_array();
    std::vector<Data> out;
    if (!many) {
        out.push_back(data_from_json(j));
        return out;
    }
    for (const auto& e : j) out.push_back(data_from_json(e));
    return out;
}

QRacahParams params_from(const Options& o) {
    if (o.q.empty() || o.a.empty() || o.b.empty() || o.n == 0) throw InputError("need --q, --a, --b and --n >= 1");
    return {parse_scalar(o.q), parse_scalar(o.a), parse_scalar(o.b), o.n};
}

void print_report_text(const Report& r) {
    for (const auto& e : r) {
        std::cout << (e.pass ? "pass " : "FAIL ") << e.identity;
        if (e.first_mismatch) std::cout << " at (" << e.first_mismatch->first << ", " << e.first_mismatch->second << ")";
        std::cout << '\n';
    }
}

void print_matrix_text(const std::string& name, const OperatorMatrix& m) {
    std::cout << name << " [" << to_string(m.basis) << "]\n";
    for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < m.matrix.cols(); ++j) std::cout << (j ? " " : "  ") << m.matrix(i, j);
        std::cout << '\n';
    }
}

int cmd_classify(const Options& o) {
    bool many = false;
    const auto all = load_data(o.input, many);
    Json out = Json::array();
    bool agree = true;
    for (const auto& d : all) {
        const CrossCheck cc = cross_check(d);
        agree = agree && cc.agree;
        if (o.format == "text") {
            std::cout << to_string(cc.classification.verdict);
            for (const auto& hit : cc.classification.cases) {
                std::cout << ' ' << to_string(hit.kind);
                if (hit.theta) std::cout << "(theta=" << *hit.theta << ')';
            }
            std::cout << " dim=" << cc.dim << (cc.agree ? " agree" : " DISAGREE") << '\n';
        } else {
            out.push_back(to_json(cc));
        }
    }
    if (o.format != "text") std::cout << (many ? out : out.front()).dump(2) << '\n';
    return agree ? Ok : Disagreement;
}

int cmd_verify(const Options& o) {
    bool many = false;
    const auto all = load_data(o.input, many);
    Json out = Json::array();
    bool ok = true;
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Report r = verify_data(all[k]);
        ok = ok && all_pass(r);
        if (o.format == "text") {
            if (many) std::cout << "# entry " << k << '\n';
            print_report_text(r);
        } else {
            out.push_back(to_json(r));
        }
    }
    if (o.format != "text") std::cout << (many ? out : out.front()).dump(2) << '\n';
    return ok ? Ok : Disagreement;
}

int cmd_matrices(const Options& o) {
    Json out = Json::object();
    std::vector<std::pair<std::string, OperatorMatrix>> mats;
    if (!o.input.empty()) {
        bool many = false;
        const auto all = load_data(o.input, many);
        if (many) throw InputError("matrices takes a single data object");
        const Data& d = all.front();
        const LoweringSolution sol = lowering_space(d);
        out["dim"] = sol.dim;
        if (sol.psi) mats.emplace_back("psi", *sol.psi);
        mats.emplace_back("delta", delta(d));
        mats.emplace_back("delta_inv", delta_inv(d));
    } else {
        const QRacahParams p = params_from(o);
        const Basis basis = parse_basis(o.basis);
        const KBM kbm = kbm_matrices(p, basis);
        mats.emplace_back("psi", OperatorMatrix{basis, psi_hat(p)});
        mats.emplace_back("K", kbm.k);
        mats.emplace_back("B", kbm.b);
        mats.emplace_back("M", kbm.m);
        mats.emplace_back("A", a_matrix(p, basis));
        mats.emplace_back("transition_from_tau", OperatorMatrix{basis, transition_from_tau(p, basis)});
    }
    if (o.format == "text") {
        for (const auto& [name, m] : mats) print_matrix_text(name, m);
    } else {
        for (const auto& [name, m] : mats) out[name] = to_json(m);
        std::cout << out.dump(2) << '\n';
    }
    return Ok;
}

int cmd_qracah_suite(const Options& o) {
    const Report r = full_suite(params_from(o));
    if (o.format == "text")
        print_report_text(r);
    else
        std::cout << to_json(r).dump(2) << '\n';
    return all_pass(r) ? Ok : Disagreement;
}

int cmd_gen_corpus(const Options& o) {
    CorpusOptions c;
    c.seed = o.seed;
    c.count = o.count;
    c.min_n = o.min_n;
    c.max_n = o.max_n;
    if (c.count == 0) throw InputError("--count must be at least 1");
    if (!o.kinds.empty()) {
        c.kinds.clear();
        std::stringstream ss(o.kinds);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                c.kinds.push_back(parse_corpus_kind(item));
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        }
    }
    if (c.max_n < c.min_n) throw InputError("--max-n must be at least --min-n");
    const auto corpus = generate_corpus(c);
    if (o.format == "text") {
        for (const auto& e : corpus) {
            std::cout << to_string(e.kind) << " a=";
            for (std::size_t i = 0; i < e.data.size(); ++i) std::cout << (i ? "," : "") << e.data.a()[i];
            std::cout << " b=";
            for (std::size_t i = 0; i < e.data.size(); ++i) std::cout << (i ? "," : "") << e.data.b()[i];
            std::cout << '\n';
        }
    } else {
        std::cout << to_json(corpus).dump(2) << '\n';
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double lowering maps: classification, verification and q-Racah identities"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "q as p/q");
        sub->add_option("--a", o.a, "a as p/q");
        sub->add_option("--b", o.b, "b as p/q");
        sub->add_option("--n", o.n, "N");
    };

    auto* classify_cmd = app.add_subcommand("classify", "Classify a data file and cross-check with the solver");
    classify_cmd->add_option("--input", o.input, "Data or corpus JSON")->required();
    add_format(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run every data-level identity on a data file");
    verify_cmd->add_option("--input", o.input, "Data or corpus JSON")->required();
    add_format(verify_cmd);

    auto* matrices_cmd = app.add_subcommand("matrices", "Print operator matrices for data or q-Racah parameters");
    matrices_cmd->add_option("--input", o.input, "Data JSON");
    add_params(matrices_cmd);
    matrices_cmd->add_option("--basis", o.basis, "tau|eta|w|wprime");
    add_format(matrices_cmd);

    auto* suite_cmd = app.add_subcommand("qracah-suite", "Verify the q-Racah identity suite");
    add_params(suite_cmd);
    add_format(suite_cmd);

    auto* corpus_cmd = app.add_subcommand("gen-corpus", "Emit a seeded corpus of data sets");
    corpus_cmd->add_option("--seed", o.seed, "Seed");
    corpus_cmd->add_option("--count", o.count, "Number of entries");
    corpus_cmd->add_option("--max-n", o.max_n, "Largest N");
    corpus_cmd->add_option("--min-n", o.min_n, "Smallest N");
    corpus_cmd->add_option("--kinds", o.kinds, "Comma-separated kinds");
    add_format(corpus_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        if (*classify_cmd) return cmd_classify(o);
        if (*verify_cmd) return cmd_verify(o);
        if (*matrices_cmd) return cmd_matrices(o);
        if (*suite_cmd) return cmd_qracah_suite(o);
        if (*corpus_cmd) return cmd_gen_corpus(o);
    } catch (const InternalDisagreement& e) {
        std::cerr << "internal disagreement: " << e.what() << '\n';
        return Disagreement;
    } catch (const std::invalid_argument& e) {  // DegenerateData, InvalidParams, ParseError
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return Disagreement;
    }
    return BadInput;
}
