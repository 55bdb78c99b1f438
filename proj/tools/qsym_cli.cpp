#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsym/io.hpp"
#include "qsym/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

char parse_basis(const std::string& basis) {
    if (basis == "M" || basis == "F") return basis[0];
    throw std::invalid_argument("basis must be M or F");
}

void print_elem(const qsym::QSymElem& f, char basis, bool as_json) {
    if (as_json)
        std::cout << qsym::qsym_to_json(f, basis).dump() << "\n";
    else
        std::cout << qsym::format_qsym_elem(f, basis) << "\n";
}

std::optional<int> env_max_degree() {
    const char* v = std::getenv("QSYM_MAX_DEGREE");
    if (!v || !*v) return std::nullopt;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("QSYM_MAX_DEGREE must be an integer");
    }
}

int run_verify(const std::string& which, qsym::SuiteOptions opt, bool as_json) {
    std::vector<const qsym::SuiteEntry*> selected;
    if (which == "all") {
        for (const auto& entry : qsym::suite_registry()) selected.push_back(&entry);
    } else {
        std::string name = (which == "zabrocki") ? "dual-immaculate-3way" : which;
        const qsym::SuiteEntry* entry = qsym::find_suite(name);
        if (!entry) throw std::invalid_argument("unknown suite: " + which);
        selected.push_back(entry);
    }
    bool all_ok = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const qsym::SuiteEntry* entry : selected) {
        qsym::SuiteReport rep = entry->run(opt);
        all_ok = all_ok && rep.ok();
        if (as_json) {
            reports.push_back(rep.to_json());
        } else if (rep.ok()) {
            std::cout << rep.name << ": verified " << rep.cases << " " << rep.unit
                      << " (degree " << rep.degree << ")\n";
        } else {
            std::cout << rep.name << ": FAILED " << rep.failures.size() << " of " << rep.cases
                      << " " << rep.unit << " (degree " << rep.degree << ")\n";
            std::cout << rep.to_json().dump(2) << "\n";
        }
    }
    if (as_json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    return all_ok ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the quasisymmetric functions: restricted products,"
                 " dual immaculate functions, ribbon duality, and word-algebra lifts"};
    app.require_subcommand(1);

    // dual-immaculate
    std::string di_comp, di_method = "tableaux", di_basis = "M";
    bool di_json = false;
    auto* di = app.add_subcommand("dual-immaculate", "Compute a dual immaculate function");
    di->add_option("composition", di_comp, "shape, e.g. [1,2]")->required();
    di->add_option("--method", di_method, "tableaux|creation|zabrocki")
        ->check(CLI::IsMember({"tableaux", "creation", "zabrocki"}));
    di->add_option("--basis", di_basis, "output basis, M or F")->check(CLI::IsMember({"M", "F"}));
    di->add_flag("--json", di_json, "emit the JSON term list");

    // op
    std::string op_name, op_lhs, op_rhs, op_basis = "M";
    bool op_json = false;
    auto* op = app.add_subcommand("op", "Apply a binary operation to two elements");
    op->add_option("name", op_name, "mul|prec|succeq|preceq|succ|belg|tvim")->required();
    op->add_option("lhs", op_lhs, "left element, e.g. \"2*M[1,2] - F[3]\"")->required();
    op->add_option("rhs", op_rhs, "right element")->required();
    op->add_option("--basis", op_basis, "output basis, M or F")->check(CLI::IsMember({"M", "F"}));
    op->add_flag("--json", op_json, "emit the JSON term list");

    // convert
    std::string cv_elem, cv_to = "M";
    bool cv_json = false;
    auto* cv = app.add_subcommand("convert", "Rewrite an element in the M or F basis");
    cv->add_option("element", cv_elem, "element to convert")->required();
    cv->add_option("--to", cv_to, "target basis, M or F")->check(CLI::IsMember({"M", "F"}));
    cv->add_flag("--json", cv_json, "emit the JSON term list");

    // wop
    int wop_m = 0;
    std::string wop_elem, wop_basis = "M";
    auto* wop = app.add_subcommand("wop", "Apply the creation operator W_m to a JSON element");
    wop->add_option("m", wop_m, "positive integer")->required();
    wop->add_option("element", wop_elem, "JSON term list")->required();
    wop->add_option("--basis", wop_basis, "output basis, M or F")->check(CLI::IsMember({"M", "F"}));

    // wq-op
    std::string wq_name, wq_u, wq_v;
    auto* wq = app.add_subcommand("wq-op", "Apply an operation to two packed-word basis elements");
    wq->add_option("name", wq_name, "mul|prec|circ|succ|belg|tvim")->required();
    wq->add_option("u", wq_u, "packed word, e.g. [1,2,1]")->required();
    wq->add_option("v", wq_v, "packed word")->required();

    // fq-op
    std::string fq_name, fq_s, fq_t;
    auto* fq = app.add_subcommand("fq-op", "Apply succ or belg to two permutations");
    fq->add_option("name", fq_name, "succ|belg")->required();
    fq->add_option("sigma", fq_s, "permutation, e.g. [2,1]")->required();
    fq->add_option("tau", fq_t, "permutation")->required();

    // project
    std::string pj_elem, pj_basis = "M";
    bool pj_json = false;
    auto* pj = app.add_subcommand("project", "Project a WQSym element to QSym");
    pj->add_option("element", pj_elem, "element over packed words, e.g. \"M[1,2] + 2*M[1,1]\"")->required();
    pj->add_option("--basis", pj_basis, "output basis, M or F")->check(CLI::IsMember({"M", "F"}));
    pj->add_flag("--json", pj_json, "emit the JSON term list");

    // verify
    std::string vf_suite;
    int vf_degree = -1;
    bool vf_oracle = false, vf_json = false;
    unsigned long long vf_seed = 1;
    auto* vf = app.add_subcommand("verify", "Run a named identity-verification suite");
    vf->add_option("suite", vf_suite, "suite name or \"all\"")->required();
    vf->add_option("--max-degree", vf_degree, "cap the sweep degree (default per suite, or QSYM_MAX_DEGREE)");
    vf->add_flag("--with-oracle", vf_oracle, "also compare against truncated power-series expansions");
    vf->add_flag("--json", vf_json, "emit the JSON report");
    vf->add_option("--seed", vf_seed, "seed for randomized triples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*di) {
            qsym::Composition alpha = qsym::parse_composition(di_comp);
            qsym::QSymElem out;
            if (di_method == "tableaux") out = qsym::dual_immaculate_tableaux(alpha);
            else if (di_method == "creation") out = qsym::dual_immaculate_creation(alpha);
            else out = qsym::zabrocki_dual_immaculate(alpha);
            print_elem(out, parse_basis(di_basis), di_json);
        } else if (*op) {
            qsym::QSymElem a = qsym::parse_qsym_elem(op_lhs);
            qsym::QSymElem b = qsym::parse_qsym_elem(op_rhs);
            qsym::QSymElem out;
            if (op_name == "mul") out = qsym::mul(a, b);
            else if (op_name == "prec") out = qsym::prec(a, b);
            else if (op_name == "succeq") out = qsym::succeq(a, b);
            else if (op_name == "preceq") out = qsym::preceq(a, b);
            else if (op_name == "succ") out = qsym::succ(a, b);
            else if (op_name == "belg") out = qsym::belg(a, b);
            else if (op_name == "tvim") out = qsym::tvim(a, b);
            else throw std::invalid_argument("unknown operation: " + op_name);
            print_elem(out, parse_basis(op_basis), op_json);
        } else if (*cv) {
            print_elem(qsym::parse_qsym_elem(cv_elem), parse_basis(cv_to), cv_json);
        } else if (*wop) {
            qsym::QSymElem f = qsym::qsym_from_json(nlohmann::json::parse(wop_elem));
            std::cout << qsym::qsym_to_json(qsym::W(wop_m, f), parse_basis(wop_basis)).dump() << "\n";
        } else if (*wq) {
            qsym::WordOp o = qsym::parse_word_op(wq_name);
            qsym::PackedWord u(qsym::parse_word(wq_u));
            qsym::PackedWord v(qsym::parse_word(wq_v));
            std::cout << qsym::format_wqsym_elem(qsym::wq_op_terms(o, u, v)) << "\n";
        } else if (*fq) {
            qsym::WordOp o = qsym::parse_word_op(fq_name);
            qsym::Permutation s(qsym::parse_word(fq_s));
            qsym::Permutation t(qsym::parse_word(fq_t));
            std::cout << qsym::format_fqsym_elem(qsym::fq_op(o, s, t)) << "\n";
        } else if (*pj) {
            print_elem(qsym::project(qsym::parse_wqsym_elem(pj_elem)), parse_basis(pj_basis), pj_json);
        } else if (*vf) {
            qsym::SuiteOptions opt;
            if (vf->count("--max-degree")) opt.max_degree = vf_degree;
            else opt.max_degree = env_max_degree();
            opt.with_oracle = vf_oracle;
            opt.seed = vf_seed;
            return run_verify(vf_suite, opt, vf_json);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
