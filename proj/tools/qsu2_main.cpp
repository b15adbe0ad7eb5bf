// qsu2: batch front end for the exact quantum SU(2) exterior calculus.
// Runs the named verification suites, emits spectra and Hodge tables,
// scans Laplacian spectra, classifies user-supplied contractions and
// metrics, and exports the braiding matrix. Exit codes: 0 success, 1 a
// verification check failed, 2 usage or input error.

#include "qsu2/qsu2.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Common {
    std::string q;
    std::string format = "json";
    std::string out;
};

qsu2_format to_format(const std::string& name) {
    return name == "csv" ? QSU2_CSV : QSU2_JSON;
}

const char* q_or_null(const Common& c) { return c.q.empty() ? nullptr : c.q.c_str(); }

// 0 on success, 2 if the output path cannot be written
int emit(qsu2_report* rep, const Common& c) {
    const char* text = qsu2_report_text(rep);
    if (c.out.empty()) {
        std::fputs(text, stdout);
        return 0;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        std::cerr << "qsu2: error: cannot write '" << c.out << "'\n";
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

int finish(qsu2_status st, qsu2_report* rep, const Common& c) {
    int code;
    switch (st) {
        case QSU2_OK: code = 0; break;
        case QSU2_CHECK_FAILED: code = 1; break;
        default: code = 2; break;
    }
    if (st == QSU2_OK || st == QSU2_CHECK_FAILED) {
        int write_code = emit(rep, c);
        if (write_code != 0) code = write_code;
    } else {
        std::cerr << "qsu2: error: " << qsu2_error_message() << "\n";
    }
    qsu2_report_free(rep);
    return code;
}

bool read_file(const std::string& path, std::string& text) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bicovariant exterior calculus on quantum SU(2)"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--q", common.q, "rational evaluation point in (0,1), e.g. 1/2");
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", common.out, "write the report to this path instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the named identity suites");
    std::vector<std::string> suites{"all"};
    verify->add_option("--suites", suites,
                       "comma-separated suites: braiding, exterior, hodge, metric, oracle, "
                       "laplacian, or all")
        ->delimiter(',');
    bool corrupt = false;
    verify->add_flag("--corrupt-sigma", corrupt,
                     "debug: corrupt one braiding entry so the braid relation check fails");

    auto* spectra = app.add_subcommand("spectra", "antisymmetrizer spectrum in one degree");
    int spectra_k = 2;
    std::string spectra_sign = "+";
    spectra->add_option("--k", spectra_k, "tensor degree")
        ->required()
        ->check(CLI::Range(1, 5));
    spectra->add_option("--sign", spectra_sign, "braiding direction")
        ->check(CLI::IsMember({"+", "-"}));

    auto* hodge = app.add_subcommand("hodge-table", "Hodge operator tables for a family");
    std::string h_family, h_alpha = "1", h_eps, h_sign = "+", h_dir = "+", h_m;
    hodge->add_option("--family", h_family, "hermitian family")
        ->required()
        ->check(CLI::IsMember({"a", "b", "c"}));
    hodge->add_option("--alpha", h_alpha, "family parameter (expression; rational for b)")
        ->capture_default_str();
    hodge->add_option("--eps", h_eps, "family b second parameter (rational)");
    hodge->add_option("--sign", h_sign, "Z_2 member of the family")
        ->check(CLI::IsMember({"+", "-"}));
    hodge->add_option("--dir", h_dir, "braiding direction")->check(CLI::IsMember({"+", "-"}));
    hodge->add_option("--m", h_m, "volume scale: auto, symbolic, or an expression");

    auto* lap = app.add_subcommand("laplacian", "exact Laplacian spectrum scan (needs --q)");
    std::string l_branch = "sigma", l_side = "L", l_alpha = "1", l_jmax = "4";
    int l_nmax = 8;
    lap->add_option("--branch", l_branch, "metric branch")
        ->check(CLI::IsMember({"sigma", "other"}))
        ->capture_default_str();
    lap->add_option("--side", l_side, "left or right operator")
        ->check(CLI::IsMember({"L", "R"}))
        ->capture_default_str();
    lap->add_option("--alpha", l_alpha, "metric scale (expression)")->capture_default_str();
    lap->add_option("--nmax", l_nmax, "charge window |n| <= nmax")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    lap->add_option("--jmax", l_jmax, "spin bound J <= jmax (half integer)")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "classify a contraction from JSON");
    std::string c_input, c_dir = "+";
    classify->add_option("--input", c_input, "path to the contraction JSON")->required();
    classify->add_option("--dir", c_dir, "braiding direction")->check(CLI::IsMember({"+", "-"}));

    auto* cmetric = app.add_subcommand("classify-metric", "classify a metric from JSON");
    std::string m_input;
    cmetric->add_option("--input", m_input, "path to the metric JSON")->required();

    auto* oracle = app.add_subcommand("oracle", "function-algebra oracle tables");
    std::string o_check = "all", o_jmax = "2";
    oracle->add_option("--check", o_check, "table to produce")
        ->check(CLI::IsMember({"casimir", "tangent-ideal", "differential", "phi-basis", "all"}))
        ->capture_default_str();
    oracle->add_option("--jmax", o_jmax, "spin bound (half integer)")->capture_default_str();

    auto* exp = app.add_subcommand("export", "export an engine matrix");
    std::string e_kind, e_sign = "+";
    exp->add_option("kind", e_kind, "what to export")
        ->required()
        ->check(CLI::IsMember({"braiding"}));
    exp->add_option("--sign", e_sign, "braiding direction")->check(CLI::IsMember({"+", "-"}));

    for (CLI::App* sub : {verify, spectra, hodge, lap, classify, cmetric, oracle, exp})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    qsu2_format format = to_format(common.format);
    qsu2_report* rep = nullptr;
    qsu2_status st;

    if (app.got_subcommand(verify)) {
        std::string joined;
        for (size_t i = 0; i < suites.size(); ++i) joined += (i ? "," : "") + suites[i];
        st = qsu2_verify(joined.c_str(), corrupt ? 1 : 0, format, &rep);
    } else if (app.got_subcommand(spectra)) {
        st = qsu2_spectra(spectra_k, spectra_sign[0], q_or_null(common), format, &rep);
    } else if (app.got_subcommand(hodge)) {
        if (h_m.empty()) h_m = h_family == "a" ? "auto" : "symbolic";
        st = qsu2_hodge_table(h_family[0], h_alpha.c_str(),
                              h_eps.empty() ? nullptr : h_eps.c_str(),
                              h_sign == "+" ? +1 : -1, h_dir[0], h_m.c_str(),
                              q_or_null(common), format, &rep);
    } else if (app.got_subcommand(lap)) {
        st = qsu2_laplacian(l_branch.c_str(), l_side[0], l_alpha.c_str(), l_nmax,
                            l_jmax.c_str(), q_or_null(common), format, &rep);
    } else if (app.got_subcommand(classify)) {
        std::string text;
        if (!read_file(c_input, text)) {
            std::cerr << "qsu2: error: cannot read '" << c_input << "'\n";
            return 2;
        }
        st = qsu2_classify(text.c_str(), c_dir[0], q_or_null(common), format, &rep);
    } else if (app.got_subcommand(cmetric)) {
        std::string text;
        if (!read_file(m_input, text)) {
            std::cerr << "qsu2: error: cannot read '" << m_input << "'\n";
            return 2;
        }
        st = qsu2_classify_metric(text.c_str(), q_or_null(common), format, &rep);
    } else if (app.got_subcommand(oracle)) {
        st = qsu2_oracle(o_check.c_str(), o_jmax.c_str(), format, &rep);
    } else {
        st = qsu2_export_braiding(e_sign[0], format, &rep);
    }

    return finish(st, rep, common);
}
