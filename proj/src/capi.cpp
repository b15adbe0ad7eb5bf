#include "qsu2/qsu2.h"

#include "reports.hpp"

#include <stdexcept>
#include <string>
#include <utility>

struct qsu2_report {
    std::string text;
};

struct qsu2_scalar {
    qsu2::ScalarQ value;
};

namespace {

thread_local std::string g_error;

qsu2_status fail(qsu2_status st, const char* what) {
    g_error = what;
    return st;
}

// Exceptions become status codes: argument problems (including domain
// errors raised by user expressions, like division by zero or evaluation at
// a pole) map to QSU2_INVALID_ARGUMENT, anything else to internal.
template <typename F>
qsu2_status guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const std::invalid_argument& e) {
        g_error = e.what();
        return QSU2_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_error = e.what();
        return QSU2_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_error = e.what();
        return QSU2_INTERNAL_ERROR;
    }
}

qsu2_status make_report(std::string text, qsu2_report** out) {
    *out = new qsu2_report{std::move(text)};
    return QSU2_OK;
}

qsu2::ReportOptions options_from(const char* q, qsu2_format format) {
    if (format != QSU2_JSON && format != QSU2_CSV)
        throw std::invalid_argument("format must be QSU2_JSON or QSU2_CSV");
    qsu2::ReportOptions opt;
    opt.format = format == QSU2_CSV ? qsu2::ReportFormat::Csv : qsu2::ReportFormat::Json;
    if (q && *q) opt.q0 = qsu2::parse_exact_rational(q);
    return opt;
}

qsu2::Dir dir_from(char sign) {
    if (sign == '+') return qsu2::Dir::Plus;
    if (sign == '-') return qsu2::Dir::Minus;
    throw std::invalid_argument(std::string("sign must be '+' or '-', got '") + sign + "'");
}

std::vector<std::string> split_suites(const char* suites) {
    std::vector<std::string> out;
    if (!suites) return out;
    std::string text = suites;
    if (text.empty() || text == "all") return out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(start, comma - start);
        if (!part.empty()) out.push_back(part);
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no suite names given");
    return out;
}

qsu2_status require(const void* p, const char* what) {
    if (p) return QSU2_OK;
    return fail(QSU2_INVALID_ARGUMENT, what);
}

} // namespace

extern "C" {

const char* qsu2_error_message(void) { return g_error.c_str(); }

const char* qsu2_report_text(const qsu2_report* r) { return r ? r->text.c_str() : ""; }

void qsu2_report_free(qsu2_report* r) { delete r; }

qsu2_status qsu2_scalar_parse(const char* text, qsu2_scalar** out) {
    if (require(text, "text must not be NULL") || require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new qsu2_scalar{qsu2::ScalarQ::parse(text)};
        return QSU2_OK;
    });
}

void qsu2_scalar_free(qsu2_scalar* x) { delete x; }

qsu2_status qsu2_scalar_text(const qsu2_scalar* x, qsu2_report** out) {
    if (require(x, "x must not be NULL") || require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] { return make_report(x->value.str(), out); });
}

int qsu2_scalar_is_zero(const qsu2_scalar* x) { return x ? x->value.is_zero() : -1; }

int qsu2_scalar_equal(const qsu2_scalar* x, const qsu2_scalar* y) {
    if (!x || !y) return -1;
    return x->value == y->value;
}

#define QSU2_BINOP(name, expr)                                                               \
    qsu2_status name(const qsu2_scalar* x, const qsu2_scalar* y, qsu2_scalar** out) {        \
        if (require(x, "x must not be NULL") || require(y, "y must not be NULL") ||          \
            require(out, "out must not be NULL"))                                            \
            return QSU2_INVALID_ARGUMENT;                                                    \
        return guarded([&] {                                                                 \
            *out = new qsu2_scalar{expr};                                                    \
            return QSU2_OK;                                                                  \
        });                                                                                  \
    }

QSU2_BINOP(qsu2_scalar_add, x->value + y->value)
QSU2_BINOP(qsu2_scalar_sub, x->value - y->value)
QSU2_BINOP(qsu2_scalar_mul, x->value * y->value)
QSU2_BINOP(qsu2_scalar_div, x->value * y->value.inverse())

#undef QSU2_BINOP

qsu2_status qsu2_scalar_conj(const qsu2_scalar* x, qsu2_scalar** out) {
    if (require(x, "x must not be NULL") || require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new qsu2_scalar{x->value.conj()};
        return QSU2_OK;
    });
}

qsu2_status qsu2_scalar_eval_q(const qsu2_scalar* x, const char* q, qsu2_report** out) {
    if (require(x, "x must not be NULL") || require(q, "q must not be NULL") ||
        require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        mpq_class q0 = qsu2::parse_exact_rational(q);
        return make_report(x->value.eval_q(qsu2::GausRat(q0)).str(), out);
    });
}

qsu2_status qsu2_verify(const char* suites, int corrupt_sigma, qsu2_format format,
                        qsu2_report** out) {
    if (require(out, "out must not be NULL")) return QSU2_INVALID_ARGUMENT;
    return guarded([&]() -> qsu2_status {
        qsu2::ReportOptions opt = options_from(nullptr, format);
        qsu2::VerifyOptions vopt;
        vopt.suites = split_suites(suites);
        vopt.corrupt_sigma = corrupt_sigma != 0;
        std::vector<qsu2::CheckResult> results = qsu2::run_checks(vopt);
        const std::vector<std::string>& ran =
            vopt.suites.empty() ? qsu2::all_suites() : vopt.suites;
        make_report(qsu2::report_verify(results, ran, opt.format), out);
        if (!qsu2::all_ok(results)) return fail(QSU2_CHECK_FAILED, "a verification check failed");
        return QSU2_OK;
    });
}

qsu2_status qsu2_spectra(int k, char sign, const char* q, qsu2_format format,
                         qsu2_report** out) {
    if (require(out, "out must not be NULL")) return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(qsu2::report_spectra(dir_from(sign), k, options_from(q, format)),
                           out);
    });
}

qsu2_status qsu2_hodge_table(char family, const char* alpha, const char* eps, int sign,
                             char dir_sign, const char* m, const char* q, qsu2_format format,
                             qsu2_report** out) {
    if (require(alpha, "alpha must not be NULL") || require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(
            qsu2::report_hodge_table(family, alpha, eps ? eps : "", sign, dir_from(dir_sign),
                                     m ? m : "symbolic", options_from(q, format)),
            out);
    });
}

qsu2_status qsu2_laplacian(const char* branch, char side, const char* alpha, int nmax,
                           const char* jmax, const char* q, qsu2_format format,
                           qsu2_report** out) {
    if (require(branch, "branch must not be NULL") || require(alpha, "alpha must not be NULL") ||
        require(jmax, "jmax must not be NULL") || require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(
            qsu2::report_laplacian(branch, side, alpha, nmax, jmax, options_from(q, format)),
            out);
    });
}

qsu2_status qsu2_classify(const char* contraction_json, char dir_sign, const char* q,
                          qsu2_format format, qsu2_report** out) {
    if (require(contraction_json, "input JSON must not be NULL") ||
        require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(qsu2::report_classify(contraction_json, dir_from(dir_sign),
                                                 options_from(q, format)),
                           out);
    });
}

qsu2_status qsu2_classify_metric(const char* metric_json, const char* q, qsu2_format format,
                                 qsu2_report** out) {
    if (require(metric_json, "input JSON must not be NULL") ||
        require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(qsu2::report_classify_metric(metric_json, options_from(q, format)),
                           out);
    });
}

qsu2_status qsu2_oracle(const char* which, const char* jmax, qsu2_format format,
                        qsu2_report** out) {
    if (require(which, "which must not be NULL") || require(jmax, "jmax must not be NULL") ||
        require(out, "out must not be NULL"))
        return QSU2_INVALID_ARGUMENT;
    return guarded([&]() -> qsu2_status {
        bool ok = false;
        make_report(qsu2::report_oracle(which, jmax, options_from(nullptr, format), ok), out);
        if (!ok) return fail(QSU2_CHECK_FAILED, "an oracle table row failed its equality");
        return QSU2_OK;
    });
}

qsu2_status qsu2_export_braiding(char sign, qsu2_format format, qsu2_report** out) {
    if (require(out, "out must not be NULL")) return QSU2_INVALID_ARGUMENT;
    return guarded([&] {
        return make_report(qsu2::report_export_braiding(dir_from(sign), options_from(nullptr, format)),
                           out);
    });
}

} // extern "C"
