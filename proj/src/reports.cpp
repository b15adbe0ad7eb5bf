#include "reports.hpp"

#include "exterior.hpp"
#include "forms.hpp"
#include "laplacian.hpp"
#include "metric.hpp"

#include "json.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace qsu2 {
namespace {

using njson = nlohmann::ordered_json;

ScalarQ parse_scalar(const std::string& text) {
    try {
        return ScalarQ::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument("cannot parse '" + text + "': " + e.what());
    }
}

// sqrt over the rationals, exact or nothing
std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

void require_q_range(const mpq_class& q0) {
    if (!(q0 > 0 && q0 < 1))
        throw std::invalid_argument("q must lie strictly between 0 and 1, got " + q0.get_str());
}

// Classification at a point substitutes the deformation parameter itself,
// so the evaluation point must be a perfect rational square.
EvalAt eval_at_q(const std::optional<mpq_class>& q0) {
    EvalAt at;
    if (!q0) return at;
    require_q_range(*q0);
    std::optional<mpq_class> s0 = rational_sqrt(*q0);
    if (!s0)
        throw std::invalid_argument(
            "pointwise classification needs q to be the square of a rational, e.g. 1/4");
    at.s0 = ScalarQ::parse(s0->get_str());
    return at;
}

std::string jstr(int twoJ) {
    mpq_class j(twoJ, 2);
    j.canonicalize();
    return j.get_str();
}

const char* dir_sign(Dir d) { return d == Dir::Plus ? "+" : "-"; }

njson head(const char* command) {
    njson r;
    r["schema"] = REPORT_SCHEMA;
    r["command"] = command;
    return r;
}

std::string finish_json(const njson& r) { return r.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

std::string bstr(bool b) { return b ? "true" : "false"; }

njson parse_json_input(const std::string& text) {
    try {
        return njson::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON input: ") + e.what());
    }
}

Contraction contraction_from_json(const njson& j) {
    if (!j.is_object()) throw std::invalid_argument("contraction JSON must be an object");
    auto get = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_string())
            throw std::invalid_argument(std::string("contraction JSON needs a string entry '") +
                                        key + "'");
        return parse_scalar(j.at(key).get<std::string>());
    };
    Contraction g;
    g.alpha = get("alpha");
    g.beta = get("beta");
    g.nu = get("nu");
    g.eps = get("epsilon");
    g.xi = get("xi");
    g.gam = get("gamma");
    return g;
}

njson contraction_echo(const Contraction& g) {
    njson in;
    in["alpha"] = g.alpha.str();
    in["beta"] = g.beta.str();
    in["nu"] = g.nu.str();
    in["epsilon"] = g.eps.str();
    in["xi"] = g.xi.str();
    in["gamma"] = g.gam.str();
    return in;
}

// Exact eigenvalue of a diagonal action, recovered from one coefficient and
// then confirmed on the whole element.
ScalarQ proportionality(const AlgebraElement& image, const AlgebraElement& base) {
    if (image.is_zero()) return ScalarQ(0);
    const auto& [mono, coef] = *base.terms().begin();
    auto it = image.terms().find(mono);
    if (it == image.terms().end())
        throw std::runtime_error("operator is not diagonal on the canonical basis");
    ScalarQ c = it->second * coef.inverse();
    if (!(image == base * c))
        throw std::runtime_error("operator is not diagonal on the canonical basis");
    return c;
}

struct OracleRow {
    std::string kind, item, value;
    bool ok;
};

void oracle_casimir(int twoJmax, std::vector<OracleRow>& rows) {
    const UqElement cas = casimir();
    const ScalarQ shift = ScalarQ::qnum(1) * ScalarQ::qnum(1) - ScalarQ::parse("1/4");
    for (int twoJ = 0; twoJ <= twoJmax; ++twoJ)
        for (int n = -twoJ; n <= twoJ; n += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                ScalarQ want = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2) + shift;
                bool ok = act(cas, phi, Side::Left) == phi * want;
                rows.push_back({"casimir",
                                "phi(" + std::to_string(n) + "," + jstr(twoJ) + "," +
                                    std::to_string(l) + ")",
                                want.str(), ok});
            }
}

void oracle_ideal(std::vector<OracleRow>& rows) {
    const std::vector<AlgebraElement>& gens = ideal_generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        std::string base = "g" + std::to_string(i + 1);
        ScalarQ eps = gens[i].counit();
        rows.push_back({"tangent-ideal", base + ":counit", eps.str(), eps.is_zero()});
        for (int a = 0; a < NLABELS; ++a) {
            ScalarQ v = pairing(tangent_op(a), gens[i]);
            rows.push_back(
                {"tangent-ideal", base + ":L" + label_name(a), v.str(), v.is_zero()});
        }
    }
}

void oracle_differential(std::vector<OracleRow>& rows) {
    AlgebraElement a = AlgebraElement::gen_a(), as = AlgebraElement::gen_astar();
    AlgebraElement c = AlgebraElement::gen_c(), cs = AlgebraElement::gen_cstar();
    ScalarQ q = ScalarQ::q_var();

    auto combo = [](std::vector<std::pair<AlgebraElement, AlgebraElement>> terms) {
        std::array<AlgebraElement, 4> out;
        for (auto& [coef, x] : terms) {
            std::array<AlgebraElement, 4> dx = differential(x);
            for (int i = 0; i < 4; ++i) out[i] += coef * dx[i];
        }
        return out;
    };

    std::array<std::array<AlgebraElement, 4>, 4> omega;
    omega[L_MINUS] = combo({{cs, as}, {as * (-q), cs}});
    omega[L_PLUS] = combo({{a, c}, {c * (-q), a}});
    omega[L_Z] = combo({{as, a}, {cs, c}, {-a, as}, {c * ScalarQ::parse("-q^2"), cs}});
    ScalarQ pre = (ScalarQ::parse("1 + q") * ScalarQ::qnum(1) * ScalarQ::qnum(3)).inverse();
    omega[L_ZERO] = combo({{as * pre, a},
                           {cs * pre, c},
                           {a * (q * pre), as},
                           {c * (ScalarQ::parse("q^3") * pre), cs}});

    for (int i = 0; i < 4; ++i) {
        int matched = 0;
        for (int j = 0; j < 4; ++j) {
            AlgebraElement want = (i == j) ? AlgebraElement::one() : AlgebraElement();
            matched += omega[i][j] == want;
        }
        rows.push_back({"differential", std::string("omega_") + label_name(i),
                        std::to_string(matched) + "/4", matched == 4});
    }
}

void oracle_phi_basis(int twoJmax, std::vector<OracleRow>& rows) {
    for (int twoJ = 0; twoJ <= twoJmax; ++twoJ)
        for (int n = -twoJ; n <= twoJ; n += 2)
            for (int l = 0; l <= twoJ; ++l) {
                AlgebraElement phi = build_phi(n, twoJ, l);
                std::string base = "phi(" + std::to_string(n) + "," + jstr(twoJ) + "," +
                                   std::to_string(l) + ")";
                std::optional<int> ch = phi.charge();
                rows.push_back({"phi-basis", base + ":charge", std::to_string(n),
                                !phi.is_zero() && ch && *ch == n});
                ScalarQ lz = lambda_z(n);
                rows.push_back({"phi-basis", base + ":Lz", lz.str(),
                                act(tangent_op(L_Z), phi, Side::Left) == phi * lz});
                ScalarQ l0 = ScalarQ::qnum(twoJ) * ScalarQ::qnum(twoJ + 2);
                rows.push_back({"phi-basis", base + ":L0", l0.str(),
                                act(tangent_op(L_ZERO), phi, Side::Left) == phi * l0});
            }
}

} // namespace

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw std::invalid_argument("format must be 'json' or 'csv', got '" + name + "'");
}

mpq_class parse_exact_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("not an exact rational: '" + text + "'"); };
    size_t slash = text.find('/');
    std::string numpart = slash == std::string::npos ? text : text.substr(0, slash);
    std::string denpart = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits_only = [](const std::string& t, bool sign_ok) {
        size_t i = (sign_ok && !t.empty() && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!digits_only(numpart, true) || !digits_only(denpart, false)) bad();
    mpz_class num(numpart), den(denpart);
    if (den == 0) bad();
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

int parse_half_integer(const std::string& text) {
    mpq_class v = parse_exact_rational(text);
    mpq_class two = v * 2;
    if (v < 0 || two.get_den() != 1)
        throw std::invalid_argument("not a nonnegative half integer: '" + text + "'");
    if (two > 64) throw std::invalid_argument("half-integer bound too large (accepted up to 32)");
    return static_cast<int>(two.get_num().get_si());
}

std::string report_verify(const std::vector<CheckResult>& results,
                          const std::vector<std::string>& suites, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out = csv_row({"tag", "suite", "status", "detail"});
        for (const CheckResult& c : results)
            out += csv_row({c.tag, c.suite, check_status_name(c.status), c.detail});
        return out;
    }
    njson r = head("verify");
    r["suites"] = suites;
    njson arr = njson::array();
    for (const CheckResult& c : results) {
        njson row;
        row["tag"] = c.tag;
        row["suite"] = c.suite;
        row["status"] = check_status_name(c.status);
        row["detail"] = c.detail;
        arr.push_back(std::move(row));
    }
    r["checks"] = std::move(arr);
    VerifySummary s = summarize(results);
    r["counts"] = {{"pass", s.passed},
                   {"fail", s.failed},
                   {"documented_discrepancy", s.discrepancies}};
    r["ok"] = all_ok(results);
    return finish_json(r);
}

std::string report_spectra(Dir d, int k, const ReportOptions& opt) {
    if (k < 1 || k > 5) throw std::invalid_argument("degree k must be between 1 and 5");
    if (opt.q0) require_q_range(*opt.q0);

    const SpMatZ& A = antisym(d, k);
    int dim = tensor_dim(k);
    int rank = operator_rank(A, k);

    std::vector<std::pair<ScalarQ, int>> eigs;
    if (dim > rank) eigs.emplace_back(ScalarQ(0), dim - rank);
    if (k <= 4)
        for (const BasisForm& b : form_basis(d, k)) {
            bool seen = false;
            for (const auto& [v, mult] : eigs) seen = seen || v == b.lambda;
            if (!seen) eigs.emplace_back(b.lambda, eigenspace_dim(A, k, b.lambda));
        }

    if (opt.format == ReportFormat::Csv) {
        std::vector<std::string> header = {"value", "multiplicity"};
        if (opt.q0) header.push_back("value_at_q");
        std::string out = csv_row(header);
        for (const auto& [v, mult] : eigs) {
            std::vector<std::string> row = {v.str(), std::to_string(mult)};
            if (opt.q0) row.push_back(v.eval_q(GausRat(*opt.q0)).str());
            out += csv_row(row);
        }
        return out;
    }

    njson r = head("spectra");
    r["k"] = k;
    r["sign"] = dir_sign(d);
    r["dimension"] = dim;
    r["rank"] = rank;
    if (opt.q0) r["q"] = opt.q0->get_str();
    njson arr = njson::array();
    for (const auto& [v, mult] : eigs) {
        njson row;
        row["value"] = v.str();
        row["multiplicity"] = mult;
        if (opt.q0) row["value_at_q"] = v.eval_q(GausRat(*opt.q0)).str();
        arr.push_back(std::move(row));
    }
    r["eigenvalues"] = std::move(arr);
    return finish_json(r);
}

std::string report_hodge_table(char family, const std::string& alpha_expr,
                               const std::string& eps_expr, int sign, Dir dir,
                               const std::string& m_spec, const ReportOptions& opt) {
    if (sign != +1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (opt.q0) require_q_range(*opt.q0);

    Contraction g;
    ScalarQ alpha;
    EvalAt at;
    switch (family) {
        case 'a':
            alpha = parse_scalar(alpha_expr);
            g = family_a(alpha, sign);
            break;
        case 'c':
            alpha = parse_scalar(alpha_expr);
            g = family_c(alpha, sign);
            break;
        case 'b': {
            if (!opt.q0)
                throw std::invalid_argument("family b is a pointwise family and needs --q");
            std::optional<mpq_class> s0 = rational_sqrt(*opt.q0);
            if (!s0)
                throw std::invalid_argument(
                    "family b needs --q to be the square of a rational, e.g. 1/4");
            if (eps_expr.empty())
                throw std::invalid_argument("family b needs --eps (a rational)");
            mpq_class a0 = parse_exact_rational(alpha_expr);
            mpq_class e0 = parse_exact_rational(eps_expr);
            g = family_b(a0, e0, *s0, sign);
            alpha = ScalarQ::parse(a0.get_str());
            at.s0 = ScalarQ::parse(s0->get_str());
            break;
        }
        default:
            throw std::invalid_argument("family must be 'a', 'b' or 'c'");
    }

    ScalarQ m;
    if (m_spec == "auto") {
        if (family != 'a')
            throw std::invalid_argument(
                "the auto scale is the normalized family-a choice; give --m explicitly");
        m = normalized_m(alpha);
    } else if (m_spec.empty() || m_spec == "symbolic") {
        m = ScalarQ::symbol(std_syms().m);
    } else {
        m = parse_scalar(m_spec);
    }

    HodgeConfig cfg{g, m, dir};

    struct Degree {
        int k;
        std::vector<std::string> basis;
        std::vector<std::vector<std::string>> images;
        std::vector<std::vector<std::string>> at_q;
    };
    std::vector<Degree> table;
    bool evaluable = opt.q0.has_value();
    for (int k = 0; k <= 4; ++k) {
        Degree deg;
        deg.k = k;
        for (const BasisForm& b : form_basis(dir, k)) deg.basis.push_back(b.name);
        std::vector<std::vector<ScalarQ>> t = hodge_matrix(cfg, k, 'T');
        for (auto& rowv : t) {
            std::vector<std::string> row, row_q;
            for (ScalarQ& x : rowv) {
                ScalarQ v = at.reduce(x);
                row.push_back(v.str());
                if (evaluable) {
                    try {
                        row_q.push_back(v.eval_q(GausRat(*opt.q0)).str());
                    } catch (const std::exception&) {
                        evaluable = false;
                    }
                }
            }
            deg.images.push_back(std::move(row));
            deg.at_q.push_back(std::move(row_q));
        }
        table.push_back(std::move(deg));
    }

    if (opt.format == ReportFormat::Csv) {
        std::vector<std::string> header = {"degree", "row", "col", "entry"};
        if (evaluable) header.push_back("entry_at_q");
        std::string out = csv_row(header);
        for (const Degree& deg : table)
            for (size_t i = 0; i < deg.images.size(); ++i)
                for (size_t j = 0; j < deg.images[i].size(); ++j) {
                    std::vector<std::string> row = {std::to_string(deg.k), std::to_string(i),
                                                    std::to_string(j), deg.images[i][j]};
                    if (evaluable) row.push_back(deg.at_q[i][j]);
                    out += csv_row(row);
                }
        return out;
    }

    njson r = head("hodge-table");
    r["family"] = std::string(1, family);
    r["sign"] = sign;
    r["direction"] = dir_sign(dir);
    r["alpha"] = alpha.str();
    if (family == 'b') r["eps"] = eps_expr;
    r["m"] = m.str();
    if (opt.q0) r["q"] = opt.q0->get_str();
    r["orientation"] = "images[i][j] is the coefficient of basis[j] in the image of basis[i]";
    njson degrees = njson::array();
    for (const Degree& deg : table) {
        njson d;
        d["k"] = deg.k;
        d["basis"] = deg.basis;
        d["images"] = deg.images;
        if (evaluable) d["images_at_q"] = deg.at_q;
        degrees.push_back(std::move(d));
    }
    r["degrees"] = std::move(degrees);
    return finish_json(r);
}

std::string report_laplacian(const std::string& branch, char side,
                             const std::string& alpha_expr, int nmax,
                             const std::string& jmax, const ReportOptions& opt) {
    int br;
    if (branch == "sigma") br = +1;
    else if (branch == "other") br = -1;
    else throw std::invalid_argument("branch must be 'sigma' or 'other', got '" + branch + "'");
    if (side != 'L' && side != 'R')
        throw std::invalid_argument("side must be 'L' or 'R'");
    if (!opt.q0) throw std::invalid_argument("the spectrum scan needs --q");
    require_q_range(*opt.q0);
    if (nmax < 0 || nmax > 64) throw std::invalid_argument("nmax must lie in 0..64");
    int twoJmax = parse_half_integer(jmax);

    ScalarQ alpha = parse_scalar(alpha_expr);
    GausRat q0(*opt.q0);

    std::vector<SpectrumRow> rows;
    if (side == 'L') {
        rows = scan_spectrum(alpha, br, q0, nmax, twoJmax);
    } else {
        const UqElement box = box_r(alpha, br);
        for (int n = -nmax; n <= nmax; ++n)
            for (int twoJ = std::abs(n); twoJ <= twoJmax; twoJ += 2) {
                AlgebraElement phi = build_phi(n, twoJ, 0);
                ScalarQ c = proportionality(act(box, phi, Side::Left), phi);
                rows.push_back({n, twoJ, c.eval_q(q0)});
            }
    }
    for (const SpectrumRow& row : rows)
        if (row.value.im != 0)
            throw std::invalid_argument("alpha must evaluate to a real rational");

    if (opt.format == ReportFormat::Csv) {
        std::string out = csv_row({"n", "J", "value"});
        for (const SpectrumRow& row : rows)
            out += csv_row({std::to_string(row.n), jstr(row.twoJ), row.value.re.get_str()});
        return out;
    }

    int pos = 0, neg = 0, zero = 0;
    std::optional<mpq_class> lo, hi;
    for (const SpectrumRow& row : rows) {
        pos += row.value.re > 0;
        neg += row.value.re < 0;
        zero += row.value.re == 0;
        if (!lo || row.value.re < *lo) lo = row.value.re;
        if (!hi || row.value.re > *hi) hi = row.value.re;
    }

    njson r = head("laplacian");
    r["branch"] = branch;
    r["side"] = std::string(1, side);
    r["alpha"] = alpha.str();
    r["q"] = opt.q0->get_str();
    r["nmax"] = nmax;
    r["jmax"] = jstr(twoJmax);
    njson arr = njson::array();
    for (const SpectrumRow& row : rows) {
        njson jr;
        jr["n"] = row.n;
        jr["J"] = jstr(row.twoJ);
        jr["value"] = row.value.re.get_str();
        arr.push_back(std::move(jr));
    }
    r["rows"] = std::move(arr);
    njson summary;
    summary["positive"] = pos;
    summary["negative"] = neg;
    summary["zero"] = zero;
    if (lo) summary["min"] = lo->get_str();
    if (hi) summary["max"] = hi->get_str();
    r["summary"] = std::move(summary);
    return finish_json(r);
}

std::string report_classify(const std::string& json_text, Dir dir, const ReportOptions& opt) {
    njson j = parse_json_input(json_text);
    Contraction g = contraction_from_json(j);
    EvalAt at = eval_at_q(opt.q0);

    ClassifyReport rep = classify_T(g, dir, at);
    ScalarQ det = det_q(g, dir);
    std::string family = rep.family ? std::string(1, rep.family) : "none";
    std::optional<int> sign;
    if (opt.q0) sign = sign_at(det, GausRat(*rational_sqrt(*opt.q0)));

    if (opt.format == ReportFormat::Csv) {
        std::string out = csv_row({"key", "value"});
        out += csv_row({"direction", dir_sign(dir)});
        out += csv_row({"real", bstr(rep.real)});
        out += csv_row({"hermitian", bstr(rep.hermitian)});
        out += csv_row({"invertible", bstr(rep.invertible)});
        out += csv_row({"maximally_hermitian", bstr(rep.max_hermitian)});
        out += csv_row({"family", family});
        std::string failed;
        for (size_t i = 0; i < rep.failed.size(); ++i)
            failed += (i ? ";" : "") + rep.failed[i];
        out += csv_row({"failed", failed});
        out += csv_row({"detq", at.reduce(det).str()});
        if (opt.q0) {
            out += csv_row({"q", opt.q0->get_str()});
            out += csv_row({"sign", std::to_string(*sign)});
        }
        return out;
    }

    njson r = head("classify");
    r["direction"] = dir_sign(dir);
    r["input"] = contraction_echo(g);
    r["real"] = rep.real;
    r["hermitian"] = rep.hermitian;
    r["invertible"] = rep.invertible;
    r["maximally_hermitian"] = rep.max_hermitian;
    r["family"] = family;
    r["failed"] = rep.failed;
    r["detq"] = at.reduce(det).str();
    if (opt.q0) {
        r["q"] = opt.q0->get_str();
        r["sign"] = *sign;
    } else {
        r["sign"] = nullptr;
    }
    return finish_json(r);
}

std::string report_classify_metric(const std::string& json_text, const ReportOptions& opt) {
    njson j = parse_json_input(json_text);
    MetricMat mat;
    if (j.is_object() && j.contains("entries")) {
        const njson& e = j.at("entries");
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("metric JSON needs a 4x4 'entries' array");
        mat = metric_zero();
        for (int a = 0; a < 4; ++a) {
            if (!e[a].is_array() || e[a].size() != 4)
                throw std::invalid_argument("metric JSON needs a 4x4 'entries' array");
            for (int b = 0; b < 4; ++b) {
                if (!e[a][b].is_string())
                    throw std::invalid_argument("metric entries must be strings");
                mat[a][b] = parse_scalar(e[a][b].get<std::string>());
            }
        }
    } else {
        mat = metric_from_contraction(contraction_from_json(j));
    }

    EvalAt at = eval_at_q(opt.q0);
    MetricAxioms ax = metric_axioms(mat, at);
    MetricClass cls = classify_metric(mat, at);
    ScalarQ det = metric_det(mat);

    if (opt.format == ReportFormat::Csv) {
        std::string out = csv_row({"key", "value"});
        out += csv_row({"nondegenerate", bstr(ax.nondegenerate)});
        out += csv_row({"sigma_symmetric", bstr(ax.sigma_symmetric)});
        out += csv_row({"braided_symmetric", bstr(ax.braided_symmetric)});
        out += csv_row({"real", bstr(ax.real)});
        out += csv_row({"coinvariant", bstr(ax.coinvariant)});
        out += csv_row({"all_axioms", bstr(ax.all())});
        out += csv_row({"class", metric_class_name(cls)});
        out += csv_row({"det", at.reduce(det).str()});
        if (opt.q0) out += csv_row({"q", opt.q0->get_str()});
        return out;
    }

    njson r = head("classify-metric");
    njson axioms;
    axioms["nondegenerate"] = ax.nondegenerate;
    axioms["sigma_symmetric"] = ax.sigma_symmetric;
    axioms["braided_symmetric"] = ax.braided_symmetric;
    axioms["real"] = ax.real;
    axioms["coinvariant"] = ax.coinvariant;
    axioms["all"] = ax.all();
    r["axioms"] = std::move(axioms);
    r["class"] = metric_class_name(cls);
    r["det"] = at.reduce(det).str();
    if (opt.q0) r["q"] = opt.q0->get_str();
    return finish_json(r);
}

std::string report_oracle(const std::string& which, const std::string& jmax,
                          const ReportOptions& opt, bool& ok_out) {
    int twoJmax = parse_half_integer(jmax);
    if (twoJmax > 16)
        throw std::invalid_argument("oracle tables accept jmax up to 8");
    if (opt.q0) require_q_range(*opt.q0);

    std::vector<std::string> kinds;
    if (which == "all")
        kinds = {"casimir", "tangent-ideal", "differential", "phi-basis"};
    else if (which == "casimir" || which == "tangent-ideal" || which == "differential" ||
             which == "phi-basis")
        kinds = {which};
    else
        throw std::invalid_argument(
            "check must be casimir, tangent-ideal, differential, phi-basis or all");

    std::vector<OracleRow> rows;
    for (const std::string& kind : kinds) {
        if (kind == "casimir") oracle_casimir(twoJmax, rows);
        else if (kind == "tangent-ideal") oracle_ideal(rows);
        else if (kind == "differential") oracle_differential(rows);
        else oracle_phi_basis(twoJmax, rows);
    }

    ok_out = true;
    for (const OracleRow& row : rows) ok_out = ok_out && row.ok;

    if (opt.format == ReportFormat::Csv) {
        std::string out = csv_row({"kind", "item", "value", "ok"});
        for (const OracleRow& row : rows)
            out += csv_row({row.kind, row.item, row.value, bstr(row.ok)});
        return out;
    }

    njson r = head("oracle");
    r["check"] = which;
    r["jmax"] = jstr(twoJmax);
    njson arr = njson::array();
    for (const OracleRow& row : rows) {
        njson jr;
        jr["kind"] = row.kind;
        jr["item"] = row.item;
        jr["value"] = row.value;
        jr["ok"] = row.ok;
        arr.push_back(std::move(jr));
    }
    r["rows"] = std::move(arr);
    r["ok"] = ok_out;
    return finish_json(r);
}

std::string report_export_braiding(Dir d, const ReportOptions& opt) {
    if (opt.q0) require_q_range(*opt.q0);
    const SpMatZ& s = sigma_op(d);
    std::vector<std::vector<std::string>> entries(16, std::vector<std::string>(16, "0"));
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            const LaurentZ* v = s.get(r, c);
            if (v && !v->is_zero()) entries[r][c] = v->to_scalar().str();
        }

    if (opt.format == ReportFormat::Csv) {
        std::string out = csv_row({"row", "col", "entry"});
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c)
                out += csv_row({std::to_string(r), std::to_string(c), entries[r][c]});
        return out;
    }

    njson r = head("export");
    r["kind"] = "braiding";
    r["sign"] = dir_sign(d);
    r["rows"] = 16;
    r["cols"] = 16;
    r["entries"] = entries;
    return finish_json(r);
}

} // namespace qsu2
