// gamma-sharp: evaluation, enclosures, bound comparison tables and
// verification suites for the generalized Euler-Mascheroni constant.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gamma_sharp/proof_certificates.hpp"
#include "gamma_sharp/sequences.hpp"
#include "gamma_sharp/sharp_bounds.hpp"
#include "gamma_sharp/special_fn.hpp"

namespace {

using namespace gsharp;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// One row of the fixed tabular schema; unset fields serialize empty.
struct Row {
    std::optional<double> a;
    std::optional<std::int64_t> n;
    std::optional<double> x_n, y_n, res_x, res_y;
    std::string family, side;
    std::optional<double> bound, lo, hi;
    std::string method;
};

const char* kCsvHeader = "a,n,x_n,y_n,res_x,res_y,family,side,bound,lo,hi,method";

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    auto num = [](const std::optional<double>& v) { return v ? fmt_num(*v) : std::string(); };
    for (const Row& r : rows) {
        os << num(r.a) << ',' << (r.n ? std::to_string(*r.n) : std::string()) << ','
           << num(r.x_n) << ',' << num(r.y_n) << ',' << num(r.res_x) << ',' << num(r.res_y)
           << ',' << r.family << ',' << r.side << ',' << num(r.bound) << ',' << num(r.lo) << ','
           << num(r.hi) << ',' << r.method << "\n";
    }
    return os.str();
}

std::string rows_to_json(const std::vector<Row>& rows) {
    std::ostringstream os;
    os << "[";
    bool first_row = true;
    for (const Row& r : rows) {
        os << (first_row ? "\n" : ",\n") << "  {";
        first_row = false;
        bool first = true;
        auto put = [&](const char* key, const std::string& val, bool quote) {
            if (!first) os << ", ";
            first = false;
            os << '"' << key << "\": ";
            if (quote)
                os << '"' << json_escape(val) << '"';
            else
                os << val;
        };
        if (r.a) put("a", fmt_num(*r.a), false);
        if (r.n) put("n", std::to_string(*r.n), false);
        if (r.x_n) put("x_n", fmt_num(*r.x_n), false);
        if (r.y_n) put("y_n", fmt_num(*r.y_n), false);
        if (r.res_x) put("res_x", fmt_num(*r.res_x), false);
        if (r.res_y) put("res_y", fmt_num(*r.res_y), false);
        if (!r.family.empty()) put("family", r.family, true);
        if (!r.side.empty()) put("side", r.side, true);
        if (r.bound) put("bound", fmt_num(*r.bound), false);
        if (r.lo) put("lo", fmt_num(*r.lo), false);
        if (r.hi) put("hi", fmt_num(*r.hi), false);
        if (!r.method.empty()) put("method", r.method, true);
        os << "}";
    }
    os << "\n]\n";
    return os.str();
}

std::string report_to_json(const ScanReport& rep) {
    std::ostringstream os;
    os << "{\n  \"suite\": \"" << json_escape(rep.suite) << "\",\n  \"grid\": \""
       << json_escape(rep.domain) << "\",\n  \"points_checked\": " << rep.points_checked
       << ",\n  \"failures\": [";
    bool first = true;
    for (const Failure& f : rep.failures) {
        os << (first ? "\n" : ",\n") << "    {\"where\": \"" << json_escape(f.where)
           << "\", \"check\": \"" << json_escape(f.check) << "\", \"lhs\": " << fmt_num(f.lhs)
           << ", \"rhs\": " << fmt_num(f.rhs) << ", \"gap\": " << fmt_num(f.gap) << "}";
        first = false;
    }
    if (!first) os << "\n  ";
    os << "],\n  \"max_violation\": " << fmt_num(rep.max_violation)
       << ",\n  \"inconclusive\": " << rep.inconclusive;
    if (!std::isnan(rep.limit_gap)) os << ",\n  \"limit_gap\": " << fmt_num(rep.limit_gap);
    os << ",\n  \"passed\": " << (rep.passed ? "true" : "false") << "\n}";
    return os.str();
}

std::string reports_to_json(const std::vector<ScanReport>& reps) {
    if (reps.size() == 1) return report_to_json(reps.front()) + "\n";
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < reps.size(); ++i)
        os << report_to_json(reps[i]) << (i + 1 < reps.size() ? ",\n" : "\n");
    os << "]\n";
    return os.str();
}

std::string reports_to_csv(const std::vector<ScanReport>& reps) {
    std::ostringstream os;
    os << "suite,grid,points_checked,failures,max_violation,inconclusive,passed\n";
    for (const ScanReport& r : reps) {
        os << r.suite << ",\"" << r.domain << "\"," << r.points_checked << ','
           << r.failures.size() << ',' << fmt_num(r.max_violation) << ',' << r.inconclusive
           << ',' << (r.passed ? "true" : "false") << "\n";
    }
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) ||
        !(lo <= hi))
        throw CLI::ValidationError("--a-grid", "grid spec must be lo:hi:step with lo<=hi, step>0");
    std::vector<double> g;
    for (double x = lo; x <= hi + 0.5 * step; x += step) g.push_back(std::min(x, hi));
    return g;
}

Family parse_family(const std::string& s) {
    static const std::vector<std::pair<std::string, Family>> map = {
        {"thm13x", Family::THM13_X}, {"thm13y", Family::THM13_Y}, {"thm14x", Family::THM14_X},
        {"thm14y", Family::THM14_Y}, {"sint", Family::SINT},      {"bm11", Family::BM11},
        {"bm12", Family::BM12},      {"alzer", Family::ALZER},    {"toth", Family::TOTH},
        {"chen", Family::CHEN},      {"qiu", Family::QIU}};
    for (const auto& [name, fam] : map)
        if (s == name) return fam;
    throw CLI::ValidationError("--family", "unknown family '" + s + "'");
}

EncloseMethod parse_method(const std::string& s) {
    if (s == "thm13x") return EncloseMethod::THM13_X;
    if (s == "thm13y") return EncloseMethod::THM13_Y;
    if (s == "thm14x") return EncloseMethod::THM14_X;
    if (s == "thm14y") return EncloseMethod::THM14_Y;
    if (s == "intersect") return EncloseMethod::INTERSECT;
    throw CLI::ValidationError("--method", "unknown method '" + s + "'");
}

std::vector<ScanReport> run_suite(const std::string& suite, const std::vector<double>& a_grid,
                                  std::int64_t n_max, double eps, const AccuracyPolicy& policy) {
    std::vector<ScanReport> reps;
    const double log_max = static_cast<double>(std::max<std::int64_t>(n_max, 1000000));
    if (suite == "lemmas" || suite == "all") {
        reps.push_back(monotonicity_scan(CertTarget::F1_DECREASING,
                                         default_grid(1.0 + 1e-6, 100.0, 0.1, log_max), policy));
        reps.push_back(monotonicity_scan(CertTarget::F2TILDE_DECREASING,
                                         default_grid(2.0, 100.0, 0.1, log_max), policy));
        reps.push_back(monotonicity_scan(CertTarget::F3_DECREASING,
                                         default_grid(0.1, 100.0, 0.1, log_max), policy));
        reps.push_back(monotonicity_scan(CertTarget::F3_CONVEX,
                                         default_grid(0.1, 100.0, 0.1, log_max), policy));
        // limits and the f1 endpoint value
        ScanReport lim;
        lim.suite = "lemma_limits";
        lim.domain = "x=1e6 tail, endpoint x=1+1e-6";
        lim.record("x=1e6", "|f1 + 1/3| <= 1e-4", std::abs(f1(1e6, policy) + 1.0 / 3.0), 1e-4);
        lim.record("x=1e6", "|f2tilde - 1/6| <= 1e-4", std::abs(f2tilde(1e6, policy) - 1.0 / 6.0),
                   1e-4);
        lim.record("x=1e6", "|f3 + 1/12| <= 1e-4", std::abs(f3(1e6, policy) + 1.0 / 12.0), 1e-4);
        const double endpoint = 1.0 / ln_minus_psi(1.0, policy).value - 2.0;
        lim.record("x=1+1e-6", "|f1 - (1/gamma - 2)| <= 1e-4",
                   std::abs(f1(1.0 + 1e-6, policy) - endpoint), 1e-4);
        reps.push_back(lim);
    }
    if (suite == "polys" || suite == "lemmas" || suite == "all") {
        reps.push_back(monotonicity_scan(CertTarget::F1_SIGN,
                                         default_grid(1.0, 100.0, 0.1, log_max), policy));
        reps.push_back(monotonicity_scan(CertTarget::F2_SIGN,
                                         default_grid(2.0, 100.0, 0.1, log_max), policy));
    }
    if (suite == "chen" || suite == "lemmas" || suite == "all") {
        reps.push_back(chen_certificates(default_grid(0.1, 100.0, 0.1, log_max), policy));
    }
    if (suite == "bounds" || suite == "all") {
        reps.push_back(inequality_grid_scan(a_grid, default_n_grid(n_max), eps, policy));
    }
    if (reps.empty())
        throw CLI::ValidationError("--suite",
                                   "unknown suite '" + suite +
                                       "' (expected lemmas, polys, chen, bounds or all)");
    return reps;
}

int run(int argc, char** argv) {
    CLI::App app{"sharp bounds and certified enclosures for the generalized "
                 "Euler-Mascheroni constant gamma(a)"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out/--prec-terms may follow the subcommand

    double a = 1.0;
    std::int64_t n = 1;
    std::int64_t n_max = 10;
    std::string method_str = "thm14x";
    std::string family_str;
    std::string side_str;
    std::string suite = "all";
    std::string a_grid_spec;
    std::string format = "csv";
    std::string out_path;
    double eps = 1e-13;
    int prec_terms = 8;

    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path);
    app.add_option("--prec-terms", prec_terms, "asymptotic correction terms")
        ->check(CLI::Range(3, 30));

    auto* cmd_eval = app.add_subcommand("eval", "evaluate gamma(a) with an error bound");
    cmd_eval->add_option("--a", a)->required();

    auto* cmd_seq = app.add_subcommand("seq", "convergence table for n = 1..n_max");
    cmd_seq->add_option("--a", a)->required();
    cmd_seq->add_option("--n-max", n_max)->required();

    auto* cmd_enclose = app.add_subcommand("enclose", "certified enclosure of gamma(a)");
    cmd_enclose->add_option("--a", a)->required();
    cmd_enclose->add_option("--n", n)->required();
    cmd_enclose->add_option("--method", method_str);

    auto* cmd_compare = app.add_subcommand("compare", "bound comparison table at (a, n)");
    cmd_compare->add_option("--a", a)->required();
    cmd_compare->add_option("--n", n)->required();
    cmd_compare->add_option("--family", family_str);
    cmd_compare->add_option("--side", side_str)->check(CLI::IsMember({"lo", "hi"}));

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite);
    cmd_verify->add_option("--a-grid", a_grid_spec, "a grid as lo:hi:step");
    cmd_verify->add_option("--n-max", n_max)->capture_default_str();
    cmd_verify->add_option("--eps", eps)->capture_default_str();

    auto* cmd_sharp = app.add_subcommand("sharpness", "equality attainment and limit sharpness");
    cmd_sharp->add_option("--a", a)->required();
    cmd_sharp->add_option("--family", family_str)->required();
    cmd_sharp->add_option("--n-max", n_max);
    cmd_sharp->add_option("--eps", eps);

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    // verify/sharpness defaults differ from the table commands
    n_max = 10;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    AccuracyPolicy policy;
    policy.series_terms = prec_terms;

    const bool json = format == "json";
    std::vector<Row> rows;

    if (cmd_eval->parsed()) {
        const GeneralizedGamma g = gamma_a(a, policy);
        Row r;
        r.a = a;
        r.bound = g.value;
        r.lo = g.value - g.abs_error_bound;
        r.hi = g.value + g.abs_error_bound;
        r.method = "EVAL";
        rows.push_back(r);
    } else if (cmd_seq->parsed()) {
        for (const SeqPoint& p : table(a, n_max, policy)) {
            Row r;
            r.a = p.a;
            r.n = p.n;
            r.x_n = p.x_n;
            r.y_n = p.y_n;
            r.res_x = p.res_x;
            r.res_y = p.res_y;
            rows.push_back(r);
        }
    } else if (cmd_enclose->parsed()) {
        const Enclosure e = enclose(a, n, parse_method(method_str), policy);
        Row r;
        r.a = e.a;
        r.n = e.n;
        r.lo = e.lo;
        r.hi = e.hi;
        r.method = to_string(e.method);
        rows.push_back(r);
    } else if (cmd_compare->parsed()) {
        std::vector<Family> fams;
        if (!family_str.empty()) {
            fams.push_back(parse_family(family_str));
        } else {
            fams = {Family::THM13_X, Family::THM13_Y, Family::THM14_X, Family::THM14_Y,
                    Family::SINT,    Family::BM11,    Family::BM12,    Family::ALZER,
                    Family::TOTH,    Family::CHEN,    Family::QIU};
        }
        std::vector<Side> sides;
        if (side_str == "lo")
            sides = {Side::LO};
        else if (side_str == "hi")
            sides = {Side::HI};
        else
            sides = {Side::LO, Side::HI};

        const bool explicit_family = !family_str.empty();
        const double xn = x_n_closed(a, n, policy);
        const double yn = y_n_closed(a, n, policy);
        const double rx = residual_x(a, n, policy);
        const double ry = residual_y(a, n, policy);
        for (Family fam : fams) {
            for (Side side : sides) {
                double b;
                try {
                    b = bound_residual(a, n, fam, side, policy);
                } catch (const std::domain_error&) {
                    if (explicit_family) throw;
                    continue;  // family not applicable at this (a, n)
                }
                Row r;
                r.a = a;
                r.n = n;
                r.x_n = xn;
                r.y_n = yn;
                r.res_x = rx;
                r.res_y = ry;
                r.family = to_string(fam);
                r.side = to_string(side);
                r.bound = b;
                rows.push_back(r);
            }
        }
    } else if (cmd_verify->parsed()) {
        const std::vector<double> a_grid =
            a_grid_spec.empty() ? default_a_grid() : parse_grid_spec(a_grid_spec);
        if (!cmd_verify->count("--n-max")) n_max = 100000;
        const std::vector<ScanReport> reps = run_suite(suite, a_grid, n_max, eps, policy);
        emit(json ? reports_to_json(reps) : reports_to_csv(reps), out_path);
        for (const ScanReport& r : reps)
            if (!r.passed) return kExitVerifyFail;
        return 0;
    } else if (cmd_sharp->parsed()) {
        if (!cmd_sharp->count("--n-max")) n_max = 1000000;
        if (!cmd_sharp->count("--eps")) eps = 1e-4;
        const ScanReport rep =
            sharpness_scan(a, parse_family(family_str), n_max, eps, policy);
        emit(json ? reports_to_json({rep}) : reports_to_csv({rep}), out_path);
        return rep.passed ? 0 : kExitVerifyFail;
    }

    emit(json ? rows_to_json(rows) : rows_to_csv(rows), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gsharp::AccuracyError& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const gsharp::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
