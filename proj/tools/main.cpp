#include <CLI11.hpp>

#include <laddernet/laddernet.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using laddernet::Complex;
using laddernet::ComplexParam;

std::string num(double v) { return laddernet::format_sci(v); }

std::string complex_obj(Complex z) {
    return "{\"re\": " + num(z.real()) + ", \"im\": " + num(z.imag()) + "}";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string field(const std::string& key, const std::string& rendered) {
    return "  \"" + key + "\": " + rendered;
}

void print_record(const std::vector<std::string>& fields) {
    std::cout << "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
        std::cout << fields[i] << (i + 1 < fields.size() ? ",\n" : "\n");
    std::cout << "}\n";
}

const char* region_name(laddernet::RegionLC r) {
    using laddernet::RegionLC;
    switch (r) {
        case RegionLC::Omega1: return "omega1";
        case RegionLC::Omega2: return "omega2";
        case RegionLC::LambdaBarCurve: return "lambda_bar";
        case RegionLC::SegmentInterior: return "segment";
        case RegionLC::SegmentEndpoint: return "endpoint";
        case RegionLC::Zero: return "zero";
    }
    return "unknown";
}

const char* region_name(laddernet::RegionCL r) {
    using laddernet::RegionCL;
    switch (r) {
        case RegionCL::Omega1: return "omega1";
        case RegionCL::Omega2: return "omega2";
        case RegionCL::Omega3: return "omega3";
        case RegionCL::LambdaBarCurve: return "lambda_bar";
        case RegionCL::RayInterior: return "segment";
        case RegionCL::RayEndpoint: return "endpoint";
        case RegionCL::Zero: return "zero";
    }
    return "unknown";
}

struct Options {
    std::string kind;
    double L = 1.0;
    double C = 1.0;
    std::string alpha_text;
    std::string beta_text;
    std::string lambda_text;
    int n = 0;
    bool limit = false;
    int n_max = 20;
    double tol = 1e-9;
    double re_min = -3.0;
    double re_max = 3.0;
    double im_min = -3.0;
    double im_max = 3.0;
    int n_re = 61;
    int n_im = 61;
    std::string out_path;
    std::string file_path;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return 2;
}

// P_n and Z_n = 1/P_n; a depth where the Dirichlet problem is inconsistent
// renders as the explicit string "infinity" with Z_n = 0.
void append_finite(std::vector<std::string>& fields, Complex alpha, Complex beta,
                   int n) {
    try {
        const Complex p = laddernet::finite_ladder_admittance(alpha, beta, n);
        fields.push_back(field("P_n", complex_obj(p)));
        if (p == Complex(0.0))
            fields.push_back(field("Z_n", quoted("infinity")));
        else
            fields.push_back(field("Z_n", complex_obj(1.0 / p)));
    } catch (const laddernet::unit_circle_degeneracy_error&) {
        fields.push_back(field("P_n", quoted("infinity")));
        fields.push_back(field("Z_n", complex_obj(Complex(0.0))));
    }
}

template <typename RegionT>
void append_limit(std::vector<std::string>& fields,
                  const laddernet::LimitResult<RegionT>& r) {
    if (r.convergent()) {
        fields.push_back(field("status", quoted("convergent")));
        fields.push_back(field("P_inf", complex_obj(*r.value)));
        fields.push_back(field("Z_inf", complex_obj(1.0 / *r.value)));
    } else {
        fields.push_back(field("status", quoted("non_convergent")));
    }
}

int run_compute(const Options& opt) {
    std::vector<std::string> fields;
    fields.push_back(field("kind", quoted(opt.kind)));

    if (opt.kind == "ab") {
        if (opt.limit)
            return usage_error("--limit supports only the lc and cl kinds");
        if (opt.alpha_text.empty() || opt.beta_text.empty())
            return usage_error("kind ab requires --alpha and --beta");
        if (opt.n <= 0) return usage_error("kind ab requires --n");
        const Complex alpha = laddernet::parse_complex(opt.alpha_text);
        const Complex beta = laddernet::parse_complex(opt.beta_text);
        fields.push_back(field("alpha", complex_obj(alpha)));
        fields.push_back(field("beta", complex_obj(beta)));
        fields.push_back(field("n", std::to_string(opt.n)));
        append_finite(fields, alpha, beta, opt.n);
        print_record(fields);
        return 0;
    }

    if (opt.lambda_text.empty()) return usage_error("--lambda is required");
    const Complex lambda = laddernet::parse_complex(opt.lambda_text);
    if (lambda == Complex(0.0)) {
        std::cerr << "error: lambda = 0 lies outside the admissible set\n";
        return 4;
    }
    if (opt.n <= 0 && !opt.limit)
        return usage_error("give --n, --limit, or both");

    const ComplexParam param(lambda);
    fields.push_back(field("lambda", complex_obj(lambda)));

    if (opt.kind == "lc") {
        fields.push_back(field(
            "region", quoted(region_name(laddernet::classify_lc(lambda, opt.L, opt.C)))));
        if (opt.n > 0) {
            const laddernet::LadderSpec spec = laddernet::LadderSpec::lc(opt.L, opt.C);
            fields.push_back(field("n", std::to_string(opt.n)));
            append_finite(fields, spec.alpha_at(param), spec.beta_at(param), opt.n);
        }
        if (opt.limit)
            append_limit(fields, laddernet::lc_infinite_admittance(param, opt.L, opt.C));
    } else {
        fields.push_back(field(
            "region", quoted(region_name(laddernet::classify_cl(lambda, opt.L, opt.C)))));
        if (opt.n > 0) {
            const laddernet::LadderSpec spec = laddernet::LadderSpec::cl(opt.L, opt.C);
            fields.push_back(field("n", std::to_string(opt.n)));
            append_finite(fields, spec.alpha_at(param), spec.beta_at(param), opt.n);
        }
        if (opt.limit)
            append_limit(fields, laddernet::cl_infinite_admittance(param, opt.L, opt.C));
    }
    print_record(fields);
    return 0;
}

double grid_coord(double lo, double hi, int i, int n) {
    return lo + (static_cast<double>(i) * (hi - lo)) / static_cast<double>(n - 1);
}

void emit_tail(std::ostream& os, const char* region,
               const std::optional<Complex>& p) {
    if (p)
        os << region << ",1," << num(p->real()) << ',' << num(p->imag()) << '\n';
    else
        os << region << ",0,,\n";
}

int run_sweep(const Options& opt) {
    if (!(opt.re_min < opt.re_max) || !(opt.im_min < opt.im_max))
        return usage_error("grid bounds must satisfy min < max");

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << opt.out_path << '\n';
            return 3;
        }
        os = &file;
    }

    *os << "re,im,region,conv,p_re,p_im\n";
    for (int j = 0; j < opt.n_im; ++j) {
        const double im = grid_coord(opt.im_min, opt.im_max, j, opt.n_im);
        for (int i = 0; i < opt.n_re; ++i) {
            const double re = grid_coord(opt.re_min, opt.re_max, i, opt.n_re);
            const Complex z(re, im);
            *os << num(re) << ',' << num(im) << ',';
            if (z == Complex(0.0)) {
                *os << "zero,0,,\n";
                continue;
            }
            if (opt.kind == "lc") {
                const auto r =
                    laddernet::lc_infinite_admittance(ComplexParam(z), opt.L, opt.C);
                emit_tail(*os, region_name(r.region), r.value);
            } else {
                const auto r =
                    laddernet::cl_infinite_admittance(ComplexParam(z), opt.L, opt.C);
                emit_tail(*os, region_name(r.region), r.value);
            }
        }
    }

    os->flush();
    if (!*os) {
        std::cerr << "error: write failed\n";
        return 3;
    }
    return 0;
}

int run_converge(const Options& opt) {
    std::optional<laddernet::LadderSpec> spec;
    if (opt.kind == "ab") {
        if (opt.alpha_text.empty() || opt.beta_text.empty())
            return usage_error("kind ab requires --alpha and --beta");
        spec = laddernet::LadderSpec::general(
            laddernet::FixedAdmittance(laddernet::parse_complex(opt.alpha_text)),
            laddernet::FixedAdmittance(laddernet::parse_complex(opt.beta_text)));
    } else {
        spec = opt.kind == "lc" ? laddernet::LadderSpec::lc(opt.L, opt.C)
                                : laddernet::LadderSpec::cl(opt.L, opt.C);
    }

    Complex lambda(1.0, 0.0);
    if (opt.kind != "ab" || !opt.lambda_text.empty()) {
        if (opt.lambda_text.empty()) return usage_error("--lambda is required");
        lambda = laddernet::parse_complex(opt.lambda_text);
    }
    if (lambda == Complex(0.0)) {
        std::cerr << "error: lambda = 0 lies outside the admissible set\n";
        return 4;
    }

    const ComplexParam param(lambda);
    const laddernet::AdmittanceSequence seq =
        laddernet::exhaust(*spec, param, opt.n_max);
    const laddernet::ConvergenceVerdict verdict = laddernet::diagnose(seq, opt.tol);

    std::optional<Complex> ref;
    if (opt.kind == "lc") {
        const auto r = laddernet::lc_infinite_admittance(param, opt.L, opt.C);
        if (r.convergent()) ref = r.value;
    } else if (opt.kind == "cl") {
        const auto r = laddernet::cl_infinite_admittance(param, opt.L, opt.C);
        if (r.convergent()) ref = r.value;
    }
    if (!ref && verdict.status == laddernet::ConvergenceStatus::Converged)
        ref = verdict.estimated_limit;

    std::cout << "n p_re p_im err\n";
    for (const auto& term : seq.terms) {
        std::cout << term.n << ' ';
        if (term.p) {
            std::cout << num(term.p->real()) << ' ' << num(term.p->imag()) << ' ';
            if (ref)
                std::cout << num(std::abs(*term.p - *ref));
            else
                std::cout << '-';
        } else {
            std::cout << "infinity infinity -";
        }
        std::cout << '\n';
    }

    switch (verdict.status) {
        case laddernet::ConvergenceStatus::Converged:
            std::cout << "verdict converged limit="
                      << laddernet::format_complex(*verdict.estimated_limit)
                      << " rate=" << num(verdict.estimated_rate) << '\n';
            break;
        case laddernet::ConvergenceStatus::Oscillating:
            std::cout << "verdict oscillating\n";
            break;
        case laddernet::ConvergenceStatus::Slow:
            std::cout << "verdict slow\n";
            break;
    }
    return 0;
}

int run_solve(const Options& opt) {
    const Complex lambda = laddernet::parse_complex(opt.lambda_text);
    if (lambda == Complex(0.0)) {
        std::cerr << "error: lambda = 0 lies outside the admissible set\n";
        return 4;
    }
    const laddernet::Network net = laddernet::read_network_json(opt.file_path);
    const ComplexParam param(lambda);

    std::vector<std::string> fields;
    fields.push_back(field("lambda", complex_obj(lambda)));
    try {
        const laddernet::VoltageSolution sol = laddernet::solve_dirichlet(net, param);
        const Complex p =
            laddernet::admittance_from_solution(net, param, sol.values);
        fields.push_back(field("P", complex_obj(p)));
        if (p == Complex(0.0))
            fields.push_back(field("Z", quoted("infinity")));
        else
            fields.push_back(field("Z", complex_obj(1.0 / p)));
        fields.push_back(field("unique", sol.unique ? "true" : "false"));
        std::string v = "{\n";
        bool first = true;
        for (int label : net.vertices()) {
            if (!first) v += ",\n";
            first = false;
            v += "    \"" + std::to_string(label) +
                 "\": " + complex_obj(sol.values.at(label));
        }
        v += "\n  }";
        fields.push_back(field("voltages", v));
    } catch (const laddernet::no_solution_error&) {
        fields.push_back(field("P", quoted("infinity")));
        fields.push_back(field("Z", complex_obj(Complex(0.0))));
    }
    print_record(fields);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ladder network admittance and impedance calculator"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* compute =
        app.add_subcommand("compute", "admittance at a single spectral point");
    compute->add_option("--kind", opt.kind, "ladder kind: lc, cl, or ab")
        ->required()
        ->check(CLI::IsMember({"lc", "cl", "ab"}));
    compute->add_option("--L", opt.L, "inductance")->check(CLI::PositiveNumber);
    compute->add_option("--C", opt.C, "capacitance")->check(CLI::PositiveNumber);
    compute->add_option("--alpha", opt.alpha_text, "series admittance, ab kind");
    compute->add_option("--beta", opt.beta_text, "rung admittance, ab kind");
    compute->add_option("--lambda", opt.lambda_text, "spectral point a+bi");
    compute->add_option("--n", opt.n, "ladder stage count")
        ->check(CLI::PositiveNumber);
    compute->add_flag("--limit", opt.limit, "evaluate the infinite-depth limit");

    CLI::App* sweep =
        app.add_subcommand("sweep", "plane sweep writing a CSV region grid");
    sweep->add_option("--kind", opt.kind, "ladder kind: lc or cl")
        ->required()
        ->check(CLI::IsMember({"lc", "cl"}));
    sweep->add_option("--L", opt.L, "inductance")->check(CLI::PositiveNumber);
    sweep->add_option("--C", opt.C, "capacitance")->check(CLI::PositiveNumber);
    sweep->add_option("--re-min", opt.re_min, "grid lower real bound");
    sweep->add_option("--re-max", opt.re_max, "grid upper real bound");
    sweep->add_option("--im-min", opt.im_min, "grid lower imaginary bound");
    sweep->add_option("--im-max", opt.im_max, "grid upper imaginary bound");
    sweep->add_option("--nre", opt.n_re, "grid points along the real axis")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--nim", opt.n_im, "grid points along the imaginary axis")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--out", opt.out_path, "CSV path, stdout when omitted");

    CLI::App* converge =
        app.add_subcommand("converge", "finite-depth convergence study");
    converge->add_option("--kind", opt.kind, "ladder kind: lc, cl, or ab")
        ->required()
        ->check(CLI::IsMember({"lc", "cl", "ab"}));
    converge->add_option("--L", opt.L, "inductance")->check(CLI::PositiveNumber);
    converge->add_option("--C", opt.C, "capacitance")->check(CLI::PositiveNumber);
    converge->add_option("--alpha", opt.alpha_text, "series admittance, ab kind");
    converge->add_option("--beta", opt.beta_text, "rung admittance, ab kind");
    converge->add_option("--lambda", opt.lambda_text, "spectral point a+bi");
    converge->add_option("--n-max", opt.n_max, "largest ladder depth")
        ->check(CLI::Range(4, 1000000));
    converge->add_option("--tol", opt.tol, "convergence tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* solve =
        app.add_subcommand("solve", "Dirichlet solve of a JSON network file");
    solve->add_option("--file", opt.file_path, "network JSON path")->required();
    solve->add_option("--lambda", opt.lambda_text, "spectral point a+bi")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_compute(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (converge->parsed()) return run_converge(opt);
        if (solve->parsed()) return run_solve(opt);
        return usage_error("no subcommand given");
    } catch (const laddernet::schema_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const laddernet::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
