// charlab: exact character polynomials, pattern bijections, RSK, symmetrized
// LPP distributions and determinant/Pfaffian duality checks from one binary.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "charlab/duality.hpp"
#include "charlab/identities.hpp"
#include "charlab/io_json.hpp"
#include "charlab/lpp.hpp"
#include "charlab/pattern_bijections.hpp"

using namespace charlab;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIdentityFailure = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat_or_fail(const std::string& s, const std::string& what) {
    auto q = parse_rat(s);
    if (!q) throw ValidationError("bad " + what + " '" + s + "'");
    return *q;
}

HalfInt parse_half_or_fail(const std::string& s, const std::string& what) {
    auto v = HalfInt::parse(s);
    if (!v) throw ValidationError("bad " + what + " '" + s + "' (use \"a\" or \"a/2\")");
    return *v;
}

SignedPartition parse_partition_or_fail(const std::string& s) {
    auto p = SignedPartition::parse(s);
    if (!p) throw ValidationError("bad partition '" + s + "'");
    return *p;
}

std::vector<Rat> parse_rat_list(const std::string& csv, const std::string& what) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat_or_fail(tok, what));
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// ---- char ------------------------------------------------------------------

struct CharArgs {
    std::string family = "schur";
    std::string shape = "";
    std::size_t vars = 1;
    std::string out = "json";
    std::string at;      // roots r_i, comma separated
    std::string param;   // beta / alpha / y value for evaluation
    bool weyl = false;   // evaluate via the determinant route
};

int run_char(const CharArgs& a) {
    auto fam = char_family_from_name(a.family);
    if (!fam) throw ValidationError("unknown character family '" + a.family + "'");
    SignedPartition lambda = parse_partition_or_fail(a.shape);
    if (!a.at.empty()) {
        SqrtPoint pt(parse_rat_list(a.at, "root"));
        if (pt.size() != a.vars) throw ValidationError("--at needs one root per variable");
        Rat param(0);
        if (has_param_var(*fam)) {
            if (a.param.empty()) throw ValidationError("this family needs --param");
            param = parse_rat_or_fail(a.param, "param");
        }
        Rat value;
        if (a.weyl) {
            value = weyl_eval(*fam, lambda, pt, param);
        } else {
            LaurentPoly poly = char_poly(*fam, lambda, a.vars);
            value = has_param_var(*fam) ? poly.eval(pt, param) : poly.eval(pt);
        }
        if (a.out == "json")
            emit(json{{"value", rat_to_string(value)}});
        else
            std::cout << rat_to_string(value) << "\n";
        return 0;
    }
    LaurentPoly poly = char_poly(*fam, lambda, a.vars);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a.vars; ++i) names.push_back("x" + std::to_string(i + 1));
    if (*fam == CharFamily::SpOdd) names.push_back("y");
    if (*fam == CharFamily::CBInterp) names.push_back("beta");
    if (*fam == CharFamily::DBInterp) names.push_back("alpha");
    if (has_param_var(*fam) && !a.param.empty() && a.param != "formal") {
        // Substitute the parameter and print the x-polynomial with rational
        // coefficients (grouped by x-exponents).
        Rat value = parse_rat_or_fail(a.param, "param");
        std::map<LaurentPoly::Exps, Rat> grouped;
        for (const auto& [e, co] : poly.terms()) {
            LaurentPoly::Exps xs(e.begin(), e.end() - 1);
            grouped[xs] += Rat(co) * rat_pow(value, e.back() / 2);
        }
        json terms = json::array();
        for (const auto& [e, co] : grouped) {
            if (co == 0) continue;
            json exps = json::array();
            for (int d : e) exps.push_back(HalfInt::from_doubled(d).to_string());
            terms.push_back(json{{"exp", exps}, {"coeff", rat_to_string(co)}});
        }
        names.pop_back();
        emit(json{{"vars", names}, {"terms", terms}});
        return 0;
    }
    if (a.out == "pretty")
        std::cout << poly.to_string(names) << "\n";
    else if (a.out == "csv") {
        std::cout << "exp,coeff\n";
        for (const auto& [e, c] : poly.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                std::cout << (i ? " " : "") << HalfInt::from_doubled(e[i]).to_string();
            std::cout << "," << c.get_str() << "\n";
        }
    } else {
        emit(poly_to_json(poly, names));
    }
    return 0;
}

// ---- patterns ---------------------------------------------------------------

struct PatternsArgs {
    std::string family = "gt";
    std::string shape;
    std::size_t height = 0;
    bool count_only = false;
};

int run_patterns(const PatternsArgs& a) {
    auto fam = family_from_name(a.family);
    if (!fam) throw ValidationError("unknown pattern family '" + a.family + "'");
    SignedPartition shape = parse_partition_or_fail(a.shape);
    std::size_t height = a.height;
    if (height == 0) {
        height = *fam == PatternFamily::GT ? shape.declared_length() : 2 * shape.declared_length();
        if (height == 0) height = 1;
    }
    if (a.count_only) {
        std::cout << count_patterns(*fam, height, shape) << "\n";
        return 0;
    }
    enumerate_patterns(*fam, height, shape, [&](const Pattern& p) { emit(pattern_to_json(p)); });
    return 0;
}

// ---- bijection ---------------------------------------------------------------

int run_thm31(const std::string& dir, const std::string& file, const std::string& eps_csv,
              const std::string& grid) {
    json j = load_json(file);
    if (dir == "fwd") {
        Pattern z = pattern_from_json(j);
        auto res = split_to_symplectic(z);
        json paths = json::array();
        for (const auto& path : res.paths) {
            json pj = json::array();
            for (auto [i, jj] : path) pj.push_back(json::array({i, jj}));
            paths.push_back(pj);
        }
        emit(json{{"zprime", pattern_to_json(res.zprime)},
                  {"epsilon", res.epsilon},
                  {"paths", paths}});
        return 0;
    }
    if (dir == "inv") {
        Pattern zp = pattern_from_json(j);
        std::vector<int> eps;
        std::stringstream ss(eps_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) eps.push_back(std::stoi(tok));
        Grid g = grid == "half" ? Grid::Half : Grid::Integer;
        emit(pattern_to_json(symplectic_to_split(zp, eps, g)));
        return 0;
    }
    throw ValidationError("--dir must be fwd or inv");
}

int run_cut(const std::string& variant, std::size_t n, std::size_t m, const std::string& file) {
    CutVariant v;
    if (variant == "cb")
        v = CutVariant::CB;
    else if (variant == "sp")
        v = CutVariant::SpEven;
    else if (variant == "sp_odd")
        v = CutVariant::SpOdd;
    else if (variant == "so_even")
        v = CutVariant::SoEvenOddHeight;
    else if (variant == "gt")
        v = CutVariant::GTtwoFrozen;
    else
        throw ValidationError("unknown cut variant '" + variant + "'");
    Pattern big = pattern_from_json(load_json(file));
    CutDecomposition d = cut_decompose(big, v, n, m);
    emit(json{{"z", pattern_to_json(d.z)},
              {"zprime", pattern_to_json(d.zprime)},
              {"middle", partition_to_json(d.middle)},
              {"u", d.u.to_string()},
              {"v", d.v.to_string()}});
    return 0;
}

// ---- rsk ---------------------------------------------------------------------

int run_rsk(const std::string& dir, const std::string& file) {
    MonoidTaggedArray a = array_from_json(load_json(file));
    if (dir == "fwd")
        emit(array_to_json(rsk_forward(a)));
    else if (dir == "inv")
        emit(array_to_json(rsk_inverse(a)));
    else
        throw ValidationError("--dir must be fwd or inv");
    return 0;
}

// ---- lpp ---------------------------------------------------------------------

struct LppArgs {
    std::string model = "antidiag";
    std::size_t N = 1;
    std::string p;
    std::string beta = "0";
    std::string alpha = "0";
    std::string u = "0";
    std::string formula = "A";
    std::size_t split = 0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::string out = "pretty";
};

LppModel build_model(const LppArgs& a) {
    auto p = parse_rat_list(a.p, "p");
    Rat beta = parse_rat_or_fail(a.beta, "beta");
    Rat alpha = parse_rat_or_fail(a.alpha, "alpha");
    try {
        if (a.model == "antidiag") return make_antidiag(a.N, p, beta);
        if (a.model == "diag") return make_diag(a.N, p, alpha);
        if (a.model == "doublesym") return make_doublesym(a.N, p, alpha, beta);
        if (a.model == "p2l") return point_to_line_reduce(make_antidiag(a.N, p, beta));
        if (a.model == "p2lsym") return point_to_line_reduce(make_doublesym(a.N, p, alpha, beta));
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    throw ValidationError("unknown model '" + a.model + "'");
}

int run_lpp_cdf(const LppArgs& a) {
    LppModel model = build_model(a);
    HalfInt u = parse_half_or_fail(a.u, "u");
    auto f = formula_from_name(a.formula);
    if (!f) throw ValidationError("unknown formula tag '" + a.formula + "'");
    Rat value = cdf_exact(model, u, CdfQuery{*f, a.split});
    if (a.out == "csv") {
        std::cout << "u,formula,value_num,value_den\n";
        std::cout << u.to_string() << "," << formula_name(*f) << "," << value.get_num().get_str()
                  << "," << value.get_den().get_str() << "\n";
    } else if (a.out == "json") {
        emit(json{{"u", u.to_string()},
                  {"formula", formula_name(*f)},
                  {"value", rat_to_string(value)}});
    } else {
        std::cout << rat_to_string(value) << "\n";
    }
    return 0;
}

int run_lpp_simulate(const LppArgs& a) {
    LppModel model = build_model(a);
    HalfInt u = parse_half_or_fail(a.u, "u");
    SimResult r = simulate(model, u, a.trials, a.seed, a.workers);
    if (a.out == "csv") {
        std::cout << "u,estimate,stderr\n";
        std::cout << u.to_string() << "," << rat_to_string(r.estimate) << "," << r.standard_error
                  << "\n";
    } else if (a.out == "json") {
        emit(json{{"u", u.to_string()},
                  {"hits", r.hits},
                  {"trials", r.trials},
                  {"estimate", rat_to_string(r.estimate)},
                  {"stderr", r.standard_error}});
    } else {
        std::cout << rat_to_string(r.estimate) << " (stderr " << r.standard_error << ")\n";
    }
    return 0;
}

// ---- verify ------------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& out_path, unsigned workers) {
    std::vector<IdentityCase> cases;
    if (suite == "default")
        cases = default_suite();
    else if (suite == "full")
        cases = full_suite();
    else
        throw ValidationError("--suite must be default or full");
    SuiteReport report = run_suite(cases, workers);
    json lines = json::array();
    for (const auto& [c, o] : report.results) {
        json entry{{"id", identity_name(c.id)},
                   {"n", c.n},
                   {"m", c.m},
                   {"u", c.u.to_string()},
                   {"v", c.v.to_string()},
                   {"sign", c.sign},
                   {"valid", o.valid},
                   {"holds", o.holds},
                   {"seconds", o.seconds}};
        if (!o.detail.empty()) entry["detail"] = o.detail;
        lines.push_back(entry);
        std::cout << (o.valid && o.holds ? "pass " : "FAIL ") << identity_name(c.id) << " n=" << c.n
                  << " m=" << c.m << " u=" << c.u.to_string() << " v=" << c.v.to_string()
                  << (c.sign < 0 ? " sign=-" : "") << "\n";
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << json{{"suite", suite}, {"cases", lines}}.dump(2) << "\n";
    }
    return report.all_passed() ? 0 : kExitIdentityFailure;
}

// ---- duality -----------------------------------------------------------------

int run_duality(std::size_t n, const std::string& rho_csv, double v, double v_hi, std::size_t steps,
                bool sym, const std::string& trend) {
    ExpLppSpec spec;
    spec.n = n;
    spec.rho = parse_double_list(rho_csv);
    if (!trend.empty()) {
        // CDF at the fluctuation-scale threshold fbar*n + sigma*n^(1/3);
        // no tolerance attached, for trend inspection only.
        auto consts = parse_double_list(trend);
        if (consts.size() != 2) throw ValidationError("--trend needs fbar,sigma");
        std::cout << exp_lpp_cdf_det_scaled(spec, consts[0], consts[1]) << "\n";
        return 0;
    }
    auto print_row = [&](double vv) {
        spec.v = vv;
        double det_route = exp_lpp_cdf_det(spec);
        double pf_route = exp_lpp_cdf_pf(spec);
        std::cout << vv << "," << det_route << "," << pf_route << ","
                  << std::fabs(det_route - pf_route);
        if (sym) std::cout << "," << exp_sym_lpp_cdf(spec);
        std::cout << "\n";
    };
    std::cout << "v,det,pf,abs_discrepancy" << (sym ? ",sym" : "") << "\n";
    if (steps <= 1) {
        print_row(v);
    } else {
        for (std::size_t k = 0; k < steps; ++k)
            print_row(v + (v_hi - v) * static_cast<double>(k) / static_cast<double>(steps - 1));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"charlab: characters, pattern bijections, RSK and symmetrized LPP"};
    app.require_subcommand(1);

    CharArgs ca;
    auto* cmd_char = app.add_subcommand("char", "build or evaluate a character polynomial");
    cmd_char->add_option("--family", ca.family,
                         "schur|sp_even|sp_odd|so_even|so_odd|so_odd_split|cb|db");
    cmd_char->add_option("--shape", ca.shape, "partition, e.g. 2,1 or 5/2,3/2 or 2,-1")->required();
    cmd_char->add_option("--vars", ca.vars, "number of x variables")->required();
    cmd_char->add_option("--out", ca.out, "json|csv|pretty");
    cmd_char->add_option("--at", ca.at, "evaluate at roots r_i (x_i = r_i^2)");
    cmd_char->add_option("--param", ca.param, "beta/alpha/y value for evaluation");
    cmd_char->add_flag("--weyl", ca.weyl, "evaluate via the determinant route");

    PatternsArgs pa;
    auto* cmd_patterns = app.add_subcommand("patterns", "pattern utilities");
    auto* cmd_enum = cmd_patterns->add_subcommand("enum", "stream patterns as NDJSON");
    cmd_enum->add_option("--family", pa.family, "gt|symplectic|orthogonal|split_orthogonal");
    cmd_enum->add_option("--shape", pa.shape)->required();
    cmd_enum->add_option("--height", pa.height, "0 = infer from the shape");
    cmd_enum->add_flag("--count", pa.count_only, "print the count only");

    auto* cmd_bij = app.add_subcommand("bijection", "pattern bijections");
    std::string bdir = "fwd", bfile, beps, bgrid = "int";
    auto* cmd_thm31 = cmd_bij->add_subcommand("thm31", "split orthogonal <-> symplectic");
    cmd_thm31->add_option("--dir", bdir, "fwd|inv");
    cmd_thm31->add_option("--pattern", bfile, "pattern JSON file")->required();
    cmd_thm31->add_option("--epsilon", beps, "binary vector for inv, e.g. 0,1,1");
    cmd_thm31->add_option("--grid", bgrid, "target grid for inv: int|half");
    std::string cvariant = "cb", cfile;
    std::size_t cn = 1, cm = 1;
    auto* cmd_cut = cmd_bij->add_subcommand("cut", "frozen-part cut decomposition");
    cmd_cut->add_option("--variant", cvariant, "cb|sp|sp_odd|so_even|gt");
    cmd_cut->add_option("--n", cn)->required();
    cmd_cut->add_option("--m", cm)->required();
    cmd_cut->add_option("--pattern", cfile)->required();

    std::string rdir = "fwd", rfile;
    auto* cmd_rsk = app.add_subcommand("rsk", "RSK on Young-diagram arrays");
    cmd_rsk->add_option("--dir", rdir, "fwd|inv");
    cmd_rsk->add_option("--array", rfile, "array JSON file")->required();

    LppArgs la;
    auto* cmd_lpp = app.add_subcommand("lpp", "symmetrized last passage percolation");
    auto* cmd_cdf = cmd_lpp->add_subcommand("cdf", "exact P(L <= 2u)");
    cmd_cdf->add_option("--model", la.model, "antidiag|diag|doublesym|p2l|p2lsym");
    cmd_cdf->add_option("--N", la.N)->required();
    cmd_cdf->add_option("--p", la.p, "comma-separated p_i")->required();
    cmd_cdf->add_option("--beta", la.beta);
    cmd_cdf->add_option("--alpha", la.alpha);
    cmd_cdf->add_option("--u", la.u)->required();
    cmd_cdf->add_option("--formula", la.formula, "A|B|C|D|E");
    cmd_cdf->add_option("--split", la.split, "split index for D/E (0 = smallest valid)");
    cmd_cdf->add_option("--out", la.out, "pretty|csv|json");
    auto* cmd_sim = cmd_lpp->add_subcommand("simulate", "Monte Carlo estimate");
    cmd_sim->add_option("--model", la.model);
    cmd_sim->add_option("--N", la.N)->required();
    cmd_sim->add_option("--p", la.p)->required();
    cmd_sim->add_option("--beta", la.beta);
    cmd_sim->add_option("--alpha", la.alpha);
    cmd_sim->add_option("--u", la.u)->required();
    cmd_sim->add_option("--trials", la.trials);
    cmd_sim->add_option("--seed", la.seed);
    cmd_sim->add_option("--workers", la.workers);
    cmd_sim->add_option("--out", la.out);

    std::string vsuite = "default", vout;
    unsigned vworkers = 1;
    auto* cmd_verify = app.add_subcommand("verify", "run the identity suite");
    cmd_verify->add_option("--suite", vsuite, "default|full");
    cmd_verify->add_option("--out", vout, "write a JSON report here");
    cmd_verify->add_option("--workers", vworkers);

    std::size_t dn = 1;
    std::string drho;
    double dv = 1.0, dv_hi = 1.0;
    std::size_t dsteps = 1;
    bool dsym = false;
    std::string dtrend;
    auto* cmd_duality = app.add_subcommand("duality", "exponential-weight det/Pf duality");
    cmd_duality->add_option("--n", dn)->required();
    cmd_duality->add_option("--rho", drho, "2n rates, comma separated")->required();
    cmd_duality->add_option("--v", dv)->required();
    cmd_duality->add_option("--v-hi", dv_hi, "sweep upper end");
    cmd_duality->add_option("--steps", dsteps, "CSV sweep row count");
    cmd_duality->add_flag("--sym", dsym, "also print the diagonal-symmetric CDF");
    cmd_duality->add_option("--trend", dtrend,
                            "fbar,sigma: print the CDF at v_n = fbar*n + sigma*n^(1/3)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_char) return run_char(ca);
        if (*cmd_enum) return run_patterns(pa);
        if (*cmd_thm31) return run_thm31(bdir, bfile, beps, bgrid);
        if (*cmd_cut) return run_cut(cvariant, cn, cm, cfile);
        if (*cmd_rsk) return run_rsk(rdir, rfile);
        if (*cmd_cdf) return run_lpp_cdf(la);
        if (*cmd_sim) return run_lpp_simulate(la);
        if (*cmd_verify) return run_verify(vsuite, vout, vworkers);
        if (*cmd_duality) return run_duality(dn, drho, dv, dv_hi, dsteps, dsym, dtrend);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
