// greenkern CLI: evaluate Green functions of the exemplar operators, extract
// renormalized diagonals, fit singular coefficients, probe spectral-parameter
// independence, solve point-interaction systems, and run the verification
// suites.  Output is CSV by default, JSON lines with --json; formatting is
// bit-stable at 17 significant digits.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "greenkern/krein.hpp"
#include "greenkern/models.hpp"
#include "greenkern/parallel.hpp"
#include "greenkern/records.hpp"
#include "greenkern/renorm.hpp"
#include "greenkern/verify.hpp"

namespace {

using namespace greenkern;

Cplx parse_zeta(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw DomainError("could not parse --zeta '" + text + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im))
            throw DomainError("could not parse --zeta '" + text + "'");
    }
    return Cplx(re, im);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw DomainError("empty numeric list '" + text + "'");
    return out;
}

Point parse_point(const std::string& text, int dim) {
    const std::vector<double> v = parse_list(text);
    if (static_cast<int>(v.size()) != dim)
        throw DomainError("point '" + text + "' must have " + std::to_string(dim) +
                          " coordinates");
    Point p;
    p.dim = dim;
    for (int i = 0; i < dim; ++i) p[i] = v[i];
    return p;
}

// "hi:lo:n" log-spaced, or an explicit comma list (sorted descending)
std::vector<double> parse_radii(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        double hi = 0, lo = 0;
        int n = 0;
        if (std::sscanf(text.c_str(), "%lf:%lf:%d", &hi, &lo, &n) != 3 || n < 4 ||
            !(hi > lo) || !(lo > 0))
            throw DomainError("bad --radii spec '" + text + "' (want hi:lo:count)");
        std::vector<double> r(n);
        for (int i = 0; i < n; ++i) r[i] = hi * std::pow(lo / hi, double(i) / double(n - 1));
        return r;
    }
    std::vector<double> r = parse_list(text);
    std::sort(r.begin(), r.end(), std::greater<double>());
    return r;
}

struct ModelFlags {
    std::string name;
    double q = 1.0;
    double xi = 1.0;
    double omega = 1.0;
};

GreenModel model_from_flags(const ModelFlags& mf) {
    if (mf.name == "free1d") return Free{1};
    if (mf.name == "free2d") return Free{2};
    if (mf.name == "free3d") return Free{3};
    if (mf.name == "free4d") return Free{4};
    if (mf.name == "coulomb3d") return Coulomb3D{mf.q};
    if (mf.name == "landau3d") return Landau3D{mf.xi};
    if (mf.name == "invosc1d") return InvOsc1D{mf.omega};
    throw DomainError("unknown model '" + mf.name + "'");
}

std::map<std::string, double> params_of(const GreenModel& m) {
    if (const Coulomb3D* c = std::get_if<Coulomb3D>(&m)) return {{"q", c->q}};
    if (const Landau3D* l = std::get_if<Landau3D>(&m)) return {{"xi", l->xi}};
    if (const InvOsc1D* o = std::get_if<InvOsc1D>(&m)) return {{"omega", o->omega}};
    return {};
}

OutputRecord make_record(const GreenModel& m, const Cplx& zeta, std::vector<double> coords,
                         const EvalResult& g) {
    OutputRecord rec;
    rec.model = model_name(m);
    rec.params = params_of(m);
    rec.zeta_re = zeta.real();
    rec.zeta_im = zeta.imag();
    rec.coords = std::move(coords);
    rec.value_re = g.value.real();
    rec.value_im = g.value.imag();
    rec.abs_error = g.abs_error;
    rec.method = method_name(g.method);
    return rec;
}

void emit(const std::vector<OutputRecord>& recs, bool json) {
    if (!json) std::cout << record_csv_header() << "\n";
    for (const OutputRecord& r : recs)
        std::cout << (json ? to_json(r).dump() : to_csv(r)) << "\n";
}

SingularityFn model_singularity(const GreenModel& m) {
    if (const Free* f = std::get_if<Free>(&m)) return standard_singularity_fn(f->dim);
    if (const Landau3D* l = std::get_if<Landau3D>(&m))
        return magnetic_singularity_fn(2.0 * kPi * l->xi);
    if (const Coulomb3D* c = std::get_if<Coulomb3D>(&m)) {
        const double q = c->q;
        return [q](const Point& a, const Point& b) -> Cplx {
            const double d = distance(a, b);
            return Cplx(1.0 / (4.0 * kPi * d) + q / (4.0 * kPi) * std::log(d), 0.0);
        };
    }
    throw DomainError("no on-diagonal singularity defined for " + model_name(m));
}

int cmd_eval(const ModelFlags& mf, const std::string& zeta_s, const std::string& r_s,
             const std::string& x_s, const std::string& y_s, const std::string& dx_s,
             bool json) {
    const GreenModel model = model_from_flags(mf);
    const SpectralPoint s = SpectralPoint::from_zeta(parse_zeta(zeta_s));
    std::vector<OutputRecord> recs;

    if (const Free* f = std::get_if<Free>(&model)) {
        if (r_s.empty()) throw DomainError("free models need --r");
        for (double r : parse_list(r_s))
            recs.push_back(make_record(model, s.zeta, {r}, green_free(f->dim, r, s)));
    } else if (std::holds_alternative<Landau3D>(model) && !dx_s.empty()) {
        const Point dx = parse_point(dx_s, 3);
        const EvalResult g = landau_F(dx, s, std::get<Landau3D>(model).xi);
        recs.push_back(make_record(model, s.zeta, {dx[0], dx[1], dx[2]}, g));
    } else {
        const int dim = model_dimension(model);
        if (x_s.empty() || y_s.empty())
            throw DomainError(model_name(model) + " needs --x and --y");
        const Point x = parse_point(x_s, dim), y = parse_point(y_s, dim);
        std::vector<double> coords(x.c.begin(), x.c.begin() + dim);
        coords.insert(coords.end(), y.c.begin(), y.c.begin() + dim);
        recs.push_back(make_record(model, s.zeta, coords, green_eval(model, x, y, s)));
    }
    emit(recs, json);
    return 0;
}

int cmd_renorm(const ModelFlags& mf, const std::string& zeta_s, const std::string& radii_s,
               bool json) {
    const GreenModel model = model_from_flags(mf);
    const SpectralPoint s = SpectralPoint::from_zeta(parse_zeta(zeta_s));
    const std::vector<double> radii = parse_radii(radii_s);
    const SingularityFn sing = model_singularity(model);
    const int dim = model_dimension(model);

    Point x0;
    x0.dim = dim;
    Point e;
    e.dim = dim;
    if (std::holds_alternative<Landau3D>(model))
        e[2] = 1.0;
    else
        e[0] = 1.0;

    struct Row {
        double r;
        Cplx g, sv, ren;
        double err;
        std::string method;
    };
    std::vector<Row> rows(radii.size());
    parallel_for(radii.size(), [&](size_t i) {
        Point y = x0;
        for (int k = 0; k < dim; ++k) y[k] += radii[i] * e[k];
        const EvalResult g = green_eval(model, y, x0, s);
        const Cplx sv = sing(y, x0);
        rows[i] = Row{radii[i], g.value, sv, g.value - sv, g.abs_error,
                      method_name(g.method)};
    });
    const RenormValue rv = renorm_diagonal(model, x0, s, radii, sing);

    std::vector<std::string> lines;
    if (json) {
        for (const Row& row : rows) {
            nlohmann::json j;
            j["r"] = row.r;
            j["g_re"] = row.g.real();
            j["g_im"] = row.g.imag();
            j["s_re"] = row.sv.real();
            j["s_im"] = row.sv.imag();
            j["ren_re"] = row.ren.real();
            j["ren_im"] = row.ren.imag();
            j["abs_error"] = row.err;
            j["tag"] = "sample";
            lines.push_back(j.dump());
        }
        nlohmann::json j;
        j["ren_re"] = rv.value.real();
        j["ren_im"] = rv.value.imag();
        j["abs_error"] = rv.extrapolation_error;
        j["tag"] = "extrapolated";
        lines.push_back(j.dump());
    } else {
        lines.push_back("r,g_re,g_im,s_re,s_im,ren_re,ren_im,abs_error,tag");
        for (const Row& row : rows)
            lines.push_back(format_g17(row.r) + "," + format_g17(row.g.real()) + "," +
                            format_g17(row.g.imag()) + "," + format_g17(row.sv.real()) + "," +
                            format_g17(row.sv.imag()) + "," + format_g17(row.ren.real()) + "," +
                            format_g17(row.ren.imag()) + "," + format_g17(row.err) + ",sample");
        lines.push_back(",,,,," + format_g17(rv.value.real()) + "," +
                        format_g17(rv.value.imag()) + "," +
                        format_g17(rv.extrapolation_error) + ",extrapolated");
    }
    for (const std::string& l : lines) std::cout << l << "\n";
    return 0;
}

unsigned parse_basis(const std::string& text) {
    unsigned flags = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "inv2")
            flags |= basis::inv2;
        else if (item == "inv1")
            flags |= basis::inv1;
        else if (item == "log")
            flags |= basis::log;
        else if (item == "const")
            flags |= basis::constant;
        else
            throw DomainError("unknown basis element '" + item + "'");
    }
    return flags;
}

int cmd_fit(const ModelFlags& mf, const std::string& zeta_s, const std::string& radii_s,
            const std::string& basis_s) {
    const GreenModel model = model_from_flags(mf);
    const SpectralPoint s = SpectralPoint::from_zeta(parse_zeta(zeta_s));
    const std::vector<double> radii = parse_radii(radii_s);
    const unsigned flags = parse_basis(basis_s);
    const int dim = model_dimension(model);

    std::vector<std::pair<double, Cplx>> samples(radii.size());
    parallel_for(radii.size(), [&](size_t i) {
        Point x0, y;
        x0.dim = dim;
        y.dim = dim;
        y[0] = radii[i];
        samples[i] = {radii[i], green_eval(model, y, x0, s).value};
    });
    const SingularityFit fit = fit_singularity(samples, flags);

    nlohmann::json j;
    j["model"] = model_name(model);
    j["zeta_re"] = s.zeta.real();
    j["zeta_im"] = s.zeta.imag();
    j["c_inv2_re"] = fit.c_inv2.real();
    j["c_inv2_im"] = fit.c_inv2.imag();
    j["c_inv1_re"] = fit.c_inv1.real();
    j["c_inv1_im"] = fit.c_inv1.imag();
    j["c_log_re"] = fit.c_log.real();
    j["c_log_im"] = fit.c_log.imag();
    j["c_const_re"] = fit.c_const.real();
    j["c_const_im"] = fit.c_const.imag();
    j["residual"] = fit.residual;
    j["radii_used"] = fit.radii_used;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_zeta_probe(const ModelFlags& mf, const std::string& z1_s, const std::string& z2_s,
                   const std::string& radii_s) {
    const GreenModel model = model_from_flags(mf);
    const SpectralPoint z1 = SpectralPoint::from_zeta(parse_zeta(z1_s));
    const SpectralPoint z2 = SpectralPoint::from_zeta(parse_zeta(z2_s));
    const std::vector<double> radii = parse_radii(radii_s);
    const ZetaProbeReport rep = zeta_independence_probe(model, z1, z2, radii);

    nlohmann::json j;
    j["model"] = model_name(model);
    j["bounded"] = rep.bounded;
    j["fitted_log_slope_re"] = rep.fitted_log_slope.real();
    j["fitted_log_slope_im"] = rep.fitted_log_slope.imag();
    j["max_variation"] = rep.max_variation;
    j["limit_re"] = rep.limit.real();
    j["limit_im"] = rep.limit.imag();
    j["limit_error"] = rep.limit_error;
    std::cout << j.dump() << "\n";
    return 0;
}

KreinSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open system file '" + path + "'");
    nlohmann::json j;
    in >> j;
    ModelFlags mf;
    const auto& jb = j.at("base");
    mf.name = jb.at("model").get<std::string>();
    if (jb.contains("q")) mf.q = jb["q"].get<double>();
    if (jb.contains("xi")) mf.xi = jb["xi"].get<double>();
    if (jb.contains("omega")) mf.omega = jb["omega"].get<double>();
    KreinSystem sys;
    sys.base = model_from_flags(mf);
    const int dim = model_dimension(sys.base);
    for (const auto& jp : j.at("points")) {
        Point p;
        p.dim = dim;
        const auto v = jp.get<std::vector<double>>();
        if (static_cast<int>(v.size()) != dim)
            throw DomainError("system point dimension mismatch");
        for (int i = 0; i < dim; ++i) p[i] = v[i];
        sys.points.push_back(p);
    }
    sys.alphas = j.at("alphas").get<std::vector<double>>();
    sys.validate();
    return sys;
}

int cmd_krein(const std::string& file, const std::string& window_s, double tol, bool json) {
    const KreinSystem sys = load_system(file);
    const std::vector<double> w = parse_list(window_s);
    if (w.size() != 2) throw DomainError("--window wants 'lo,hi'");
    const auto roots = bound_states(sys, w[0], w[1], tol);
    std::vector<std::string> lines;
    if (json) {
        for (const BoundState& b : roots) {
            nlohmann::json j;
            j["energy"] = b.energy;
            j["multiplicity"] = b.multiplicity;
            lines.push_back(j.dump());
        }
    } else {
        lines.push_back("energy,multiplicity");
        for (const BoundState& b : roots)
            lines.push_back(format_g17(b.energy) + "," + std::to_string(b.multiplicity));
    }
    for (const std::string& l : lines) std::cout << l << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, bool json) {
    std::vector<verify::CheckResult> results;
    if (suite == "all") {
        results = verify::run_all();
    } else {
        results.push_back(verify::run_suite(suite));
    }
    bool all_pass = true;
    for (const auto& c : results) all_pass = all_pass && c.pass;

    if (json) {
        nlohmann::json j;
        j["all_pass"] = all_pass;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : results) {
            nlohmann::json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["max_deviation"] = c.max_deviation;
            jc["tolerance"] = c.tolerance;
            jc["details"] = c.details;
            j["checks"].push_back(jc);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : results)
            std::printf("%s %-14s max_dev=%.3e tol=%.1e  %s\n", c.pass ? "PASS" : "FAIL",
                        c.name.c_str(), c.max_deviation, c.tolerance, c.details.c_str());
        std::printf("%s\n", all_pass ? "all checks passed" : "SOME CHECKS FAILED");
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green-function kernels of exemplar Schrodinger operators"};
    app.require_subcommand(1);

    ModelFlags mf;
    std::string zeta_s = "-1", zeta2_s = "-4", r_s, x_s, y_s, dx_s;
    std::string radii_s = "1e-1:1e-5:12", basis_s = "inv1,const";
    std::string system_file, window_s = "-200,-1", suite = "all";
    double tol = 1e-9;
    bool json = false;

    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", mf.name,
                      "free1d|free2d|free3d|free4d|coulomb3d|landau3d|invosc1d")
            ->required();
        c->add_option("--q", mf.q, "Coulomb coupling");
        c->add_option("--xi", mf.xi, "magnetic flux density");
        c->add_option("--omega", mf.omega, "oscillator frequency");
        c->add_flag("--json", json, "JSON lines instead of CSV");
    };

    CLI::App* ev = app.add_subcommand("eval", "evaluate a Green function");
    add_model(ev);
    ev->add_option("--zeta", zeta_s, "spectral parameter re[,im]")->required();
    ev->add_option("--r", r_s, "radial separation(s), free models");
    ev->add_option("--x", x_s, "first point (comma separated)");
    ev->add_option("--y", y_s, "second point");
    ev->add_option("--dx", dx_s, "landau3d: translation-invariant factor at this offset");

    CLI::App* rn = app.add_subcommand("renorm", "near-diagonal table and extrapolated limit");
    add_model(rn);
    rn->add_option("--zeta", zeta_s)->required();
    rn->add_option("--radii", radii_s, "hi:lo:count or explicit list");

    CLI::App* ft = app.add_subcommand("fit", "least-squares singular-coefficient fit");
    add_model(ft);
    ft->add_option("--zeta", zeta_s)->required();
    ft->add_option("--radii", radii_s);
    ft->add_option("--basis", basis_s, "subset of inv2,inv1,log,const")->required();

    CLI::App* zp = app.add_subcommand("zeta-probe", "spectral-parameter independence probe");
    add_model(zp);
    zp->add_option("--zeta1", zeta_s)->required();
    zp->add_option("--zeta2", zeta2_s)->required();
    zp->add_option("--radii", radii_s);

    CLI::App* kr = app.add_subcommand("krein", "point-interaction bound states");
    kr->add_option("--system", system_file, "JSON file {base, points, alphas}")->required();
    kr->add_option("--window", window_s, "energy window lo,hi");
    kr->add_option("--tol", tol, "root tolerance");
    kr->add_flag("--json", json);

    CLI::App* vf = app.add_subcommand("verify", "run self-verification suites");
    vf->add_option("suite", suite, "suite name or 'all'");
    vf->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ev->parsed()) return cmd_eval(mf, zeta_s, r_s, x_s, y_s, dx_s, json);
        if (rn->parsed()) return cmd_renorm(mf, zeta_s, radii_s, json);
        if (ft->parsed()) return cmd_fit(mf, zeta_s, radii_s, basis_s);
        if (zp->parsed()) return cmd_zeta_probe(mf, zeta_s, zeta2_s, radii_s);
        if (kr->parsed()) return cmd_krein(system_file, window_s, tol, json);
        if (vf->parsed()) return cmd_verify(suite, json);
    } catch (const greenkern::PoleError& e) {
        std::cerr << "PoleError: " << e.what() << "\n";
        return 3;
    } catch (const greenkern::DomainError& e) {
        std::cerr << "DomainError: " << e.what() << "\n";
        return 3;
    } catch (const greenkern::WindowTouchesSpectrum& e) {
        std::cerr << "WindowTouchesSpectrum: " << e.what() << "\n";
        return 3;
    } catch (const greenkern::SingularQ& e) {
        std::cerr << "SingularQ: " << e.what() << "\n";
        return 3;
    } catch (const greenkern::ToleranceNotMet& e) {
        std::cerr << "ToleranceNotMet: " << e.what() << "\n";
        return 3;
    } catch (const greenkern::Error& e) {
        std::cerr << "Error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
