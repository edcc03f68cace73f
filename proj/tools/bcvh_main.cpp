// bcvh: classification and verification front end for CMC r-harmonic Hopf
// cylinders and parabolic helicoids in the two-parameter family of
// homogeneous 3-spaces. Links only the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcvharmonic.h"

using nlohmann::json;

namespace {

int status_to_exit(bcvh_status st) {
    switch (st) {
    case BCVH_OK:
        return 0;
    case BCVH_INVALID_ARGUMENT:
        return 1;
    case BCVH_OUT_OF_DOMAIN:
    case BCVH_INADMISSIBLE:
        return 2;
    case BCVH_VERIFY_FAILED:
        return 3;
    case BCVH_INTERNAL:
    default:
        return 1;
    }
}

const char* case_name(int tag) {
    switch (tag) {
    case BCVH_CASE_POSITIVE_BUNDLE_CURVATURE:
        return "PositiveBundleCurvatureCase";
    case BCVH_CASE_PARABOLA:
        return "ParabolaCase";
    case BCVH_CASE_SU2_NEGATIVE:
        return "SU2NegativeCase";
    case BCVH_CASE_NO_SOLUTION:
    default:
        return "NoSolution";
    }
}

struct EngineHandle {
    bcvh_engine* eng = bcvh_create();
    ~EngineHandle() { bcvh_destroy(eng); }
};

int fail(const EngineHandle& h, bcvh_status st) {
    std::cerr << "error: " << bcvh_last_error(h.eng) << "\n";
    return status_to_exit(st);
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw CLI::FileError("cannot open " + out_path);
    out << doc.dump(2) << "\n";
}

// -------------------------------------------------------------- classify

int run_classify(const EngineHandle& h, double m, double l, int r) {
    bcvh_classification c{};
    if (const bcvh_status st = bcvh_classify(h.eng, m, l, r, &c); st != BCVH_OK)
        return fail(h, st);
    bcvh_quadratic q{};
    if (const bcvh_status st = bcvh_quadratic_condition(h.eng, m, l, r, &q); st != BCVH_OK)
        return fail(h, st);

    json doc{{"m", m}, {"l", l}, {"r", r}, {"case", case_name(c.tag)}};
    json roots = json::array();
    json radius = json::array();
    for (int i = 0; i < c.n_roots; ++i) {
        roots.push_back(c.kappa_sq[i]);
        if (c.has_radius)
            radius.push_back(c.radius[i]);
    }
    doc["roots"] = roots;
    doc["radius"] = radius;
    doc["rho"] = c.has_radius ? json(c.rho) : json(nullptr);
    doc["r_bound"] = c.has_r_bound ? json(c.r_bound) : json(nullptr);
    doc["quadratic"] = {{"b", q.b}, {"c", q.c}, {"discriminant", q.disc}};
    emit(doc, "");
    return 0;
}

// --------------------------------------------------------------- verify

int run_verify(const EngineHandle& h, const std::string& suite, const bcvh_verify_config& cfg) {
    char* report = nullptr;
    int all_passed = 0;
    const bcvh_status st = bcvh_verify_ex(h.eng, suite.c_str(), &cfg, &report, &all_passed);
    if (st != BCVH_OK && st != BCVH_VERIFY_FAILED)
        return fail(h, st);
    std::cout << report << "\n";
    bcvh_string_free(report);
    return status_to_exit(st);
}

// -------------------------------------------------------------- tension3

int run_tension3(const EngineHandle& h, double m, double l, double kappa, double tol) {
    bcvh_tension3_result t{};
    if (const bcvh_status st = bcvh_tension3(h.eng, m, l, kappa, &t); st != BCVH_OK)
        return fail(h, st);
    const bool flat = std::abs(t.residuals[0]) <= tol && std::abs(t.residuals[1]) <= tol &&
                      std::abs(t.residuals[2]) <= tol;
    const json doc{{"m", m},
                   {"l", l},
                   {"kappa", kappa},
                   {"tau3", {{"x", t.tau3[0]}, {"e3", t.tau3[1]}, {"eta", t.tau3[2]}}},
                   {"residuals", {t.residuals[0], t.residuals[1], t.residuals[2]}},
                   {"triharmonic", flat},
                   {"tol", tol}};
    emit(doc, "");
    return 0;
}

// -------------------------------------------------------------- rtension

int run_rtension(const EngineHandle& h, double m, double l, double kappa, int r) {
    double tau[3] = {0.0, 0.0, 0.0};
    if (const bcvh_status st = bcvh_r_tension(h.eng, m, l, kappa, r, tau); st != BCVH_OK)
        return fail(h, st);
    const json doc{{"m", m},
                   {"l", l},
                   {"kappa", kappa},
                   {"r", r},
                   {"eta_coefficient", tau[2]},
                   {"tau_r", {{"x", tau[0]}, {"e3", tau[1]}, {"eta", tau[2]}}}};
    emit(doc, "");
    return 0;
}

// -------------------------------------------------------------- helicoid

int run_helicoid(const EngineHandle& h, double alpha, double m, double l, double tol) {
    bcvh_helicoid hd{};
    if (const bcvh_status st = bcvh_helicoid_tension3(h.eng, alpha, m, l, &hd); st != BCVH_OK)
        return fail(h, st);
    const bool flat =
        std::abs(hd.t1) <= tol && std::abs(hd.t2) <= tol && std::abs(hd.t3) <= tol;
    const json doc{{"alpha", alpha},
                   {"m", m},
                   {"l", l},
                   {"slope", hd.slope},
                   {"L", hd.big_l},
                   {"alpha_signed", hd.alpha_signed},
                   {"nu", hd.nu},
                   {"normA2", hd.norm_a2},
                   {"T1", hd.t1},
                   {"T2", hd.t2},
                   {"T3", hd.t3},
                   {"tau3", {hd.tau3[0], hd.tau3[1], hd.tau3[2]}},
                   {"triharmonic", flat},
                   {"tol", tol}};
    emit(doc, "");
    return 0;
}

// --------------------------------------------------------------- diagram

struct DiagramData {
    int r = 0;
    int res_l = 0, res_m = 0;
    std::vector<double> l_values, m_values;
    std::vector<int> tags; // row-major by m
};

void write_csv(const DiagramData& d, std::ostream& out) {
    out << "m";
    for (double l : d.l_values)
        out << "," << l;
    out << "\n";
    for (int im = 0; im < d.res_m; ++im) {
        out << d.m_values[im];
        for (int il = 0; il < d.res_l; ++il)
            out << "," << d.tags[im * d.res_l + il];
        out << "\n";
    }
}

void write_svg(const DiagramData& d, std::ostream& out) {
    const double W = 560.0, H = 420.0, margin = 50.0, legend_h = 96.0;
    const double l0 = d.l_values.front(), l1 = d.l_values.back();
    const double m0 = d.m_values.front(), m1 = d.m_values.back();
    const double sx = W / (l1 > l0 ? l1 - l0 : 1.0);
    const double sy = H / (m1 > m0 ? m1 - m0 : 1.0);
    const auto px = [&](double l) { return margin + (l - l0) * sx; };
    const auto py = [&](double m) { return margin + (m1 - m) * sy; };

    static const char* colors[4] = {"#d9d9d9", "#4daf4a", "#377eb8", "#ff7f00"};
    static const char* labels[4] = {"NoSolution", "PositiveBundleCurvatureCase",
                                    "ParabolaCase", "SU2NegativeCase"};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W + 2 * margin
        << "\" height=\"" << H + 2 * margin + legend_h << "\">\n";
    out << "<defs><clipPath id=\"plot\"><rect x=\"" << margin << "\" y=\"" << margin
        << "\" width=\"" << W << "\" height=\"" << H << "\"/></clipPath></defs>\n";

    // cells, each centred on its sample point
    const double cw = d.res_l > 1 ? W / (d.res_l - 1) : W;
    const double ch = d.res_m > 1 ? H / (d.res_m - 1) : H;
    out << "<g clip-path=\"url(#plot)\">\n";
    for (int im = 0; im < d.res_m; ++im)
        for (int il = 0; il < d.res_l; ++il) {
            const int tag = d.tags[im * d.res_l + il];
            out << "<rect x=\"" << px(d.l_values[il]) - cw / 2 << "\" y=\""
                << py(d.m_values[im]) - ch / 2 << "\" width=\"" << cw << "\" height=\"" << ch
                << "\" fill=\"" << colors[tag & 3] << "\"/>\n";
        }

    // boundary parabolas 4m = l^2 and 4m = 3l^2/4
    const auto parabola = [&](double coeff, const char* stroke, const char* dash) {
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"" << dash
            << " points=\"";
        const int n = 200;
        for (int i = 0; i <= n; ++i) {
            const double l = l0 + (l1 - l0) * i / n;
            out << px(l) << "," << py(coeff * l * l) << " ";
        }
        out << "\"/>\n";
    };
    parabola(0.25, "#000000", "");
    parabola(3.0 / 16.0, "#000000", " stroke-dasharray=\"6 4\"");
    out << "</g>\n";

    // axes box and labels
    out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W << "\" height=\""
        << H << "\" fill=\"none\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << margin + W / 2 << "\" y=\"" << margin + H + 32
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">l (order r = "
        << d.r << ")</text>\n";
    out << "<text x=\"16\" y=\"" << margin + H / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 16 "
        << margin + H / 2 << ")\" text-anchor=\"middle\">m</text>\n";

    // legend
    const double ly = margin + H + 48.0;
    for (int t = 0; t < 4; ++t) {
        const double y = ly + 18.0 * t;
        out << "<rect x=\"" << margin << "\" y=\"" << y << "\" width=\"14\" height=\"14\" fill=\""
            << colors[t] << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << margin + 20 << "\" y=\"" << y + 12
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << labels[t] << "</text>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\"" << margin + 300
        << "," << ly + 7 << " " << margin + 330 << "," << ly + 7 << "\"/>\n";
    out << "<text x=\"" << margin + 336 << "\" y=\"" << ly + 12
        << "\" font-family=\"sans-serif\" font-size=\"12\">4m = l^2</text>\n";
    out << "<polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" stroke-dasharray=\"6 4\" points=\""
        << margin + 300 << "," << ly + 25 << " " << margin + 330 << "," << ly + 25 << "\"/>\n";
    out << "<text x=\"" << margin + 336 << "\" y=\"" << ly + 30
        << "\" font-family=\"sans-serif\" font-size=\"12\">4m = 3l^2/4</text>\n";
    out << "</svg>\n";
}

int run_diagram(const EngineHandle& h, int r, double lmin, double lmax, double mmin, double mmax,
                int res, const std::string& format, const std::string& out_path) {
    DiagramData d;
    d.r = r;
    d.res_l = res;
    d.res_m = res;
    d.l_values.resize(static_cast<std::size_t>(res));
    d.m_values.resize(static_cast<std::size_t>(res));
    d.tags.resize(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
    if (const bcvh_status st = bcvh_diagram(h.eng, r, lmin, lmax, mmin, mmax, res, res,
                                            d.tags.data(), d.l_values.data(), d.m_values.data());
        st != BCVH_OK)
        return fail(h, st);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        out = &file;
    }
    if (format == "svg")
        write_svg(d, *out);
    else
        write_csv(d, *out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Existence and tension-field reports for CMC r-harmonic Hopf cylinders "
                 "and parabolic helicoids in homogeneous 3-spaces"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file (flags win)");

    double m = 0.0, l = 0.0, kappa = 0.0, alpha = 0.0;
    double tol = 1e-9;
    int r = 2;

    auto* classify = app.add_subcommand("classify", "existence case and roots for (m, l, r)");
    classify->add_option("--m", m, "base curvature parameter")->required();
    classify->add_option("--l", l, "bundle curvature parameter")->required();
    classify->add_option("--r", r, "harmonicity order")->required()->check(CLI::Range(2, 1 << 20));

    std::string suite = "all";
    bcvh_verify_config vcfg{0.0, 0.0, 0.0, 0.0, 0};
    auto* verify = app.add_subcommand("verify", "run a self-verification suite");
    verify->add_option("--suite", suite, "one of core|hopf|classify|surface|helicoid|all")
        ->check(CLI::IsMember({"core", "hopf", "classify", "surface", "helicoid", "all"}));
    verify->add_option("--tol-first", vcfg.tol_first, "tolerance for first-order FD checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-second", vcfg.tol_second, "tolerance for nested FD checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol-exact", vcfg.tol_exact, "tolerance for closed-form identities")
        ->check(CLI::PositiveNumber);
    verify->add_option("--fd-step", vcfg.fd_step, "finite-difference base step")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vcfg.seed, "seed for sampled checks");

    auto* tension3 = app.add_subcommand("tension3", "third-order tension of a CMC Hopf cylinder");
    tension3->add_option("--m", m, "base curvature parameter")->required();
    tension3->add_option("--l", l, "bundle curvature parameter")->required();
    tension3->add_option("--kappa", kappa, "constant geodesic curvature")->required();
    tension3->add_option("--tol", tol, "residual tolerance for the triharmonic flag")
        ->check(CLI::PositiveNumber);

    auto* rtension = app.add_subcommand("rtension", "r-th tension of a CMC Hopf cylinder");
    rtension->add_option("--m", m, "base curvature parameter")->required();
    rtension->add_option("--l", l, "bundle curvature parameter")->required();
    rtension->add_option("--kappa", kappa, "constant geodesic curvature")->required();
    rtension->add_option("--r", r, "harmonicity order")->required()->check(CLI::Range(2, 1 << 20));

    auto* helicoid = app.add_subcommand("helicoid", "parabolic helicoid geometry and tension");
    helicoid->add_option("--alpha", alpha, "mean curvature magnitude")->required();
    helicoid->add_option("--m", m, "base curvature parameter (m < 0)")->required();
    helicoid->add_option("--l", l, "bundle curvature parameter")->required();
    helicoid->add_option("--tol", tol, "residual tolerance for the triharmonic flag")
        ->check(CLI::PositiveNumber);

    double lmin = 0.0, lmax = 3.0, mmin = -1.0, mmax = 2.0;
    int res = 64;
    std::string format = "csv", out_path;
    auto* diagram = app.add_subcommand("diagram", "existence-region grid as CSV or SVG");
    diagram->add_option("--r", r, "harmonicity order")->required()->check(CLI::Range(2, 1 << 20));
    diagram->add_option("--lmin", lmin, "lower l bound");
    diagram->add_option("--lmax", lmax, "upper l bound");
    diagram->add_option("--mmin", mmin, "lower m bound");
    diagram->add_option("--mmax", mmax, "upper m bound");
    diagram->add_option("--res", res, "samples per axis")->check(CLI::Range(2, 4096));
    diagram->add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));
    diagram->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    EngineHandle h;
    if (!h.eng) {
        std::cerr << "error: engine allocation failed\n";
        return 1;
    }
    try {
        if (classify->parsed())
            return run_classify(h, m, l, r);
        if (verify->parsed())
            return run_verify(h, suite, vcfg);
        if (tension3->parsed())
            return run_tension3(h, m, l, kappa, tol);
        if (rtension->parsed())
            return run_rtension(h, m, l, kappa, r);
        if (helicoid->parsed())
            return run_helicoid(h, alpha, m, l, tol);
        if (diagram->parsed())
            return run_diagram(h, r, lmin, lmax, mmin, mmax, res, format, out_path);
    } catch (const CLI::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
