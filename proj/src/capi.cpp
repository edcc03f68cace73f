#include "bcvharmonic.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "bcv/classify.hpp"
#include "bcv/helicoid.hpp"
#include "bcv/hopf.hpp"
#include "bcv/verify.hpp"

using nlohmann::json;

struct bcvh_engine {
    std::string last_error;
};

namespace {

template <typename Fn>
bcvh_status guarded(bcvh_engine* eng, Fn&& fn) {
    if (!eng)
        return BCVH_INVALID_ARGUMENT;
    eng->last_error.clear();
    try {
        return fn();
    } catch (const bcv::InvalidParams& e) {
        eng->last_error = e.what();
        return BCVH_INVALID_ARGUMENT;
    } catch (const bcv::InvalidBase& e) {
        eng->last_error = e.what();
        return BCVH_INVALID_ARGUMENT;
    } catch (const bcv::OutOfDomain& e) {
        eng->last_error = e.what();
        return BCVH_OUT_OF_DOMAIN;
    } catch (const bcv::NotArcLength& e) {
        eng->last_error = e.what();
        return BCVH_OUT_OF_DOMAIN;
    } catch (const bcv::DegenerateImmersion& e) {
        eng->last_error = e.what();
        return BCVH_OUT_OF_DOMAIN;
    } catch (const bcv::Inadmissible& e) {
        eng->last_error = e.what();
        return BCVH_INADMISSIBLE;
    } catch (const bcv::OutOfRegion& e) {
        eng->last_error = e.what();
        return BCVH_INADMISSIBLE;
    } catch (const std::exception& e) {
        eng->last_error = e.what();
        return BCVH_INTERNAL;
    } catch (...) {
        eng->last_error = "unknown error";
        return BCVH_INTERNAL;
    }
}

bcvh_status require_out(bcvh_engine* eng, const void* p) {
    if (!p) {
        eng->last_error = "output pointer is null";
        return BCVH_INVALID_ARGUMENT;
    }
    return BCVH_OK;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

bcvh_engine* bcvh_create(void) { return new (std::nothrow) bcvh_engine(); }

void bcvh_destroy(bcvh_engine* eng) { delete eng; }

const char* bcvh_last_error(const bcvh_engine* eng) {
    return eng ? eng->last_error.c_str() : "null engine";
}

const char* bcvh_version(void) { return "0.1.0"; }

bcvh_status bcvh_quadratic_condition(bcvh_engine* eng, double m, double l, int r,
                                     bcvh_quadratic* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        const bcv::RootReport rr = bcv::quadratic_condition(m, l, r);
        out->b = rr.b;
        out->c = rr.c;
        out->disc = rr.disc;
        out->n_real = rr.n_real;
        out->n_positive = rr.n_positive;
        for (int i = 0; i < 2; ++i) {
            out->roots[i] = i < rr.n_real ? rr.roots[static_cast<std::size_t>(i)] : 0.0;
            out->positive[i] = i < rr.n_positive ? rr.positive[static_cast<std::size_t>(i)] : 0.0;
        }
        return BCVH_OK;
    });
}

bcvh_status bcvh_classify(bcvh_engine* eng, double m, double l, int r,
                          bcvh_classification* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        const bcv::Classification c = bcv::classify(m, l, r);
        out->tag = static_cast<int>(c.tag);
        out->n_roots = c.n_roots;
        out->has_radius = c.has_radius ? 1 : 0;
        out->rho = c.rho;
        out->has_r_bound = c.has_r_bound ? 1 : 0;
        out->r_bound = c.r_bound;
        for (int i = 0; i < 2; ++i) {
            out->kappa_sq[i] = i < c.n_roots ? c.kappa_sq[static_cast<std::size_t>(i)] : 0.0;
            out->radius[i] =
                (c.has_radius && i < c.n_roots) ? c.radius[static_cast<std::size_t>(i)] : 0.0;
        }
        return BCVH_OK;
    });
}

bcvh_status bcvh_r_bound(bcvh_engine* eng, double m, double l, double* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        *out = bcv::r_bound(m, l);
        return BCVH_OK;
    });
}

bcvh_status bcvh_r_a(bcvh_engine* eng, double a, double* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        *out = bcv::r_a(a);
        return BCVH_OK;
    });
}

bcvh_status bcvh_tension3(bcvh_engine* eng, double m, double l, double kappa,
                          bcvh_tension3_result* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        const bcv::BcvParams par{m, l};
        const bcv::KgJet jet = bcv::KgJet::constant(kappa);
        const auto res = bcv::triharmonic_residuals(par, jet);
        const bcv::CylVec t = bcv::tau3_hopf(par, jet);
        for (int i = 0; i < 3; ++i)
            out->residuals[i] = res[static_cast<std::size_t>(i)];
        out->tau3[0] = t.x;
        out->tau3[1] = t.e3;
        out->tau3[2] = t.eta;
        return BCVH_OK;
    });
}

bcvh_status bcvh_r_tension(bcvh_engine* eng, double m, double l, double kappa, int r,
                           double out[3]) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        const bcv::CylVec t = bcv::r_tension_cmc({m, l}, kappa, r);
        out[0] = t.x;
        out[1] = t.e3;
        out[2] = t.eta;
        return BCVH_OK;
    });
}

bcvh_status bcvh_circle_radius(bcvh_engine* eng, double m, double kappa, double* radius,
                               double* rho) {
    return guarded(eng, [&] {
        const auto [R, p] = bcv::circle_radius(m, kappa);
        if (radius)
            *radius = R;
        if (rho)
            *rho = p;
        return BCVH_OK;
    });
}

bcvh_status bcvh_helicoid_tension3(bcvh_engine* eng, double alpha, double m, double l,
                                   bcvh_helicoid* out) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, out); st != BCVH_OK)
            return st;
        const bcv::HelicoidData h = bcv::helicoid_geometry(alpha, m, l);
        const bcv::Tau3Helicoid t = bcv::tau3_helicoid(alpha, m, l);
        out->slope = h.a;
        out->big_l = h.L;
        out->alpha_signed = h.alpha_signed;
        out->nu = h.nu;
        out->norm_a2 = h.normA2;
        out->t1 = t.T1;
        out->t2 = t.T2;
        out->t3 = t.T3;
        out->tau3[0] = t.tau3.c1;
        out->tau3[1] = t.tau3.c2;
        out->tau3[2] = t.tau3.c3;
        return BCVH_OK;
    });
}

bcvh_status bcvh_verify(bcvh_engine* eng, const char* suite, char** json_out,
                        int* all_passed) {
    return bcvh_verify_ex(eng, suite, nullptr, json_out, all_passed);
}

bcvh_status bcvh_verify_ex(bcvh_engine* eng, const char* suite,
                           const bcvh_verify_config* cfg, char** json_out,
                           int* all_passed) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, suite); st != BCVH_OK)
            return st;
        bcv::VerifyConfig vc;
        if (cfg) {
            if (cfg->tol_first > 0.0)
                vc.tol_first = cfg->tol_first;
            if (cfg->tol_second > 0.0)
                vc.tol_second = cfg->tol_second;
            if (cfg->tol_exact > 0.0)
                vc.tol_exact = cfg->tol_exact;
            if (cfg->fd_step > 0.0)
                vc.fd_step = cfg->fd_step;
            if (cfg->seed != 0)
                vc.seed = cfg->seed;
        }
        const auto reports = bcv::verify_by_name(suite, vc);
        bool ok = true;
        json suites = json::array();
        for (const auto& rep : reports) {
            json checks = json::array();
            for (const auto& c : rep.checks) {
                checks.push_back({{"name", c.name},
                                  {"residual", c.residual},
                                  {"tol", c.tol},
                                  {"passed", c.passed}});
                ok = ok && c.passed;
            }
            suites.push_back(
                {{"suite", rep.suite}, {"all_passed", rep.all_passed()}, {"checks", checks}});
        }
        const json doc = {{"suites", suites}, {"all_passed", ok}};
        if (json_out) {
            *json_out = copy_string(doc.dump(2));
            if (!*json_out) {
                eng->last_error = "allocation failure";
                return BCVH_INTERNAL;
            }
        }
        if (all_passed)
            *all_passed = ok ? 1 : 0;
        return ok ? BCVH_OK : BCVH_VERIFY_FAILED;
    });
}

void bcvh_string_free(char* s) { std::free(s); }

bcvh_status bcvh_diagram(bcvh_engine* eng, int r, double l_min, double l_max, double m_min,
                         double m_max, int res_l, int res_m, int* tags, double* l_values,
                         double* m_values) {
    return guarded(eng, [&] {
        if (bcvh_status st = require_out(eng, tags); st != BCVH_OK)
            return st;
        if (bcvh_status st = require_out(eng, l_values); st != BCVH_OK)
            return st;
        if (bcvh_status st = require_out(eng, m_values); st != BCVH_OK)
            return st;
        const bcv::DiagramGrid grid =
            bcv::diagram_grid(r, l_min, l_max, m_min, m_max, res_l, res_m);
        for (int il = 0; il < res_l; ++il)
            l_values[il] = grid.l_values[static_cast<std::size_t>(il)];
        for (int im = 0; im < res_m; ++im)
            m_values[im] = grid.m_values[static_cast<std::size_t>(im)];
        for (int im = 0; im < res_m; ++im)
            for (int il = 0; il < res_l; ++il)
                tags[im * res_l + il] = static_cast<int>(grid.at(im, il));
        return BCVH_OK;
    });
}

} // extern "C"
