#ifndef BCVHARMONIC_H
#define BCVHARMONIC_H

/* C interface to the BCV harmonic-surface engine: classification of
 * constant-mean-curvature r-harmonic Hopf cylinders, tension-field
 * evaluation, helicoid certification, and the self-verification suites.
 *
 * All functions are reentrant as long as each engine handle is used from
 * one thread at a time; the handle only stores the last error message. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bcvh_engine bcvh_engine;

typedef enum bcvh_status {
    BCVH_OK = 0,
    BCVH_INVALID_ARGUMENT = 1, /* bad parameters (r < 2, m >= 0 where m < 0 needed, ...) */
    BCVH_OUT_OF_DOMAIN = 2,    /* evaluation left the chart or the curve is degenerate */
    BCVH_INADMISSIBLE = 3,     /* parameter pair outside the admissible region */
    BCVH_VERIFY_FAILED = 4,    /* verification ran and at least one check failed */
    BCVH_INTERNAL = 5
} bcvh_status;

/* Existence cases for proper CMC r-harmonic Hopf cylinders. */
typedef enum bcvh_case {
    BCVH_CASE_NO_SOLUTION = 0,
    BCVH_CASE_POSITIVE_BUNDLE_CURVATURE = 1, /* 4m - l^2 > 0 */
    BCVH_CASE_PARABOLA = 2,                  /* 4m = l^2, l != 0 */
    BCVH_CASE_SU2_NEGATIVE = 3               /* 3l^2/4 < 4m < l^2 */
} bcvh_case;

bcvh_engine* bcvh_create(void);
void bcvh_destroy(bcvh_engine* eng);

/* Message for the last failing call on this engine; empty string when the
 * last call succeeded. The pointer stays valid until the next call. */
const char* bcvh_last_error(const bcvh_engine* eng);

const char* bcvh_version(void);

/* Monic quadratic x^2 + b x + c in x = kappa^2 whose positive roots are the
 * squared geodesic curvatures of proper CMC r-harmonic Hopf cylinders. */
typedef struct bcvh_quadratic {
    double b;
    double c;
    double disc;
    int n_real;
    double roots[2]; /* ascending */
    int n_positive;
    double positive[2]; /* ascending */
} bcvh_quadratic;

bcvh_status bcvh_quadratic_condition(bcvh_engine* eng, double m, double l, int r,
                                     bcvh_quadratic* out);

typedef struct bcvh_classification {
    int tag; /* bcvh_case */
    int n_roots;
    double kappa_sq[2]; /* ascending */
    int has_radius;     /* base radii attached (m > 0) */
    double rho;         /* base sphere radius 1/(2 sqrt(m)) */
    double radius[2];   /* directrix circle radius per root */
    int has_r_bound;    /* r-bound attached (3l^2/4 < 4m < l^2) */
    double r_bound;
} bcvh_classification;

bcvh_status bcvh_classify(bcvh_engine* eng, double m, double l, int r,
                          bcvh_classification* out);

/* Least admissible order r on the strip 3l^2/4 < 4m < l^2. */
bcvh_status bcvh_r_bound(bcvh_engine* eng, double m, double l, double* out);

/* Normalised bound r_a(a) = 4(a + sqrt(2 - 2a))/(4a - 3) on 3/4 < a < 1. */
bcvh_status bcvh_r_a(bcvh_engine* eng, double a, double* out);

/* Third-order tension field of the constant-curvature Hopf cylinder, in the
 * adapted frame {X, E3, eta}, plus the three residuals whose simultaneous
 * vanishing characterises triharmonicity. */
typedef struct bcvh_tension3 {
    double residuals[3]; /* K1, K2, K3 */
    double tau3[3];      /* components along X, E3, eta */
} bcvh_tension3_result;

bcvh_status bcvh_tension3(bcvh_engine* eng, double m, double l, double kappa,
                          bcvh_tension3_result* out);

/* r-th tension field of the constant-curvature Hopf cylinder; only the eta
 * component is nonzero. out must hold 3 doubles {X, E3, eta}. */
bcvh_status bcvh_r_tension(bcvh_engine* eng, double m, double l, double kappa, int r,
                           double out[3]);

/* Circle radius R and base sphere radius rho for the directrix of geodesic
 * curvature kappa when m > 0. Either output pointer may be NULL. */
bcvh_status bcvh_circle_radius(bcvh_engine* eng, double m, double kappa, double* radius,
                               double* rho);

/* Parabolic helicoid in the half-space model (m < 0, alpha^2 + m < 0). */
typedef struct bcvh_helicoid {
    double slope;        /* a >= 0 with X(u,v) = (u, v, a log v) */
    double big_l;        /* L = sqrt(l^2 + 4m(4a^2 m - 1)) */
    double alpha_signed; /* signed mean curvature of the a >= 0 patch */
    double nu;           /* normal component of the vertical field */
    double norm_a2;      /* |A|^2 = (8 alpha^2 + l^2)/2 */
    double t1, t2, t3;   /* triharmonicity polynomials */
    double tau3[3];      /* third-order tension in the half-space frame */
} bcvh_helicoid;

bcvh_status bcvh_helicoid_tension3(bcvh_engine* eng, double alpha, double m, double l,
                                   bcvh_helicoid* out);

/* Tolerances and step for the verification suites; fields <= 0 (or seed 0)
 * select the library defaults. */
typedef struct bcvh_verify_config {
    double tol_first;  /* first-order FD comparisons (default 1e-6) */
    double tol_second; /* nested FD comparisons (default 1e-4) */
    double tol_exact;  /* closed-form identities (default 1e-10) */
    double fd_step;    /* FD base step (default 1e-3) */
    unsigned seed;     /* RNG seed for sampled checks */
} bcvh_verify_config;

/* Runs a verification suite ("core", "hopf", "classify", "surface",
 * "helicoid", or "all"). *json_out receives a malloc'd JSON report (free
 * with bcvh_string_free); *all_passed receives 1 or 0. Returns
 * BCVH_VERIFY_FAILED when the suite ran but a check failed. Either output
 * pointer may be NULL. */
bcvh_status bcvh_verify(bcvh_engine* eng, const char* suite, char** json_out,
                        int* all_passed);

/* As bcvh_verify with explicit tolerances; cfg may be NULL for defaults. */
bcvh_status bcvh_verify_ex(bcvh_engine* eng, const char* suite,
                           const bcvh_verify_config* cfg, char** json_out,
                           int* all_passed);

void bcvh_string_free(char* s);

/* Classification tags over a parameter grid. tags must hold res_m * res_l
 * ints, written row-major by m (tags[im * res_l + il]); l_values and
 * m_values must hold res_l and res_m doubles. Grid endpoints are included. */
bcvh_status bcvh_diagram(bcvh_engine* eng, int r, double l_min, double l_max, double m_min,
                         double m_max, int res_l, int res_m, int* tags, double* l_values,
                         double* m_values);

#ifdef __cplusplus
}
#endif

#endif /* BCVHARMONIC_H */
