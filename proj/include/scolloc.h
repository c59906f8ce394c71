/* C interface to the spline-collocation solver. Handles are opaque; every
 * function returns a status code, with a thread-local message available via
 * sc_last_error(). Strings returned through char** are owned by the caller
 * and must be released with sc_string_free(). */

#ifndef SCOLLOC_H
#define SCOLLOC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_INVALID_ARGUMENT = 1,
  SC_UNKNOWN_PROBLEM = 2,
  SC_SINGULAR_SYSTEM = 3,
  SC_IO_ERROR = 4,
  SC_INTERNAL_ERROR = 5
} sc_status;

typedef enum sc_pattern {
  SC_PATTERN_GAUSSIAN = 0,
  SC_PATTERN_EQUISPACED = 1,
  SC_PATTERN_REDISTRIBUTED = 2
} sc_pattern;

const char* sc_status_name(sc_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* sc_last_error(void);

void sc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Problem catalog                                                     */

typedef struct sc_problem sc_problem;

/* id is a catalog key such as "hydrogen:n=2,l=1" or "nls:eps=0.01".
 * box_right <= 0 selects the recommended minimum for the problem. */
sc_status sc_problem_open(const char* id, double box_right, sc_problem** out);
void sc_problem_close(sc_problem* p);

/* Closed-form solution in original coordinates. */
sc_status sc_problem_exact(const sc_problem* p, double x, double* out);

/* JSON array of catalog ids. */
sc_status sc_catalog(char** json_out);

/* ------------------------------------------------------------------ */
/* Solving                                                             */

typedef struct sc_solve_options {
  int intervals;            /* mesh: number of subintervals            */
  int points_per_interval;  /* collocation sites per subinterval       */
  sc_pattern pattern;
  int newnot_passes;        /* redistribution passes (redistributed)   */
  double newton_tol;        /* nonlinear stopping tolerance            */
  int newton_max_iter;
} sc_solve_options;

void sc_solve_options_init(sc_solve_options* opts);

typedef struct sc_solution sc_solution;

sc_status sc_solve(const sc_problem* p, const sc_solve_options* opts, sc_solution** out);
void sc_solution_close(sc_solution* s);

/* Spline value (or derivative) in the solved variable. */
sc_status sc_solution_eval(const sc_solution* s, double x, int deriv, double* out);
/* Value in original coordinates, transform unwound. */
sc_status sc_solution_eval_original(const sc_solution* s, double x, double* out);

int sc_solution_iterations(const sc_solution* s);
int sc_solution_converged(const sc_solution* s);
/* Copies up to cap breakpoints of the final mesh; *count gets the total. */
sc_status sc_solution_breaks(const sc_solution* s, double* buf, int cap, int* count);

/* ------------------------------------------------------------------ */
/* Experiments                                                         */

/* config_json keys: problem (string, required), box_right, intervals,
 * points_per_interval, patterns (array of names), probes (array of sites),
 * newnot_passes, newton_tol, newton_max_iter. Returns the full report as
 * JSON. Per-pattern solver failures are recorded in the report, not
 * returned as an error. */
sc_status sc_run_experiment(const char* config_json, char** report_json);

/* Same config plus "l_sequence" (array of increasing mesh sizes); returns
 * per-pattern convergence-order estimates as JSON. */
sc_status sc_convergence_study(const char* config_json, char** orders_json);

/* Writes a report from sc_run_experiment to path as "csv" or "json". */
sc_status sc_report_write(const char* report_json, const char* format, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SCOLLOC_H */
