#ifndef NTORIC_H
#define NTORIC_H

/*
 * C interface to the ntoric library: exact invariants of Newton
 * nondegenerate Weil divisors in affine toric varieties.
 *
 * Inputs are JSON documents of the form
 *
 *   { "rank": 3,
 *     "cone": [[1,0,0],[0,1,0],[0,0,1]],
 *     "support": [[2,0,0],[0,3,0],[0,0,7]],
 *     "options": { "delta_shell_cap": 64, "root": -1 } }
 *
 * and every command renders a JSON (or DOT) text. All arithmetic inside is
 * exact; rationals appear as strings "a/b". Output bytes are deterministic
 * for a fixed input and library version.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ntc_diagram ntc_diagram;

/* status codes shared with the CLI exit codes */
#define NTC_OK 0
#define NTC_EINPUT 2      /* malformed or invalid input */
#define NTC_EHYPOTHESIS 3 /* an operation's hypotheses do not hold */
#define NTC_ECAP 4        /* enumeration cap exhausted */
#define NTC_EINTERNAL 5   /* internal consistency failure */

/* Parse and validate an input document. Returns a handle, or NULL with
 * *err set to a message (free with ntc_free). */
ntc_diagram* ntc_diagram_parse(const char* json_text, char** err);
void ntc_diagram_free(ntc_diagram* d);

/* Run options; override the values carried by the input document. */
void ntc_set_delta_shell_cap(ntc_diagram* d, int cap);
void ntc_set_root(ntc_diagram* d, int node_id);

/* Round trip of the validated input. */
int ntc_input_json(const ntc_diagram* d, char** out, char** err);

/* Commands. On success return NTC_OK and set *out; otherwise return a
 * status code and set *err. Free both with ntc_free. */
int ntc_fan_json(const ntc_diagram* d, char** out, char** err);
int ntc_graph_json(const ntc_diagram* d, char** out, char** err);
int ntc_invariants_json(const ntc_diagram* d, char** out, char** err);
int ntc_seq_json(const ntc_diagram* d, char** out, char** err);
int ntc_reduce_json(const ntc_diagram* d, char** out, char** err);
int ntc_report_json(const ntc_diagram* d, char** out, char** err);

/* Graphviz rendering of the plumbing graph (parallel edges preserved). */
int ntc_graph_dot(const ntc_diagram* d, char** out, char** err);

void ntc_free(char* p);
const char* ntc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NTORIC_H */
