/* Copyright 2026 the bnc authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Boolean-network control library. All objects are
 * opaque handles; every function returns a status code (BNC_OK on success)
 * and the last error message is retrievable per thread. Strings and arrays
 * returned through out-parameters are heap-allocated and must be released
 * with bnc_free().
 *
 * Attractor strings are bit strings, one character per node, with multiple
 * states separated by spaces ("101" or "01 10").
 */

#ifndef BNC_H
#define BNC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bnc_network bnc_network;
typedef struct bnc_instance bnc_instance;

enum {
  BNC_OK = 0,
  BNC_EPARSE = 1, /* malformed input text */
  BNC_EDOMAIN = 2, /* valid request the data cannot satisfy */
  BNC_EINVAL = 3, /* bad arguments */
  BNC_EIO = 4     /* file system failure */
};

const char* bnc_version(void);

/* Message describing the most recent failure on this thread. */
const char* bnc_last_error(void);

void bnc_free(void* ptr);

/* ---- networks (.bn format) ---- */

int bnc_network_parse(const char* text, bnc_network** out);
int bnc_network_load(const char* path, bnc_network** out);
int bnc_network_serialize(const bnc_network* net, char** out);
int bnc_network_save(const bnc_network* net, const char* path);
void bnc_network_release(bnc_network* net);

int bnc_network_size(const bnc_network* net);
int bnc_network_node_name(const bnc_network* net, int node, char** out);
int bnc_network_node_index(const bnc_network* net, const char* name);

/* Attractor line embedded in the document; *out is NULL when absent. */
int bnc_network_attractor_hint(const bnc_network* net, char** out);

/* Newline-separated fixed points in lexicographic order, at most `limit`. */
int bnc_network_fixed_points(const bnc_network* net, int limit, char** out);

/* The attractor reached from the given initial state, states newline-separated. */
int bnc_network_attractor_from(const bnc_network* net, const char* initial, char** out);

/* Generation; spec is a JSON object:
 * {"family":"er|sf|hierarchical|cactus", "n":10, "seed":1, "p":0.3, "m":2,
 *  "k":2, "depth":2, "blocks":[3,3], "sign_prob":0.5, "tau":0}           */
int bnc_generate(const char* spec_json, bnc_network** out);

/* ---- cascade instances (.tss format) ---- */

/* method: general | threshold | nc | nc-unanimous | cyclic | probabilistic |
 * probabilistic-threshold | auto (threshold when the rules allow it).      */
int bnc_reduce(const bnc_network* net, const char* attractor, const char* method,
               bnc_instance** out);

int bnc_instance_parse(const char* text, bnc_instance** out);
int bnc_instance_load(const char* path, bnc_instance** out);
int bnc_instance_serialize(const bnc_instance* inst, char** out);
int bnc_instance_save(const bnc_instance* inst, const char* path);
void bnc_instance_release(bnc_instance* inst);

int bnc_instance_size(const bnc_instance* inst);

/* LP-format integer program for the instance. */
int bnc_instance_export_ilp(const bnc_instance* inst, char** out);

/* ---- solving ---- */

/* method: exact | greedy | clique | cactus | hierarchy | nc-fvs.
 * options_json (may be NULL): {"budget":25, "k":2, "depth":2,
 * "blocks":[3,3,4]}. clique/cactus/hierarchy need an instance produced by a
 * threshold reduction in this process (sign classes travel with it).
 * Returns the selected genes as 0-based original-node indices.           */
int bnc_solve(const bnc_instance* inst, const char* method, const char* options_json,
              int** out_genes, int* out_count);

/* Cycle-breaking comparator on the original graph; no instance involved. */
int bnc_solve_cycle_baseline(const bnc_network* net, int** out_genes, int* out_count);

/* Cascade certificate for seeding the given genes; JSON summary. */
int bnc_certificate(const bnc_instance* inst, const int* genes, int count, char** out_json);

/* ---- verification ---- */

/* mode: exhaustive | exhaustive-all | mc | async | async-rr | stochastic |
 * cyclic. exhaustive-all also starts from states that disagree with the
 * pins (they are overwritten at the first step).
 * Returns a JSON report; converged == trials means certified.           */
int bnc_verify(const bnc_network* net, const char* attractor, const int* genes, int count,
               const char* mode, long long trials, uint64_t seed, long long horizon,
               char** out_json);

/* ---- experiments ---- */

/* config: JSON, see the experiment documentation. Both outputs are CSV. */
int bnc_experiment(const char* config_json, char** out_rows_csv, char** out_aggregate_csv);

#ifdef __cplusplus
}
#endif

#endif /* BNC_H */
