/* canext.h -- C API for the canext order/lattice library.
 *
 * All functions return a status code: CANEXT_OK on success, CANEXT_FAIL when
 * a property check failed (the report carries the witnesses), CANEXT_ERROR on
 * usage, schema, or resource-guard errors (see canext_last_error()). Strings
 * returned through out-parameters are heap-allocated; release them with
 * canext_free_str(). Documents are opaque handles released with
 * canext_doc_free().
 */
#ifndef CANEXT_H
#define CANEXT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CANEXT_OK 0
#define CANEXT_FAIL 1
#define CANEXT_ERROR 2

typedef struct canext_doc canext_doc;

typedef struct canext_opts {
  unsigned long long seed; /* generator seed for corpus runs */
  int max_size;            /* enumeration bound for subset-exploding ops */
  int json;                /* nonzero: reports as JSON instead of text */
} canext_opts;

void canext_opts_init(canext_opts* opts);

/* Message describing the most recent CANEXT_ERROR on this thread. */
const char* canext_last_error(void);

void canext_free_str(char* s);

/* --- documents ---------------------------------------------------------- */

int canext_parse(const char* json_text, canext_doc** out);
int canext_parse_file(const char* path, canext_doc** out);
const char* canext_doc_kind(const canext_doc* doc);
int canext_serialize(const canext_doc* doc, char** out_text);
void canext_doc_free(canext_doc* doc);

/* --- commands ----------------------------------------------------------- */

/* Structure validation. */
int canext_check(const canext_doc* doc, const canext_opts* opts, char** report);

/* Filter or ideal completion of a lattice document; `which` is "filters" or
 * "ideals". When carrier_doc is non-NULL it receives the completion carrier
 * serialized as a lattice document. */
int canext_complete(const canext_doc* doc, const char* which, const canext_opts* opts,
                    char** report, char** carrier_doc);

/* C-ideal closure of a comma-separated element set. */
int canext_present_close(const canext_doc* pres, const char* set_csv,
                         const canext_opts* opts, char** report);
/* All C-ideals. */
int canext_present_enumerate(const canext_doc* pres, const canext_opts* opts,
                             char** report);
/* Carrier of the freely generated dcpo. */
int canext_present_free(const canext_doc* pres, const canext_opts* opts, char** report);
/* Existence/uniqueness oracle against a lattice document target. */
int canext_present_verify_universal(const canext_doc* pres, const canext_doc* target,
                                    const canext_opts* opts, char** report);

/* Canonical extension of a lattice document; carrier_doc as in
 * canext_complete. */
int canext_canon_ext(const canext_doc* lattice, const canext_opts* opts, char** report,
                     char** carrier_doc);
/* Density/compactness and collapse verification. */
int canext_canon_verify(const canext_doc* lattice, const canext_opts* opts, char** report);
/* Canonicity of an inequation over an algebra document. */
int canext_canon_check_eq(const canext_doc* algebra, const char* inequation,
                          const canext_opts* opts, char** report);

/* Runs every acceptance property over the built-in corpus. */
int canext_corpus_run(const canext_opts* opts, char** report);

/* Hasse diagram of a poset-like document as DOT text. */
int canext_emit_dot(const canext_doc* doc, char** dot_text);

#ifdef __cplusplus
}
#endif

#endif /* CANEXT_H */
