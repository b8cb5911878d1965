#ifndef RPQDET_H
#define RPQDET_H

#include <stddef.h>

#if defined(_WIN32)
#define RPQDET_API __declspec(dllexport)
#else
#define RPQDET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rpqdet_status {
  RPQDET_OK = 0,
  RPQDET_E_SYNTAX,
  RPQDET_E_UNKNOWN_SYMBOL,
  RPQDET_E_UNKNOWN_VERTEX,
  RPQDET_E_INVALID_ARGUMENT,
  RPQDET_E_EMPTY_WORD,
  RPQDET_E_EPSILON_LANGUAGE,
  RPQDET_E_FOREIGN_SYMBOL,
  RPQDET_E_WITNESS_REJECTED,
  RPQDET_E_SCRIPT_EXHAUSTED,
  RPQDET_E_GUIDANCE_FAILURE,
  RPQDET_E_SEARCH_SPACE_TOO_LARGE,
  RPQDET_E_SIZE_MISMATCH,
  RPQDET_E_MALFORMED_TILING,
  RPQDET_E_IO,
  RPQDET_E_INTERNAL
} rpqdet_status;

typedef struct rpqdet_graph rpqdet_graph;
typedef struct rpqdet_instance rpqdet_instance;
typedef struct rpqdet_ogtp rpqdet_ogtp;
typedef struct rpqdet_tiling rpqdet_tiling;

/* Message of the last failed call on this thread ("" after success). */
RPQDET_API const char *rpqdet_last_error(void);
RPQDET_API const char *rpqdet_status_name(rpqdet_status status);
/* Frees every char* handed out by this library. */
RPQDET_API void rpqdet_string_free(char *s);

/* Graphs */
RPQDET_API rpqdet_status rpqdet_graph_parse(const char *json, rpqdet_graph **out);
RPQDET_API rpqdet_status rpqdet_graph_load(const char *path, rpqdet_graph **out);
RPQDET_API rpqdet_status rpqdet_graph_to_json(const rpqdet_graph *g, char **out);
RPQDET_API size_t rpqdet_graph_vertex_count(const rpqdet_graph *g);
RPQDET_API size_t rpqdet_graph_edge_count(const rpqdet_graph *g);
RPQDET_API void rpqdet_graph_free(rpqdet_graph *g);

/* Pairs of eval(query, g), one "x y" line each, ordered by vertex name
   (shorter names first, then lexicographic). */
RPQDET_API rpqdet_status rpqdet_eval(const rpqdet_graph *g, const char *query, char **out);

/* Tiling instances and tilings */
RPQDET_API rpqdet_status rpqdet_ogtp_parse(const char *json, rpqdet_ogtp **out);
RPQDET_API rpqdet_status rpqdet_ogtp_load(const char *path, rpqdet_ogtp **out);
RPQDET_API void rpqdet_ogtp_free(rpqdet_ogtp *o);

RPQDET_API rpqdet_status rpqdet_tiling_parse(const char *json, rpqdet_tiling **out);
RPQDET_API rpqdet_status rpqdet_tiling_load(const char *path, rpqdet_tiling **out);
RPQDET_API rpqdet_status rpqdet_tiling_to_json(const rpqdet_tiling *t, char **out);
RPQDET_API void rpqdet_tiling_free(rpqdet_tiling *t);

/* *ok is 1 for a solution; otherwise *violation (may be NULL) names the
   failed condition. */
RPQDET_API rpqdet_status rpqdet_check_tiling(const rpqdet_ogtp *o, const rpqdet_tiling *t,
                                             int *ok, char **violation);
/* *out is NULL when no grid up to max_n works. */
RPQDET_API rpqdet_status rpqdet_solve_ogtp(const rpqdet_ogtp *o, size_t max_n,
                                           rpqdet_tiling **out);

/* Instances */
RPQDET_API rpqdet_status rpqdet_reduce(const rpqdet_ogtp *o, rpqdet_instance **out);
RPQDET_API rpqdet_status rpqdet_instance_parse(const char *json, rpqdet_instance **out);
RPQDET_API rpqdet_status rpqdet_instance_load(const char *path, rpqdet_instance **out);
RPQDET_API rpqdet_status rpqdet_instance_to_json(const rpqdet_instance *inst, char **out);
RPQDET_API size_t rpqdet_instance_constraint_count(const rpqdet_instance *inst);
RPQDET_API void rpqdet_instance_free(rpqdet_instance *inst);

/* Non-empty words of Q0 up to length cap, shortlex, one per line. */
RPQDET_API rpqdet_status rpqdet_initial_words(const rpqdet_instance *inst, size_t cap,
                                              char **out);

/* Plays */
typedef enum rpqdet_strategy {
  RPQDET_STRATEGY_SHORTEST = 0,
  RPQDET_STRATEGY_GUIDED,
  RPQDET_STRATEGY_SCRIPTED,
  RPQDET_STRATEGY_INTERACTIVE
} rpqdet_strategy;

typedef enum rpqdet_play_kind {
  RPQDET_PLAY_LOST = 0,
  RPQDET_PLAY_WON_FIXPOINT,
  RPQDET_PLAY_EXHAUSTED
} rpqdet_play_kind;

typedef struct rpqdet_play_options {
  rpqdet_strategy strategy;
  /* Base-alphabet word; NULL picks the shortest word of Q_start (or of Q0). */
  const char *initial_word;
  size_t max_rounds;
  /* Guided: model graph and the images of a and b ("a", "b" when NULL). */
  const rpqdet_graph *model;
  const char *model_a;
  const char *model_b;
  /* Scripted: JSON-lines trace whose choices are replayed. When no initial
     word is given the trace's own is used. */
  const char *script;
} rpqdet_play_options;

typedef struct rpqdet_play_result {
  rpqdet_play_kind kind;
  size_t round;
  char *trace;               /* JSON lines */
  rpqdet_graph *final_graph;
} rpqdet_play_result;

RPQDET_API void rpqdet_play_options_init(rpqdet_play_options *options);
/* Interactive play prompts on stderr and reads witnesses from stdin. */
RPQDET_API rpqdet_status rpqdet_play(const rpqdet_instance *inst,
                                     const rpqdet_play_options *options,
                                     rpqdet_play_result *result);
RPQDET_API void rpqdet_play_result_clear(rpqdet_play_result *result);

/* Bounded search */
typedef enum rpqdet_verdict_kind {
  RPQDET_VERDICT_NONDETERMINATE = 0,
  RPQDET_VERDICT_ALL_PLAYS_LOSE,
  RPQDET_VERDICT_INCONCLUSIVE
} rpqdet_verdict_kind;

typedef struct rpqdet_caps {
  size_t max_initial_len;
  size_t max_witness_len;
  size_t max_rounds;
  size_t max_branches;
} rpqdet_caps;

typedef struct rpqdet_verdict {
  rpqdet_verdict_kind kind;
  size_t initial_words;
  char *initial_word;         /* NONDETERMINATE only */
  rpqdet_graph *certificate;  /* NONDETERMINATE only; endpoints a and b */
} rpqdet_verdict;

RPQDET_API rpqdet_caps rpqdet_default_caps(void);
RPQDET_API rpqdet_status rpqdet_search(const rpqdet_instance *inst, const rpqdet_caps *caps,
                                       size_t jobs, rpqdet_verdict *verdict);
RPQDET_API void rpqdet_verdict_clear(rpqdet_verdict *verdict);

/* Counterexample check; *report lists failed conditions, one per line. */
RPQDET_API rpqdet_status rpqdet_verify(const rpqdet_graph *g, const rpqdet_instance *inst,
                                       const char *a, const char *b, int *ok, char **report);

/* The grid of size m, decorated with t when t is not NULL. */
RPQDET_API rpqdet_status rpqdet_grid(size_t m, const rpqdet_tiling *t, rpqdet_graph **out);

#ifdef __cplusplus
}
#endif

#endif
