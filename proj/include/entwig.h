/* C interface to the entwig verification library.
 *
 * Opaque handles + integer status codes; every returned object is owned by
 * the caller and released with the matching _free function. Strings returned
 * through char** are malloc'd; release them with entwig_string_free.
 * entwig_last_error() describes the most recent failure on this thread.
 */
#ifndef ENTWIG_H
#define ENTWIG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum entwig_status {
  ENTWIG_OK = 0,
  ENTWIG_ERR_INVALID_ARGUMENT = 1,
  ENTWIG_ERR_CONFIG = 2,
  ENTWIG_ERR_IO = 3,
  ENTWIG_ERR_RUNTIME = 4
} entwig_status;

typedef struct entwig_config entwig_config;
typedef struct entwig_report entwig_report;
typedef struct entwig_gridfn entwig_gridfn;

const char* entwig_version(void);
const char* entwig_last_error(void);
void entwig_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

entwig_status entwig_config_create(entwig_config** out);
/* "key = value" lines with '#' comments; unknown keys are rejected. */
entwig_status entwig_config_parse(const char* text, entwig_config** out);
entwig_status entwig_config_set(entwig_config* cfg, const char* key, const char* value);
void entwig_config_free(entwig_config* cfg);

/* ---- verification suite ------------------------------------------------ */

entwig_status entwig_suite_run(const entwig_config* cfg, entwig_report** out);

int entwig_report_check_count(const entwig_report* rep);
int entwig_report_pass_count(const entwig_report* rep);
int entwig_report_fail_count(const entwig_report* rep);
int entwig_report_flag_count(const entwig_report* rep);
/* total number of checks a suites=all run emits */
int entwig_catalog_size(void);

entwig_status entwig_report_json(const entwig_report* rep, char** out);
entwig_status entwig_report_csv(const entwig_report* rep, char** out);
/* either path may be NULL to skip that file */
entwig_status entwig_report_write(const entwig_report* rep, const char* json_path,
                                  const char* csv_path);
void entwig_report_free(entwig_report* rep);

/* ---- grid functions and scalar transforms ------------------------------ */

/* interleaved re/im samples, points^axes nodes in row-major axis order;
 * pass NULL to zero-fill */
entwig_status entwig_gridfn_create(int axes, int points, double extent,
                                   const double* interleaved, entwig_gridfn** out);
/* text table ("axes G L" header then "re im" lines) or flat binary */
entwig_status entwig_gridfn_read(const char* path, entwig_gridfn** out);
entwig_status entwig_gridfn_write(const entwig_gridfn* gf, const char* path, int binary);

int entwig_gridfn_axes(const entwig_gridfn* gf);
int entwig_gridfn_points(const entwig_gridfn* gf);
double entwig_gridfn_extent(const entwig_gridfn* gf);
/* copies 2*points^axes doubles into buffer */
entwig_status entwig_gridfn_samples(const entwig_gridfn* gf, double* buffer);

/* op: "real_forward", "real_inverse", "complex_forward", "complex_inverse" */
entwig_status entwig_gridfn_transform(const entwig_gridfn* gf, const char* op,
                                      entwig_gridfn** out);
entwig_status entwig_gridfn_parseval_gap(const entwig_gridfn* gf, double* out);
void entwig_gridfn_free(entwig_gridfn* gf);

#ifdef __cplusplus
}
#endif

#endif /* ENTWIG_H */
