/* C API for the covlat library: exact invariants of Brylinski-Deligne covers.
 *
 * All computation runs behind opaque session handles; strings returned through
 * out-parameters are owned by the caller and must be released with
 * covlat_free. Error codes follow the CLI exit convention:
 *   0 success, 1 computation error, 2 parse error, 3 regression mismatch.
 */
#ifndef COVLAT_H
#define COVLAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct covlat_session covlat_session;

#define COVLAT_OK 0
#define COVLAT_ERR_COMPUTE 1
#define COVLAT_ERR_PARSE 2
#define COVLAT_ERR_REGRESS 3

unsigned covlat_abi_version(void);

/* Parse a cover spec (key = value text). NULL on parse failure; *err_out, when
 * non-NULL, receives a malloc'd message. */
covlat_session* covlat_open(const char* spec_text, char** err_out);
void covlat_close(covlat_session* s);

/* Options: "format" = text|structured, "epsilon" = +1|-1, "cap" = <int>,
 * "partition" = "r1,r2,...". Returns COVLAT_OK or an error code. */
int covlat_set_option(covlat_session* s, const char* key, const char* value);

/* command: show | restrict | whittaker | scattering | packets | tensor */
int covlat_run(covlat_session* s, const char* command, char** out);

/* Last error message for this session (borrowed pointer, valid until the next
 * call on the session). */
const char* covlat_error(const covlat_session* s);

/* Built-in regression corpus; returns COVLAT_OK or COVLAT_ERR_REGRESS and
 * writes the report. epsilon is +1 or -1. */
int covlat_regress(int epsilon, const char* format, char** out);

void covlat_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* COVLAT_H */
