/* C interface to the normsurf analysis library.
 *
 * All entry points return nsf_status; outputs come back through pointers.
 * On any failure the thread-local message from nsf_last_error() describes
 * what went wrong. Strings returned through out-parameters are owned by the
 * caller and must be released with nsf_string_free; reports with
 * nsf_report_free.
 */

#ifndef NORMSURF_C_H
#define NORMSURF_C_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef NSF_BUILD
#    define NSF_API __declspec(dllexport)
#  else
#    define NSF_API __declspec(dllimport)
#  endif
#else
#  ifdef NSF_BUILD
#    define NSF_API __attribute__((visibility("default")))
#  else
#    define NSF_API
#  endif
#endif

typedef enum nsf_status {
    NSF_OK = 0,
    NSF_ERROR_VALIDATION = 1, /* well-formed input, invalid mathematics */
    NSF_ERROR_PARSE = 2,      /* malformed input */
    NSF_ERROR_ARGUMENT = 3,   /* null pointer, unknown name, bad enum */
    NSF_ERROR_INTERNAL = 4
} nsf_status;

typedef enum nsf_format {
    NSF_FORMAT_TEXT = 0,
    NSF_FORMAT_MACHINE = 1
} nsf_format;

typedef struct nsf_report nsf_report;

/* Library version, static storage, do not free. */
NSF_API const char* nsf_version(void);

/* Message for the most recent failure on this thread; static storage. */
NSF_API const char* nsf_last_error(void);

/* Analyze a scenario from a file on disk / from JSON text in memory. */
NSF_API nsf_status nsf_analyze_file(const char* path, nsf_report** out_report);
NSF_API nsf_status nsf_analyze_text(const char* json_text,
                                    nsf_report** out_report);

/* Analyze a named built-in scenario. e_param overrides the section
 * invariant for built-ins that take one; pass a negative value to keep the
 * default. */
NSF_API nsf_status nsf_analyze_builtin(const char* name, long e_param,
                                       nsf_report** out_report);

/* Newline-separated list of built-in scenario names. */
NSF_API nsf_status nsf_builtin_names(char** out_names);

/* Render a report in the requested format. */
NSF_API nsf_status nsf_report_render(const nsf_report* report,
                                     nsf_format format, char** out_text);

NSF_API void nsf_report_free(nsf_report* report);
NSF_API void nsf_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NORMSURF_C_H */
