/* C interface to the affine-frames library. All strings are UTF-8 JSON or
 * SVG text; rationals inside documents are "p/q" or integer strings. */
#ifndef AFFINE_FRAMES_H
#define AFFINE_FRAMES_H

#include <stddef.h>

#if defined(AF_BUILDING_LIBRARY)
#define AF_API __attribute__((visibility("default")))
#else
#define AF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct af_document af_document;

typedef enum af_status {
  AF_OK = 0,
  AF_ERR_INTERNAL = 1,
  AF_ERR_REJECTED = 2,         /* input outside the domain of the operation */
  AF_ERR_INVALID_ARGUMENT = 3, /* null pointers, bad options, mismatched documents */
  AF_ERR_PARSE = 4             /* malformed JSON or rational token */
} af_status;

typedef enum af_command {
  AF_CMD_FRAME = 0,
  AF_CMD_COMPLETE,
  AF_CMD_BEZOUT,
  AF_CMD_MUBASIS,
  AF_CMD_SECTION,
  AF_CMD_CANONICAL,
  AF_CMD_SYLVESTER,
  AF_CMD_VERIFY
} af_command;

typedef struct af_options {
  int dump_pivots;
} af_options;

AF_API const char* af_version(void);

/* Message for the last failing call on this thread; never NULL. */
AF_API const char* af_last_error(void);

/* Parses a curve document or a result document (recognised by its "kind"). */
AF_API af_status af_document_parse(const char* text, size_t length, af_document** out);
AF_API void af_document_free(af_document* doc);

/* 1 for a result document, 0 for a curve document. */
AF_API int af_document_is_result(const af_document* doc);

/* Verdict of a verify result; AF_ERR_INVALID_ARGUMENT for other documents. */
AF_API af_status af_document_passed(const af_document* doc, int* passed);

/* Copy of the curve a result document was computed from. */
AF_API af_status af_document_input(const af_document* result, af_document** out);

AF_API af_status af_command_from_name(const char* name, af_command* out);

/* Curve input for every command except AF_CMD_VERIFY, which takes a result.
 * `options` may be NULL. */
AF_API af_status af_run(af_command command, const af_document* input, const af_options* options,
                        af_document** out);

/* Caller frees the string with af_string_free. */
AF_API af_status af_document_to_json(const af_document* doc, char** out);

/* `params` is a comma-separated list of rationals, e.g. "-1,0,1/2". */
AF_API af_status af_plot_svg(const af_document* curve, const af_document* frame, const char* params,
                             size_t axis_x, size_t axis_y, char** out);

AF_API void af_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
