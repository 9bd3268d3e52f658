/* The header must compile as C and the library must be usable from C. */
#include <stdio.h>
#include <string.h>

#include "qtkostka/qtkostka.h"

int main(void) {
  qtk_context* ctx = NULL;
  char* out = NULL;
  int failures = 0;
  if (qtk_context_new(&ctx) != QTK_OK) return 1;
  if (qtk_kcoeff(ctx, "1", "1", QTK_FORMAT_PRETTY, &out) != QTK_OK || strcmp(out, "-q + 1\n") != 0) {
    fprintf(stderr, "kcoeff: %s\n", out ? out : qtk_last_error(ctx));
    ++failures;
  }
  qtk_string_free(out);
  out = NULL;
  if (qtk_kcoeff(ctx, "3", "2", QTK_FORMAT_PRETTY, &out) != QTK_DOMAIN_ERROR || out != NULL) ++failures;
  qtk_context_free(ctx);
  return failures == 0 ? 0 : 1;
}
