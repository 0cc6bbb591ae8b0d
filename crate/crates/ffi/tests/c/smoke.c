#include <stdio.h>
#include <string.h>

#include "toric_robust.h"

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond, \
              tr_last_error_message());                               \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  const int64_t ts[] = {1, 2, 3, 4, 5, 6, 7};
  TrMatrix *t = NULL;
  CHECK(tr_cyclic_configuration(5, ts, 7, &t) == TR_STATUS_OK);

  TrGraver *g = NULL;
  CHECK(tr_graver_basis(t, 2, &g) == TR_STATUS_OK);
  CHECK(tr_graver_len(g) == 11);
  bool robust = true;
  CHECK(tr_is_strongly_robust(g, &robust) == TR_STATUS_OK && !robust);
  tr_graver_free(g);

  TrComplex *c = NULL;
  CHECK(tr_strongly_robust_complex(t, 0, &c) == TR_STATUS_OK);
  CHECK(tr_complex_dimension(c) == 4);
  size_t face[7];
  size_t len = 0;
  CHECK(tr_complex_maximal_face(c, 0, face, 7, &len) == TR_STATUS_OK);
  CHECK(len == 5 && face[0] == 1 && face[1] == 3 && face[4] == 7);
  tr_complex_free(c);

  TrMatrix *bad = NULL;
  CHECK(tr_matrix_parse("2 2\n1 2 3", &bad) == TR_STATUS_ENTRY_COUNT_MISMATCH);
  CHECK(strlen(tr_last_error_message()) > 0);

  char *text = tr_matrix_to_string(t);
  printf("%s", text);
  tr_string_free(text);
  tr_matrix_free(t);
  return 0;
}
