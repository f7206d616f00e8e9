// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Pure C consumer of the shared library: Fano plane, K = 3. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "matroidprob/matroidprob.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s failed (%s)\n", __FILE__,        \
              __LINE__, #cond, mp_last_error());                  \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  mp_matroid* m = NULL;
  mp_index* idx = NULL;
  size_t count = 0;
  double u[7];
  double f = 0.0;
  char* exact = NULL;
  int i;

  EXPECT(mp_matroid_from_json("{\"type\":\"projective\",\"n\":3,\"q\":2}", &m) == MP_OK);
  EXPECT(mp_index_build(m, 3, 0, &idx) == MP_OK);
  EXPECT(mp_index_count(idx, &count) == MP_OK);
  EXPECT(count == 28);
  for (i = 0; i < 7; ++i) u[i] = 1.0 / 7.0;
  EXPECT(mp_eval_probability(idx, u, 7, &f) == MP_OK);
  EXPECT(fabs(f - 24.0 / 49.0) < 1e-14);
  EXPECT(mp_exact_uniform_probability(idx, &exact) == MP_OK);
  EXPECT(strcmp(exact, "24/49") == 0);
  mp_string_free(exact);
  EXPECT(mp_index_build(m, 4, 0, &idx) == MP_ERR_K_OUT_OF_RANGE);
  mp_index_free(idx);
  mp_matroid_free(m);
  printf("c api smoke ok\n");
  return 0;
}
