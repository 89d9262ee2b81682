// Copyright 2026 The capcycle Authors
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

/* Compiles the public header as C and runs one call through it. */
#include <stdio.h>
#include <string.h>

#include "capcycle/capcycle.h"

int main(void) {
  capcycle_allocation* a = NULL;
  capcycle_allocation* b = NULL;
  capcycle_matchup* m = NULL;
  uint64_t wins_a = 0, wins_b = 0, ties = 0;
  if (capcycle_allocation_parse("1,1,4", &a) != CAPCYCLE_OK) return 1;
  if (capcycle_allocation_parse("3,3,0", &b) != CAPCYCLE_OK) return 1;
  if (capcycle_matchup_create(a, b, &m) != CAPCYCLE_OK) return 1;
  capcycle_matchup_counts(m, &wins_a, &wins_b, &ties);
  capcycle_matchup_destroy(m);
  capcycle_allocation_destroy(b);
  capcycle_allocation_destroy(a);
  if (wins_a != 5 || wins_b != 4 || ties != 0) {
    fprintf(stderr, "unexpected counts\n");
    return 1;
  }
  return strcmp(capcycle_status_string(CAPCYCLE_OK), "ok") == 0 ? 0 : 1;
}
