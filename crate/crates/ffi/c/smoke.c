#include <stdio.h>
#include <string.h>

#include "chromq.h"

int main(void) {
    ChromqPoset *p = NULL;
    size_t height = 0, heaps = 0, classes = 0;
    char *json = NULL;

    if (chromq_poset_new("2,3,3", &p) != CHROMQ_STATUS_OK) return 1;
    if (chromq_poset_height(p, &height) != CHROMQ_STATUS_OK || height != 2) return 2;
    if (chromq_classes_count(p, "1,1,2", &heaps, &classes) != CHROMQ_STATUS_OK) return 3;
    if (heaps != 6 || classes != 4) return 4;
    if (chromq_expand_json(p, "1,1,2", "p", &json) != CHROMQ_STATUS_OK) return 5;
    if (strstr(json, "\"partition\":[3,1],\"poly\":[1,2,2,1]") == NULL) return 6;
    chromq_string_free(json);
    if (chromq_expand_json(p, "1,1", "p", &json) != CHROMQ_STATUS_INVALID_INPUT) return 7;
    if (chromq_last_error() == NULL) return 8;
    chromq_poset_free(p);
    printf("ok\n");
    return 0;
}
