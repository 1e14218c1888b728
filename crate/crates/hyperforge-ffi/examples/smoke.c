/* Builds the {4,3,4} toroid with s = 4, halves it and prints the orders. */
#include <stdio.h>
#include "hyperforge.h"

int main(void) {
    HfGroup *g = NULL, *h = NULL;
    uint64_t order = 0, half = 0;
    if (hf_group_cubic_toroid(3, 1, 4, 0, &g) != HF_STATUS_OK) {
        fprintf(stderr, "%s\n", hf_last_error());
        return 1;
    }
    hf_group_order(g, &order);
    if (hf_group_halve(g, 0, 1, &h) != HF_STATUS_OK) {
        fprintf(stderr, "%s\n", hf_last_error());
        return 1;
    }
    hf_group_order(h, &half);
    HfStatus bad = hf_group_halve(NULL, 0, 1, &h);
    printf("%llu %llu %d\n", (unsigned long long)order, (unsigned long long)half, (int)bad);
    hf_group_free(h);
    hf_group_free(g);
    return 0;
}
