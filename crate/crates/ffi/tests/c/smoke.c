#include <stdio.h>
#include <string.h>

#include "binv.h"

int main(void) {
    BinvPoly *h = NULL, *k = NULL;
    if (binv_h(1, 0, &h) != BINV_STATUS_OK || binv_k(1, 0, &k) != BINV_STATUS_OK) {
        fprintf(stderr, "compute failed: %s\n", binv_last_error());
        return 1;
    }
    if (binv_equal(h, k) != 1) {
        return 2;
    }
    char *hash = NULL;
    if (binv_hash(h, &hash) != BINV_STATUS_OK) {
        return 3;
    }
    printf("%s %zu\n", hash, binv_num_terms(h));
    binv_string_free(hash);

    BinvPoly *bad = NULL;
    if (binv_deserialize("BINV 9 r=4 aux=\n", &bad) != BINV_STATUS_UNSUPPORTED_VERSION || bad != NULL) {
        return 4;
    }
    binv_free(h);
    binv_free(k);
    return 0;
}
