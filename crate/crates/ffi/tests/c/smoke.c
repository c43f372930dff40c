#include <stdio.h>
#include <string.h>
#include "pack2dom.h"

int main(void) {
    P2dGraph *g = NULL;
    if (p2d_generate_family(1, 1, &g) != P2D_STATUS_OK) return 1;
    size_t gamma = 0, nu2 = 0;
    if (p2d_gamma(g, &gamma) != P2D_STATUS_OK || p2d_nu2(g, &nu2) != P2D_STATUS_OK) return 2;
    P2dRecognition rec;
    if (p2d_recognize(g, &rec) != P2D_STATUS_OK || !rec.member || rec.r != 5) return 3;
    char *canon = NULL;
    if (p2d_canonical_form(g, &canon) != P2D_STATUS_OK) return 4;
    printf("%zu %zu %s\n", gamma, nu2, canon);
    p2d_string_free(canon);
    p2d_graph_free(g);

    P2dGraph *bad = NULL;
    if (p2d_graph_from_graph6("~~~", &bad) == P2D_STATUS_OK) return 5;
    if (p2d_last_error() == NULL || strlen(p2d_last_error()) == 0) return 6;
    return 0;
}
