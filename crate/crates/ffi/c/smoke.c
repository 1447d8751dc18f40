#include <stdio.h>
#include <string.h>

#include "permalg.h"

static int check(int cond, const char *what) {
    if (!cond) {
        fprintf(stderr, "failed: %s\n", what);
    }
    return cond ? 0 : 1;
}

int main(void) {
    int failures = 0;
    PermalgPoly *p = NULL;
    char *s = NULL;
    bool lie = false;

    failures += check(permalg_poly_parse("x2*x1*x3 - x1*x2*x3", NULL, &p) == PERMALG_STATUS_OK, "parse");
    failures += check(permalg_is_lie(p, &lie) == PERMALG_STATUS_OK && lie, "is_lie");
    failures += check(permalg_lie_express(p, &s) == PERMALG_STATUS_OK, "lie_express");
    failures += check(s != NULL && strcmp(s, "[[x2,x1],x3]") == 0, "lie_express text");
    permalg_string_free(s);
    permalg_poly_free(p);

    failures += check(permalg_poly_parse("x1 +", NULL, &p) == PERMALG_STATUS_INVALID_INPUT, "syntax error");
    failures += check(permalg_last_error() != NULL, "error message");

    const char *heis = "{\"dim\":3,\"brackets\":[{\"i\":1,\"j\":2,\"value\":[[3,\"1\"]]}]}";
    PermalgEnvelope *env = NULL;
    failures += check(permalg_envelope_from_json(heis, &env) == PERMALG_STATUS_OK, "envelope");
    failures += check(permalg_envelope_normal_form(env, "d(e2)*e1", PERMALG_STRATEGY_LEFTMOST, &s) == PERMALG_STATUS_OK,
                      "normal form");
    failures += check(strcmp(s, "d(e1)*e2 - d(e3)") == 0, "normal form text");
    permalg_string_free(s);
    permalg_envelope_free(env);

    if (failures == 0) {
        printf("ok\n");
    }
    return failures == 0 ? 0 : 1;
}
