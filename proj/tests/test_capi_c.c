/* Compiled as plain C: the public header must not leak C++ syntax. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "ibnshatir.h"

static int failures = 0;

static void expect(int ok, const char* what) {
    if (!ok) {
        ++failures;
        fprintf(stderr, "FAIL: %s (%s)\n", what, ish_last_error());
    }
}

int main(void) {
    double deg = 0.0;
    expect(ish_parse_angle("280;33,31", &deg) == ISH_OK, "parse");
    expect(fabs(deg - 280.5586111) < 1e-6, "parse value");

    char buf[32];
    expect(ish_format_angle(deg, 2, 0, 0, buf, sizeof buf) == ISH_OK, "format");
    expect(strcmp(buf, "280;33,31") == 0, "format text");

    ish_options opts;
    ish_options_init(&opts);
    ish_model* sun = NULL;
    expect(ish_model_new("sun", "shatir3d", &opts, &sun) == ISH_OK, "model_new");
    double lon, lat, dist;
    expect(ish_model_position(sun, 0.0, &lon, &lat, &dist) == ISH_OK, "position");
    expect(fabs(lon - deg) < 2.0 / 3600.0, "epoch longitude");
    ish_model_free(sun);

    double t = 0.0;
    expect(ish_yazdegerd_to_t(721, 1, 1, 0, &t) == ISH_OK && t == 7300.0, "calendar");

    ish_ledger_row rows[8];
    int n = 0;
    expect(ish_nesting_ledger(rows, 8, &n) == ISH_OK && n == 7, "ledger");
    expect(rows[6].outer_num == 1818180 && rows[6].outer_den == 23, "saturn outer");

    if (failures == 0) {
        printf("c consumer ok\n");
        return 0;
    }
    return 1;
}
