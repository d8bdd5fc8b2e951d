/* Minimal consumer of the demogame C API.
 *
 * Build (from the workspace root, after `cargo build -p demogame-ffi`):
 *   cc crates/demogame-ffi/examples/demo.c \
 *      -Icrates/demogame-ffi/include \
 *      target/debug/libdemogame_ffi.a -lpthread -ldl -lm -o demo
 */
#include "demogame.h"

#include <stdio.h>
#include <stdlib.h>

static void check(DgStatus status, const char *what) {
    if (status != DG_STATUS_OK) {
        fprintf(stderr, "%s failed (%d): %s\n", what, (int)status,
                dg_last_error_message());
        exit(1);
    }
}

int main(void) {
    DgScenario *scenario = NULL;
    check(dg_scenario_builtin_paper(&scenario), "builtin scenario");

    double u_a = 0.0, u_b = 0.0;
    check(dg_profile_payoffs(scenario, "I,S", &u_a, &u_b), "payoffs");
    printf("payoffs under (I,S): %.0f, %.0f\n", u_a, u_b);

    char *table = NULL;
    check(dg_sequential_table(scenario, "A", 0, &table), "table");
    printf("%s", table);
    dg_string_free(table);

    char *spe = NULL;
    check(dg_backward_induction(scenario, "B", &spe), "backward induction");
    printf("%s", spe);
    dg_string_free(spe);

    double lambda = 0.0;
    double stable[3] = {0};
    const double fertilities[3] = {0.0, 2.0, 1.0};
    const double survivals[2] = {0.2, 0.4};
    check(dg_dominant_eigen(fertilities, 3, survivals, 1e-10, 100000, &lambda,
                            stable, NULL, NULL),
          "dominant eigen");
    printf("lambda: %.4f\n", lambda);

    dg_scenario_free(scenario);
    return 0;
}
