/* cc examples/smoke.c -Iinclude ../../target/release/libsylowchar_ffi.a -lpthread -ldl -lm */
#include <stdio.h>

#include "sylowchar.h"

int main(void) {
    SylowcharPartition *lambda = NULL;
    char *value = NULL;

    if (sylowchar_partition_parse("5,4", &lambda) != SYLOWCHAR_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", sylowchar_last_error());
        return 1;
    }
    if (sylowchar_multiplicity(3, 9, lambda, &value) != SYLOWCHAR_STATUS_OK) {
        fprintf(stderr, "multiplicity: %s\n", sylowchar_last_error());
        sylowchar_partition_free(lambda);
        return 1;
    }
    printf("f(5,4) = %s\n", value);
    sylowchar_string_free(value);
    sylowchar_partition_free(lambda);

    SylowcharReport *report = NULL;
    if (sylowchar_report_new(3, 9, &report) != SYLOWCHAR_STATUS_OK) {
        fprintf(stderr, "report: %s\n", sylowchar_last_error());
        return 1;
    }
    printf("%zu partitions, %zu zeros\n", sylowchar_report_len(report),
           sylowchar_report_zero_count(report));
    sylowchar_report_free(report);

    if (sylowchar_multiplicity(2, 4, NULL, &value) == SYLOWCHAR_STATUS_NULL_POINTER) {
        printf("null handle rejected: %s\n", sylowchar_last_error());
    }
    return 0;
}
