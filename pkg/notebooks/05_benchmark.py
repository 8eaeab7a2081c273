# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Digit-by-digit against bisection and Newton
#
# All three methods get the same random radicand in every cell and must
# return the same root; the checksum column shows that.  Times are medians
# in nanoseconds.  The growth fit is a report, not a test.

from digitroot.bench import fit_growth, run_bench, to_csv

methods = ("digit_by_digit", "binary_search", "newton")
specs = [(m, e, L, 0) for e in (2, 3) for L in (50, 100, 200, 400) for m in methods]
records = run_bench(specs, seed=1, reps=3)
print(to_csv(records))

for fit in fit_growth(records):
    print(f"{fit.method:15s} e={fit.exponent} slope={fit.slope:.2f} poor_fit={fit.poor_fit}")
