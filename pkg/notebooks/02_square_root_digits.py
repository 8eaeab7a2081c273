# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Exact square root digits
#
# For square roots every decimal digit is final: computing more digits only
# appends.  The output is a truncation of the true value, checked below
# with integer inequalities instead of floating point.

from digitroot import extend, sqrt_digits

exp = sqrt_digits(2, 10)
print(exp.render())
R = exp.scaled_root
print(R * R <= 2 * 10**20 < (R + 1) ** 2)

# Resuming from the stored root and remainder gives the same digits as a
# fresh computation.

short = sqrt_digits(2, 3)
print(short.render(), "->", extend(short, 7).render())
print(extend(short, 7) == sqrt_digits(2, 10))

# Prefixes never change as the precision grows.

for k in (5, 10, 20, 40):
    print(k, sqrt_digits(10, k).render())

# A thousand digits of sqrt(3), still exact.

print(sqrt_digits(3, 1000).render()[:60], "...")
