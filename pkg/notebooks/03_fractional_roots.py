# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Fractional e-th roots by interval refinement
#
# Start from the integer root `R` and the interval `[R, R + 1)`.  Each step
# cuts the width by ten and keeps the largest lower end whose e-th power
# does not exceed the radicand.  After `k` steps the lower end is within
# `10^-k` of the true root, from below.

from digitroot import eth_root, refine_more, refine_root

text, state = refine_root(2, 7, 10)
print(text)
print(state.fraction_digits)

# Everything is stored as scaled integers, so the enclosure can be checked
# exactly.

L, k = state.lower_scaled, state.step
print(L**7 <= 2 * 10 ** (7 * k) < (L + 1) ** 7)

# The lower end after k steps is exactly the integer root of the radicand
# scaled by 10^(e k).

print(L == eth_root(2 * 10 ** (7 * k), 7).root)

# Refinement can be resumed.

print(refine_more(state, 15).render())

for e in range(2, 8):
    print(e, refine_root(10, e, 12)[0])
