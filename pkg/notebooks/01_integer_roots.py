# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Integer e-th roots, one block at a time
#
# `eth_root` splits the radicand into groups of `e` decimal digits and
# grows the root by one decimal digit per group.  The remainder it carries
# is exact, so a zero remainder at the end means a perfect power.

from digitroot import decompose, eth_root, isqrt_trace, phi
from digitroot.cli import render_trace

# The blocks for a fifth root of 3,200,000: seven digits padded to ten.

print(decompose(3200000, 5).blocks)

res = eth_root(3200000, 5, trace=True)
print(render_trace(res.trace))
print("root", res.root, "remainder", res.remainder, "perfect", res.perfect)

# A non-perfect neighbour keeps the same floor root but leaves a remainder.

print(eth_root(3200001, 5))

# Each digit is chosen as the largest `x` whose increment
# `(10R + x)^e - (10R)^e` still fits the remainder.  For squares this is
# the familiar `(20R + x) * x` test.

print([phi(2, 11, x) for x in range(10)])
_, rows = isqrt_trace(12321)
print(render_trace(rows))

# Large inputs are fine: the radicand below has a couple of hundred digits.

n = 987654321 ** 23 + 5
r = eth_root(n, 23)
print(r.root, r.remainder, r.iterations)
