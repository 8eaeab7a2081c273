# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Perfect power checks
#
# A modulus that is a perfect power `r^e` is structurally weak.  The scan
# tries every exponent from `floor(log2 n)` down to 2 and reports the
# witness with the largest exponent.

import random

from digitroot import all_perfect_powers, is_perfect_power, scan_perfect_power

print(scan_perfect_power(64), all_perfect_powers(64))
print(is_perfect_power(125, 3), is_perfect_power(127, 2))

# A product of two random 64-bit primes should never show up as a power,
# while a planted power is found immediately.

rng = random.Random(7)


def random_prime(bits):
    while True:
        c = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if all(pow(a, c - 1, c) == 1 for a in (2, 3, 5, 7, 11, 13)):
            return c


modulus = random_prime(64) * random_prime(64)
print(modulus, scan_perfect_power(modulus))
print(scan_perfect_power(random_prime(40) ** 3))
