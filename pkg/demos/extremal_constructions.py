"""
The four extremal graphs and their closed forms
===============================================

Among connected graphs on n vertices with exactly k cut edges, four named
graphs attain the extreme values of the two indices. This script builds
them and compares each one with its closed form, far beyond the sizes
that could ever be enumerated.
"""

# %%
from multzagreb import ClassSpec, c_n_p, c_n_s, k_n_p, k_n_s, pi1, pi2
from multzagreb.constructors import bound_thm31, bound_thm32, bound_thm41, bound_thm42

spec = ClassSpec(7, 2)
for name, build in [("C_n^S", c_n_s), ("C_n^P", c_n_p), ("K_n^S", k_n_s), ("K_n^P", k_n_p)]:
    g = build(spec)
    print(f"{name}: m={g.m:2d}  degrees={g.degrees()}")

# %%
# Minimum of PI1 comes from the cycle with k leaves on one vertex, minimum of
# PI2 from the cycle with a tail of length k. The clique versions swap
# roles for the maxima.
pairs = [
    ("min PI1", pi1(c_n_s(spec)), bound_thm31(spec)),
    ("min PI2", pi2(c_n_p(spec)), bound_thm32(spec)),
    ("max PI1", pi1(k_n_p(spec)), bound_thm41(spec)),
    ("max PI2", pi2(k_n_s(spec)), bound_thm42(spec)),
]
for label, got, closed in pairs:
    print(f"{label}: construction={got}  closed form={closed}  equal={got == closed}")

# %%
# The minimum of PI2 does not depend on k at all: 27 * 4**(n - 2).
print({k: pi2(c_n_p(ClassSpec(9, k))) for k in range(1, 7)})

# %%
# Python integers are unbounded, so the comparison stays exact at n = 30.
big = ClassSpec(30, 11)
print(len(str(pi2(k_n_s(big)))), "digits, equal:", pi2(k_n_s(big)) == bound_thm42(big))
