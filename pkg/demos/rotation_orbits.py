"""
Rotating antidiagonals
======================

Moving every antidiagonal entry down and to the left, wrapping the bottom
entry to the top, keeps the weight.  The orbit size is the lcm of the cyclic
periods of the antidiagonal words.
"""

from partfreq import orbit, orbit_size, orbit_table, partition_count

lam = (20, 5, 5, 4, 2, 2, 1, 1, 1, 1, 1)
for step, mu in enumerate(orbit(lam, 2)):
    print(step, mu)
print("orbit size", orbit_size(lam, 2))

# orbit counts at n = 5k + 4 with modulus 5: every orbit size class
# has a partition count divisible by 5
print("n     sizes -> orbit counts")
for n in range(4, 40, 5):
    t = orbit_table(n, 5)
    counts = {k: t.o_count(k) for k in sorted(t.rows)}
    print(f"{n:<5d} {counts}")
    assert t.total == partition_count(n)
    assert all(t.p_count(k) % 5 == 0 for k in t.rows)
