"""
Part-frequency matrices and Glaisher's map
==========================================

Each part is written as j * m**k with m not dividing j.  The multiplicity of
that part, in base m, fills row k of the matrix for j.
"""

from partfreq import from_partition, glaisher, to_partition

lam = (15, 15, 15, 10, 10, 8, 6)
M = from_partition(lam, 2)

# one matrix per odd j; digit (k, l) counts copies of j * 2**(k + l)
for j in sorted(M.matrices):
    print(f"M_{j} =")
    print(M.dense(j))

assert to_partition(M) == lam

# transposing every matrix is Glaisher's bijection; odd parts go to distinct parts
mu = glaisher((7, 5, 5, 3, 3, 3, 1, 1), 2)
print("7,5,5,3,3,3,1,1 ->", mu)
print("distinct parts:", len(set(mu)) == len(mu))
assert glaisher(mu, 2) == (7, 5, 5, 3, 3, 3, 1, 1)

# at m = 3 four ones (base 3: 11) become one 3 and one 1
print(glaisher((1, 1, 1, 1), 3))
