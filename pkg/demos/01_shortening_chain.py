# %% [markdown]
# # From a classical MDS code to a family of qudit codes
#
# Start from a Reed-Solomon-type generator over GF(5), turn it into a
# 3-uniform state on six qudits, then trade entanglement for logical qudits
# one site at a time.

# %%
from __future__ import annotations

import numpy as np

from qecc_forge import field_new, is_mds, mds_generator, shortening_chain, uniformity
from qecc_forge.pauli import format_pauli

F = field_new(5, gamma=3)
G = mds_generator(F, 3, 6)
print(G.matrix.array)
print("MDS:", is_mds(G))

# %% [markdown]
# The seed state is the uniform superposition over all 125 codewords of G.
# Every 3-site marginal is maximally mixed, so it is AME(6,5).

# %%
chain = shortening_chain(G)
seed = chain[0]
print(seed.name, "terms:", len(seed.codewords[0]), "uniformity:", uniformity(seed.codewords[0]))

# %% [markdown]
# Each shortening step removes one site and one generator row.  The shift
# operators M_j move between codewords and become the logical X operators.

# %%
for code in chain[1:]:
    print(code.name)
    print("  logical X:", [format_pauli(P) for P in code.logical_x])
    print("  logical Z:", [format_pauli(P) for P in code.logical_z])
    print("  stabilizers:", len(code.stabilizers))
    u = {uniformity(c) for c in code.codewords}
    print("  codeword uniformity:", u)

# %% [markdown]
# The codewords of [[5,1,3]]_5 are orthogonal: their supports are disjoint
# cosets of the shortened classical code.

# %%
code = chain[1]
supports = [set(c.as_dict()) for c in code.codewords]
overlaps = np.array([[len(a & b) for b in supports] for a in supports])
print(overlaps)
