# %% [markdown]
# # Keeping the codewords maximally entangled
#
# Plain shortening lowers the uniformity of each codeword by one.  The
# modified construction replaces the shift operator by M~, a product of an
# X-string and a single Z on the last site, and keeps every codeword AME.

# %%
from __future__ import annotations

from qecc_forge import field_new, mds_generator, modified_shorten, mtilde, shorten, uniformity
from qecc_forge.pauli import format_pauli

for q, gamma in [(3, None), (5, 3)]:
    F = field_new(q, gamma)
    print(f"GF({q}):  M~ = {format_pauli(mtilde(F))}")

# %% [markdown]
# Side by side for n = q + 1 over GF(3) and GF(5).

# %%
for q, gamma in [(3, None), (5, 3)]:
    F = field_new(q, gamma)
    n = q + 1
    plain = shorten(mds_generator(F, n // 2, n), 1)
    modified = modified_shorten(F)
    for label, code in [("shortening", plain), ("modified", modified)]:
        u = min(uniformity(c) for c in code.codewords)
        print(f"{label:>10s}  {code.name:<12s} codeword uniformity {u}")

# %% [markdown]
# The modified codewords carry nontrivial phases: M~ multiplies each term by
# a power of omega set by the value on the last site.

# %%
code = modified_shorten(field_new(3))
for label, cw in zip(code.labels, code.codewords):
    terms = sorted(cw.as_dict().items())[:3]
    print(label, terms, "...")
