"""
Trefoil invariant, exactly
==========================

The trefoil is the closure of three crossings.  We build the crossing and
channel-change matrices over Laurent polynomials with formal square roots,
multiply, and read off the (∅, ∅) element.
"""

# %%
from homfly_photonic import build_S, build_T, eval_word, two_strand_invariant
from homfly_photonic.ring import DEFAULT_BASIS

for i, d in enumerate(DEFAULT_BASIS.radicands, 1):
    print(f"D{i} = {d}")

# %% The channel-change matrix carries square roots of those radicands.
S = build_S()
print(S[0, 0])
print(S[0, 1])

# %% Three diagonal crossings sandwiched between S and its adjoint.
#
# ``T`` gives the mirror image of the usual trefoil; ``T^+`` gives the
# familiar A^2 - A^4 (q^2 + q^-2).
print("S T^3 S+  :", eval_word("S T^3 Sd").invariant)
print("S T+^3 S+ :", eval_word("S Td^3 Sd").invariant)

# %% The same number from the non-diagonal crossing alone.
r = two_strand_invariant(3)
print("Tnd^3     :", r.invariant)

# %% Each crossing carries a framing factor -A^2.  Dividing it out:
from homfly_photonic import framing_normalize

print("framing-normalized:", framing_normalize(r, 3).framing_normalized)
