# %% [markdown]
# # Exact arithmetic in Q(zeta_p) and characters of Z_p
#
# Every number in the pipeline is either a rational or an element of a
# cyclotomic field, stored in the power basis modulo the cyclotomic
# polynomial.  No floating point is involved anywhere.

# %%
from fractions import Fraction

from swmodp.cyclotomic import CycloNum, galois, half_power, inverse, root_of_unity
from swmodp.rep_ring import CharacterVector, RepElement, character, characters, from_characters

z = lambda a: root_of_unity(3, a)
x = z(2) - z(1)
print("x       =", x)
print("x^2     =", x * x)
print("1/x     =", inverse(x))
print("x * 1/x =", x * inverse(x))

# %% [markdown]
# Square roots of roots of unity are chosen inside the same group of p-th
# roots: for odd p, zeta^(a/2) = zeta^(a (p+1)/2).

# %%
for p in (3, 5, 7):
    h = half_power(p, 1)
    print(f"p={p}: sqrt(zeta) = {h};  squared back: {h * h == root_of_unity(p, 1)}")

# %% [markdown]
# A virtual representation sum k_j C_j is its multiplicity vector.  Characters
# are a discrete Fourier transform; the inverse insists on integrality.

# %%
r = RepElement(5, (2, -1, 0, 3, 1))
chi = characters(r)
for k, v in enumerate(chi.values):
    print(f"chi(g^{k}) = {v}")
print("roundtrip:", from_characters(chi) == r)
print("conjugation:", character(r, 4) == galois(character(r, 1), -1))

# %%
try:
    from_characters(CharacterVector(3, (1, 0, 0)))
except ValueError as err:
    print("rejected:", err)
