# %% [markdown]
# # Involutions: the Fermat K3 and the 4-torus
#
# Both lift to the spinor bundle as Z_4 actions ("odd type") and fix only
# surfaces.  The surface contributions vanish identically, so the index
# splits evenly between the two Z_4 weights.

# %%
from swmodp.gmanifold import emit_spec
from swmodp.index_engine import build_index_table, character_values
from swmodp.oracles import build_example
from swmodp.orbit import orbit_report
from swmodp.vanishing import adjunction_conclusion, check_main

for name in ("fermat_k3_z2", "four_torus_z2"):
    spec, exp = build_example(name)
    table = build_index_table(spec)
    orb = orbit_report(spec)
    v = check_main(spec)
    adj = adjunction_conclusion(spec)
    print(f"== {name}")
    print(f"  chi(X/G) = {orb.euler_orbit}, Sign(X/G) = {orb.sign_orbit}, m = {orb.m_quantity}")
    print(f"  rows (k_1, k_3): {sorted(set(table.rows))}")
    print(f"  verdict: {v.status.value}, e = {v.e}, B = {v.B}")
    print(f"  adjunction: {adj.lhs} >= {adj.rhs} -> {adj.holds}")
    print(f"  known |SW| = {exp.sw_magnitude}")

# %% [markdown]
# The K3 sits exactly on the boundary: the criterion asks for 2 < 2.  Since
# SW(K3) = +-1 is odd, nothing sharper could hold.

# %%
spec, _ = build_example("fermat_k3_z2")
print([str(v) for v in character_values(spec, spec.jacobian_components[0])])
print(emit_spec(spec))
