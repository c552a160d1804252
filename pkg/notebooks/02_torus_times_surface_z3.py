# %% [markdown]
# # Z_3 acting on T^2 x Sigma_g
#
# g rotates the torus T_1 = C/(Z + zeta Z) by zeta (three fixed points) and
# acts on a genus-g surface with two fixed points of opposite rotation.  The
# product has six isolated fixed points, three of each type.

# %%
from swmodp.index_engine import build_index_table, character_values
from swmodp.oracles import build_example, sw_torus_surface
from swmodp.orbit import orbit_report
from swmodp.vanishing import check_main

spec, expected = build_example("t2_sigma3h_z3", h=1)
print(spec.global_)
for c in spec.fixed_components:
    print("  fixed point, weights", (c.w1, c.w2))

# %% [markdown]
# Nine Jacobian fixed components come from the flat Z_3-line bundles on each
# factor.  At every one of them the fixed-point contributions cancel, so the
# equivariant index is zero in every weight.

# %%
table = build_index_table(spec)
for label, row, jc in zip(table.labels, table.rows, spec.jacobian_components):
    chars = character_values(spec, jc)
    print(f"{label:18s} k = {row}   chi(g) = {chars[1]}")

# %%
orb = orbit_report(spec)
print("chi(X/G) =", orb.euler_orbit, " Sign(X/G) =", orb.sign_orbit, " m =", orb.m_quantity)
verdict = check_main(spec, table, cross_check=True)
print(verdict.status.value, verdict.witness_partition)
print("\n".join(verdict.narrative))

# %% [markdown]
# The invariant itself is known: |SW| = C(2g-2, g-1).  It is divisible by 3
# for g = 3h, as the criterion predicts; for g = 2 it is 2 and the criterion
# correctly stays silent.

# %%
for h in (1, 2, 3):
    print(f"g = {3 * h}: |SW| = {sw_torus_surface(3 * h)}, mod 3 = {sw_torus_surface(3 * h) % 3}")

spec2, _ = build_example("t1_sigma2_z3")
v2 = check_main(spec2)
print("\nT_1 x Sigma_2:", v2.status.value, f"|SW| = {sw_torus_surface(2)}")
for j, label in v2.violating_pairs:
    print(f"  2 k_{j} >= m at {label}")
