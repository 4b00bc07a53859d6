"""Tensor products and Littlewood-Richardson coefficients two ways.

The tensor of two ptableaux concatenates rows (with relabeled content).
A tensor with a highest weight left factor is itself highest weight
exactly when it is partition shaped, and counting the right factors that
achieve a given shape computes the Littlewood-Richardson coefficient.
The classical skew-filling enumeration is kept alongside as an
independent check.
"""
from ptableaux import (
    classical_lr_fillings,
    component,
    highest_weight_ptableau,
    is_partition_shaped,
    lr_table,
    shape,
    tensor,
)

mu, nu = (2, 1), (2, 1)
n = 3

g_mu = component(highest_weight_ptableau(mu, rows=n))
g_nu = component(highest_weight_ptableau(nu, rows=n))
print(f"components built: |B_mu| = {len(g_mu)}, |B_nu| = {len(g_nu)}")

t_max = g_mu.highest_weight_node
print("\nhighest weight left factor:")
print(t_max.to_text())

print("\nhighest weight tensor elements and their shapes:")
for node in g_nu.nodes:
    prod = tensor(t_max, node)
    if is_partition_shaped(prod):
        print(f"  shape {shape(prod)} from right factor {node.to_text()!r}")

print("\ncoefficient table (crystal count vs classical fillings):")
for lam, count in sorted(lr_table(g_mu, g_nu).items()):
    classical = len(classical_lr_fillings(lam, mu, nu))
    print(f"  {lam}: {count} vs {classical}")

print("\none classical filling of (3,2,1)/(2,1) with content (2,1):")
print(classical_lr_fillings((3, 2, 1), (2, 1), (2, 1))[0])
