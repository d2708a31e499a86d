"""Walk through the tilting complex for p=5, r=4, I0={0,1,3}.

Prints the block quiver, the complex, its Hom table, a few named maps, the
relations among them and the quiver of the endomorphism algebra.
"""
import numpy as np

from elemtilt.algebra import make_algebra, quiver_of_block
from elemtilt.catalog import build_map, mid
from elemtilt.endo import cartan_matrix, compose_chain_maps, endomorphism_algebra, quiver_of_endo, radical
from elemtilt.tilt import build_tilting_complex, hom_dim, is_null_homotopic

P = make_algebra(5, 4)
I0 = (0, 1, 3)

print("block quiver arrows:", quiver_of_block(P).arrows())

T = build_tilting_complex(P, I0)
for comp in T:
    print(comp.describe())

H = np.array([[hom_dim(a, b) for b in T] for a in T])
print("dim Hom_K(T_i, T_j):\n", H, "\ntotal", H.sum())


def named(tag, **site):
    return build_map(P, I0, mid(tag, **site)).map


gamma = named("C2", arc=2, t=2, q=1)
eta1, eta3 = named("D1", arc=2, t=2), named("D2", arc=2, t=2)
print("\ngamma:", gamma.describe())
print("eta1: ", eta1.describe())

g = gamma
for n in range(2, 6):
    g = compose_chain_maps(g, gamma)
    print(f"gamma^{n} null-homotopic: {is_null_homotopic(g)}")

g4 = compose_chain_maps(compose_chain_maps(gamma, gamma), compose_chain_maps(gamma, gamma))
print("eta1 eta3 - gamma^4 null:", is_null_homotopic(compose_chain_maps(eta3, eta1) - g4))

E = endomorphism_algebra(T)
rad = radical(E)
print(f"\ndim End = {E.dim}, dim rad = {rad.dim}")
print("Cartan matrix of End T:\n", cartan_matrix(E))
print("quiver of End T (src, tgt, count):", quiver_of_endo(E, rad).arrows())
