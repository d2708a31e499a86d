"""Elementary tilting complexes over the basic block algebra A(p, r) of (C_p x C_p) x| C_r.

Submodules:
    fp       dense linear algebra over F_p
    algebra  the algebra A(p, r), homogeneous maps between projectives, quivers
    tilt     complexes, the tilting complex T(I0), homotopy classes of chain maps
    catalog  named chain maps between the components of T(I0)
    endo     End_K(T): multiplication, radical, quiver, Cartan matrix, generation
    cli      command-line front end
"""
from .algebra import (
    BlockParams,
    HomGenerator,
    HomSpace,
    Quiver,
    compose_hom,
    eigen_generators,
    hom_basis,
    make_algebra,
    multiply,
    quiver_of_block,
    residue_sub,
)
from .tilt import (
    ChainMap,
    arc_decomposition,
    build_tilting_complex,
    hom_K,
    is_chain_map,
    is_null_homotopic,
    minimal_kernel,
    verify_tilting,
)
from .catalog import CatalogMapId, applicable_ids, build_map, mid, verify_catalog
from .endo import (
    cartan_matrix,
    compose_chain_maps,
    endomorphism_algebra,
    generated_subspace,
    generation_report,
    quiver_of_endo,
    radical,
)

__version__ = "0.1.0"
