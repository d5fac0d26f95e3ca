"""Relation checking for the catalog representation families.

Evaluates each family against its finite presentation (exactly in SL2 and
up to sign in PSL2), closes the finite-image pair into its 12-element
projective group, and checks that the five local monodromies of each
generic-line row multiply to the identity.
"""

from quintic_garnier import (builtin_family, projective_closure,
                             verify_product_identity, verify_relations,
                             irreducibility_witness)
from quintic_garnier.ring import serialize_poly

print("=== presentations and matrix families ===")
for name in ("plane_case1", "plane_case2", "plane_case3",
             "b3_nonrigid", "b4_family", "gamma3_finite",
             "gamma3p_fam1", "gamma3p_fam2"):
    fam = builtin_family(name)
    rep = verify_relations(fam.presentation, fam.assignment)
    print(f"{name:16s} presentation={fam.presentation.name:9s} "
          f"sl2={rep.sl2_pass} psl2={rep.projective_pass}")

print("\n=== the finite-image pair closes to a 12-element group ===")
g3 = builtin_family("gamma3_finite")
res = projective_closure([g3.assignment["a"], g3.assignment["b"]], cutoff=100)
print("closure:", res)

print("\n=== five local monodromies on a generic line ===")
for name in ("line_case1", "line_case2", "line_case3a", "line_case3b"):
    fam = builtin_family(name)
    verdict = verify_product_identity(fam.five)
    line = f"{name}: product identity {verdict}"
    if fam.corrected_five is not None:
        fixed = verify_product_identity(fam.corrected_five)
        line += f" -> corrected fifth matrix: {fixed}"
    print(line)

print("\n=== irreducibility witnesses (commutator trace defects) ===")
wit = irreducibility_witness(builtin_family("rho2").rep)
for pair, val in wit.items():
    print(f"  pair {pair}: {serialize_poly(val)}")
