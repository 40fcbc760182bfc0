"""
Tilted algebras of A_4 from triangulations
==========================================

Support tau-tilting modules over 1 -> 2 -> 3 -> 4 are triangulations of a
heptagon.  Those using the chord between the two extra points are tilting
modules, and their endomorphism algebras can be read off the triangles.
"""

from siltedan.modules import endomorphism_algebra
from siltedan.quiver import canonical_form
from siltedan.surface import (MarkedDisk, TiltedKind, classify_triangulation, enumerate_triangulations,
                              induced_algebra, module_of_triangulation, tilting_triangulations)

n = 4
disk = MarkedDisk(n)
print("boundary:", " ".join(disk.name(q) for q in range(disk.npoints)))

# all triangulations, and the subset through c_P(1) = (r1, r2)
every = enumerate_triangulations(n)
tilting = tilting_triangulations(n)
print(len(every), "triangulations,", len(tilting), "through (r1, r2)")

# the fan of green arcs at p gives back the quiver we started from
print("green fan quiver:", [(a.src, a.tgt) for a in disk.construction_algebra().arrows])

# read the algebra off the triangles; compare with End of the module
classes = {}
for t in tilting:
    geo = induced_algebra(t)
    end = endomorphism_algebra(module_of_triangulation(t).modules)
    assert canonical_form(geo) == canonical_form(end)
    classes.setdefault(canonical_form(geo), []).append(t)

print(len(classes), "isomorphism classes of tilted algebras")
for k, (form, ts) in enumerate(classes.items()):
    t = ts[0]
    kind = classify_triangulation(t)
    alg = induced_algebra(t)
    arrows = ", ".join(f"{a.src}->{a.tgt}" for a in alg.arrows)
    rel = f"  zero relations: {len(alg.relations)}" if kind is TiltedKind.NON_HEREDITARY else ""
    print(f"  class {k}: {len(ts)} triangulation(s), {kind.value}: {arrows}{rel}")
