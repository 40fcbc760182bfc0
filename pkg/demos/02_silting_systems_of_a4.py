"""
Two-term silting complexes of A_4 as graded arc systems
=======================================================

On the derived side the disk has five green points m_0..m_4.  A 2-term
silting complex is a tree of four arcs with indices 0/1; the fan arcs at
m_0 decide whether the complex is tilting.
"""

from collections import Counter

from siltedan.complexes import endomorphism_algebra_of_complex, is_tilting_complex
from siltedan.derived import complexes_of, enumerate_2term_silting, h0, induced_graded_algebra
from siltedan.quiver import canonical_form, connected_components

n = 4
systems = enumerate_2term_silting(n)
print(len(systems), "graded arc systems")

non_tilting = [s for s in systems if not is_tilting_complex(complexes_of(s), n)]
print(len(non_tilting), "are not tilting")

# H0 of the graded algebra and End of the complex agree
for s in systems:
    a = h0(induced_graded_algebra(s))
    assert canonical_form(a) == canonical_form(endomorphism_algebra_of_complex(complexes_of(s), n))

# the non-tilting ones give products of two smaller tilted algebras
shapes = Counter()
for s in non_tilting:
    a = h0(induced_graded_algebra(s))
    sizes = sorted(len(c.vertices) for c in connected_components(a))
    shapes[canonical_form(a)] += 1
    arcs = ", ".join(g.label() for g in s.arcs)
    print(f"  {{{arcs}}}  components {sizes}")

print("systems per algebra class:", sorted(shapes.values(), reverse=True))
