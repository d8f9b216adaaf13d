"""
The Kronecker quiver and its ladder
===================================

Two vertices, two parallel arrows.  Its exceptional objects line up in a
single doubly infinite ladder, and every strong pair with hom 2 sits on it.
"""

from nccount import builtin, classify, enumerate_exceptional, left_mutation, right_mutation
from nccount.curves import count_Cl
from nccount.derived import projective_collection

k2 = builtin("K(2)")
print(classify(k2)[0].pretty(), "null root", classify(k2)[0].null_root)

# projectives P2 = (0,1) and P1 = (1,2), ordered sink first
p2, p1 = projective_collection(k2)
print("projectives:", p2, p1)

# mutate left and right a few times: dims go (n, n+1) one way, (n+1, n) the other
left = left_mutation(p2, p1)
right = right_mutation(p2, p1)
print("L_P2 P1 =", left, "  R_P1 P2 =", right)

# windowed enumeration; the window bounds every dimension entry
objs = enumerate_exceptional(k2, 5)
print(len(objs), "exceptional objects with entries <= 5:", objs.dims())

# one curve of genus 1: the whole category
res = count_Cl(k2, 1, 5)
curve = res.curves[0]
print("genus-1 curves:", res.count)
print("ladder:", [f"{o.dims}[{o.shift}]" for o in curve.ladder])

# the triangles s_{i-1} -> s_i^2 -> s_{i+1} leave their shadow in K_0
for a, b, c in zip(curve.ladder, curve.ladder[1:], curve.ladder[2:]):
    assert [x + z for x, z in zip(a.k0_class(), c.k0_class())] == [2 * y for y in b.k0_class()]
print("K_0 ladder relation holds on", len(curve.ladder) - 2, "triples")
