"""
Counting genus-1 curves in extended Dynkin categories
=====================================================

For each weight triple p of Dynkin type the category T(p) is the derived
category of an extended Dynkin quiver.  Its genus-1 curves are counted here
and compared with p1 * p2 * p3.
"""

from nccount import builtin, count_Cl, to_quiver
from nccount.quiver import classify

for p in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 1)]:
    q = to_quiver(p)
    res = count_Cl(q, 1, 4)
    label = classify(q)[0].pretty()
    print(f"p={p}  {label:4}  curves={res.count:2}  p1*p2*p3={p[0] * p[1] * p[2]:2}  "
          f"stable={res.stable}")

# higher genus never occurs for affine quivers, but does for K(3)
print("D~4, genus 2:", count_Cl(to_quiver((2, 2, 2)), 2, 5).count)
print("K(3), genus 2:", count_Cl(builtin("K(3)"), 2, 3).count)
