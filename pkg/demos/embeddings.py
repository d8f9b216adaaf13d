"""
Which T(p') sit inside T(p)?
============================

The answer is the domination order on sorted triples.  A witness is a
strong exceptional sequence with the hom matrix of the canonical algebra.
"""

from nccount import canonical_gram, decide_embedding, gram_witness_search, to_quiver

print(decide_embedding((2, 2, 2), (2, 3, 5)))
print(decide_embedding((2, 3, 3), (2, 2, 9)))

# the canonical algebra of (2,1,1) has hom matrix
for row in canonical_gram((2, 1, 1)):
    print(row)

# and a collection realizing it inside D~4 = T(2,2,2)
wit = gram_witness_search((2, 1, 1), to_quiver((2, 2, 2)), 4)
print("witness:", [f"{o.dims}[{o.shift}]" for o in wit], "gram", wit.gram())

# no witness when the order says no
print(gram_witness_search((2, 2, 2), to_quiver((2, 1, 1)), 4))
