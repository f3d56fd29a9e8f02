"""
Distances under the two rearrangement models
=============================================

A block transposition cuts a permutation at three points i < j < k and
exchanges the two adjacent blocks in the middle; the prefix variant forces
the left block to start at position 1. Each model turns "how many operations
does sorting take" into an exact distance on permutations.
"""

from permball import (
    apply_transposition,
    distance,
    neighbors,
    pairwise_distance,
    parse_perm,
    format_perm,
)

# One elementary operation: exchange the blocks 4 and 52 inside 1345267.
p = parse_perm("1345267")
q = apply_transposition(p, (3, 4, 7))
print(f"{format_perm(p)} with cuts (3,4,7) -> {format_perm(q)}")

# The same permutation is one block transposition from sorted, but two
# prefix transpositions: the prefix constraint genuinely costs moves.
print("td(1324)  =", distance(parse_perm("1324"), "td"))
print("ptd(1324) =", distance(parse_perm("1324"), "ptd"))

# 1352647 needs two block transpositions, no matter how clever the choice.
print("td(1352647) =", distance(q, "td"))

# Everything one operation away from 213, in both models.
for model in ("td", "ptd"):
    around = neighbors(parse_perm("213"), model)
    print(f"neighbors of 213 under {model}: {[format_perm(r) for r in around]}")

# Distances between two permutations reduce to sorting distances because the
# operations act on positions: relabelling both sides changes nothing.
a, b = parse_perm("24135"), parse_perm("31425")
print("pairwise td :", pairwise_distance(a, b, "td"))
print("pairwise ptd:", pairwise_distance(a, b, "ptd"))
