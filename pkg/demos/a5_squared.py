"""Build the (15,5,5; 15,5,5) structure on A5 x A5 and print it."""

from beauville import a5_squared
from beauville.perm import format_cycles
from beauville.structure import genus, group_order

S = a5_squared()
for side, P in enumerate(S.triples, 1):
    print(f"side {side}, type {P.type}, genus {genus(group_order(5, 2), P.type)}")
    for j, T in enumerate(P.coords, 1):
        print(f"  coordinate {j}: x={format_cycles(T.x)}  y={format_cycles(T.y)}  z={format_cycles(T.z)}")
print("conditions:", S.report.conditions)
